#include "salemlab/sturm.hpp"

#include <algorithm>

namespace salemlab {

namespace {

// Remainder of a/b over Q as a primitive integer polynomial carrying the
// sign of the true rational remainder.
IntPoly q_rem_primitive(const IntPoly& a, const IntPoly& b) {
    std::vector<mpq_class> rem(a.coeffs().begin(), a.coeffs().end());
    int da = a.degree(), db = b.degree();
    const mpq_class lead(b.leading());
    for (int k = da - db; k >= 0; --k) {
        mpq_class qc = rem[k + db] / lead;
        if (qc != 0)
            for (int j = 0; j <= db; ++j) rem[k + j] -= qc * mpq_class(b.coeff(j));
        rem[k + db] = 0;
    }
    mpz_class den = 1;
    for (auto& v : rem) {
        v.canonicalize();
        mpz_class d = v.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> zi(rem.size());
    for (size_t i = 0; i < rem.size(); ++i) {
        mpq_class s = rem[i] * mpq_class(den);
        s.canonicalize();
        zi[i] = s.get_num();
    }
    IntPoly r{std::move(zi)};
    return r.is_zero() ? r : r.primitive_part();
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<IntPoly> chain;
    IntPoly f = squarefree.primitive_part();
    if (f.is_zero()) throw Error("sturm_chain: zero polynomial");
    chain.push_back(f);
    if (f.degree() == 0) return chain;
    chain.push_back(f.derivative().primitive_part());
    while (chain.back().degree() > 0) {
        IntPoly r = q_rem_primitive(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;  // only for non-squarefree input
        chain.push_back(-r);
    }
    return chain;
}

int sturm_variations(const std::vector<IntPoly>& chain, const mpq_class& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(p.sign_at(x));
    return variations(s);
}

int sturm_variations_pos_inf(const std::vector<IntPoly>& chain) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sgn(p.leading()));
    return variations(s);
}

int sturm_variations_neg_inf(const std::vector<IntPoly>& chain) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain)
        s.push_back(p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading()));
    return variations(s);
}

int count_real_roots_open(const IntPoly& squarefree, const mpq_class& a,
                          const mpq_class& b) {
    if (a >= b) return 0;
    if (squarefree.sign_at(a) == 0 || squarefree.sign_at(b) == 0)
        throw Error("count_real_roots_open: endpoint is a root");
    auto chain = sturm_chain(squarefree);
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

int count_real_roots_above(const IntPoly& squarefree, const mpq_class& a) {
    if (squarefree.sign_at(a) == 0)
        throw Error("count_real_roots_above: endpoint is a root");
    auto chain = sturm_chain(squarefree);
    return sturm_variations(chain, a) - sturm_variations_pos_inf(chain);
}

mpq_class cauchy_root_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return 1;
    mpq_class lead(abs(p.leading()));
    mpq_class m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class a = mpq_class(abs(p.coeff(i))) / lead;
        if (a > m) m = a;
    }
    return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree,
                                             const mpq_class& lo, const mpq_class& hi) {
    std::vector<RootInterval> out;
    if (lo >= hi) return out;
    auto chain = sturm_chain(squarefree);

    // Walk (a,b) segments, splitting until each holds one root. Exact rational
    // midpoints; midpoint roots become degenerate intervals.
    struct Seg {
        mpq_class a, b;
        int va, vb;
    };
    if (squarefree.sign_at(lo) == 0 || squarefree.sign_at(hi) == 0)
        throw Error("isolate_real_roots: endpoint is a root");
    std::vector<Seg> stack{{lo, hi, sturm_variations(chain, lo), sturm_variations(chain, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int n = s.va - s.vb;
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        mpq_class mid = (s.a + s.b) / 2;
        if (squarefree.sign_at(mid) == 0) {
            out.push_back({mid, mid});
            // nudge around the exact root: roots are simple, so a small split works
            mpq_class eps = (s.b - s.a) / 1024;
            mpq_class ml = mid - eps, mr = mid + eps;
            while (squarefree.sign_at(ml) == 0) ml = (s.a + ml) / 2;
            while (squarefree.sign_at(mr) == 0) mr = (mr + s.b) / 2;
            stack.push_back({s.a, ml, s.va, sturm_variations(chain, ml)});
            stack.push_back({mr, s.b, sturm_variations(chain, mr), s.vb});
        } else {
            int vm = sturm_variations(chain, mid);
            stack.push_back({s.a, mid, s.va, vm});
            stack.push_back({mid, s.b, vm, s.vb});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval refine_root(const IntPoly& squarefree, RootInterval iv, const mpq_class& width) {
    if (iv.lo == iv.hi) return iv;
    int slo = squarefree.sign_at(iv.lo);
    while (iv.hi - iv.lo > width) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        int sm = squarefree.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

}  // namespace salemlab
