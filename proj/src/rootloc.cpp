#include "salemlab/rootloc.hpp"

#include <algorithm>
#include <cmath>

#include "salemlab/sturm.hpp"

namespace salemlab {

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
    IntPoly f = p.normalized();
    if (f.degree() == 0) return IntPoly::one();
    IntPoly g = poly_gcd(f, f.derivative());
    return div_exact(f, g).normalized();
}

IntPoly circle_transform(const IntPoly& f) {
    if (f.is_zero() || f.degree() % 2 != 0 || f.constant_term() == 0)
        throw Error("circle_transform: need even-degree f with f(0) != 0");
    if (reciprocal_class(f) != ReciprocalClass::Reciprocal)
        throw Error("circle_transform: f must be reciprocal");
    const int d = f.degree() / 2;
    // z^-d f = c_d + sum_{j>=1} c_{d+j} (z^j + z^-j); z^j + z^-j = V_j(z + 1/z)
    IntPoly T = IntPoly::monomial(0, f.coeff(d));
    IntPoly Vprev{2}, V = IntPoly::variable();
    for (int j = 1; j <= d; ++j) {
        T += f.coeff(d + j) * V;
        IntPoly Vnext = IntPoly::variable() * V - Vprev;
        Vprev = V;
        V = Vnext;
    }
    return T;
}

namespace {

struct SqfCounts {
    int inside = 0, on = 0, outside = 0;
    bool exact = true;
};

// Schur-Cohn count of roots in |z| < 1 for a squarefree q with q(0) != 0 and
// no roots on the circle (the caller has split those off). Exact over Z with
// content stripping. Throws Degenerate on a singular step.
int schur_cohn_inside(IntPoly q) {
    q = q.primitive_part();
    const int n = q.degree();
    if (n <= 0) return 0;
    if (q.constant_term() == 0)
        throw Degenerate("schur_cohn: zero constant term");
    mpz_class a0 = q.constant_term(), an = q.leading();
    mpz_class delta = a0 * a0 - an * an;
    if (delta == 0) {
        // |a0| == |a_n|: try splitting off the factor of (rho, -1/rho) pairs;
        // it holds exactly deg/2 inside roots and its removal usually breaks
        // the tie.
        IntPoly balanced = poly_gcd(q, q.reversed().flipped());
        if (balanced.degree() >= 1 && balanced.degree() % 2 == 0)
            return balanced.degree() / 2 + schur_cohn_inside(div_exact(q, balanced));
        throw Degenerate("schur_cohn: singular step (|a0| == |a_n|)");
    }
    IntPoly q1 = a0 * q - an * q.reversed();
    if (q1.is_zero()) throw Degenerate("schur_cohn: self-inversive residue");
    int c1 = schur_cohn_inside(std::move(q1));
    return delta > 0 ? c1 : n - c1;
}

int numeric_inside(const IntPoly& g, bool* straddled) {
    auto disks = all_roots(g);
    int cnt = 0;
    for (const auto& d : disks) {
        if (d.side == CertifiedRoot::Side::Inside)
            ++cnt;
        else if (d.side == CertifiedRoot::Side::Straddle)
            *straddled = true;
    }
    return cnt;
}

// Exact profile of a squarefree g (content-free). Numeric fallback only when
// Schur-Cohn degenerates.
SqfCounts squarefree_counts(IntPoly g) {
    SqfCounts r;
    int v = g.trailing_zeros();
    if (v) {
        r.inside += v;  // z = 0
        g = IntPoly(std::vector<mpz_class>(g.coeffs().begin() + v, g.coeffs().end()));
    }
    if (g.degree() <= 0) return r;

    // z = +-1 by direct evaluation
    for (long s : {1L, -1L}) {
        if (g(mpz_class(s)) == 0) {
            r.on += 1;
            g = div_exact(g, IntPoly({-s, 1}));
        }
    }
    if (g.degree() <= 0) return r;

    // circle roots and reciprocal pairs live in gcd(g, reverse(g))
    IntPoly f = poly_gcd(g, g.reversed());
    IntPoly q = div_exact(g, f);
    q = q.primitive_part();

    if (f.degree() >= 1) {
        // f is reciprocal (up to sign); z=+-1 already stripped, so the sign is +
        // and the degree even.
        if (reciprocal_class(f) != ReciprocalClass::Reciprocal || f.degree() % 2 != 0)
            throw Error("squarefree_counts: unexpected reciprocal structure");
        IntPoly T = circle_transform(f);
        const int d = f.degree() / 2;
        int on_pairs = count_real_roots_open(T, mpq_class(-2), mpq_class(2));
        r.on += 2 * on_pairs;
        r.inside += d - on_pairs;
        r.outside += d - on_pairs;
    }

    if (q.degree() >= 1) {
        int inside_q;
        try {
            inside_q = schur_cohn_inside(q);
        } catch (const Degenerate&) {
            bool straddled = false;
            inside_q = numeric_inside(q, &straddled);
            if (straddled)
                throw Degenerate(
                    "count_inside: Schur-Cohn degenerate and numeric disks straddle the circle");
            r.exact = false;
        }
        r.inside += inside_q;
        r.outside += q.degree() - inside_q;  // q has no circle roots
    }
    return r;
}

}  // namespace

int count_on_unit_circle(const IntPoly& p) {
    if (p.is_zero()) throw Error("count_on_unit_circle: zero polynomial");
    if (p.degree() == 0) return 0;
    int total = 0;
    for (const auto& [g, mult] : squarefree_decomposition(p))
        total += mult * squarefree_counts(g).on;
    return total;
}

InsideCount count_inside_unit_disk(const IntPoly& p) {
    if (p.is_zero()) throw Error("count_inside_unit_disk: zero polynomial");
    InsideCount r;
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        SqfCounts c = squarefree_counts(g);
        r.count += mult * c.inside;
        r.exact = r.exact && c.exact;
    }
    return r;
}

RootProfile circle_classification(const IntPoly& p) {
    if (p.is_zero()) throw Error("circle_classification: zero polynomial");
    RootProfile prof;
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        SqfCounts c = squarefree_counts(g);
        prof.inside_count += mult * c.inside;
        prof.on_count += mult * c.on;
        prof.outside_count += mult * c.outside;
        prof.exact = prof.exact && c.exact;
        auto disks = all_roots(g);
        prof.roots.insert(prof.roots.end(), disks.begin(), disks.end());
    }
    if (prof.inside_count + prof.on_count + prof.outside_count != p.degree())
        throw Error("circle_classification: count invariant violated");
    return prof;
}

MahlerMeasure mahler_measure(const IntPoly& p) {
    if (p.is_zero()) throw Error("mahler_measure: zero polynomial");
    MahlerMeasure m;
    m.value = std::abs(p.leading().get_d());
    double rel_err = 0.0;
    if (p.degree() == 0) return m;
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        SqfCounts c = squarefree_counts(g);
        auto disks = all_roots(g);
        double fac = 1.0, fac_err = 0.0;
        int outside_seen = 0;
        for (const auto& d : disks) {
            if (d.side != CertifiedRoot::Side::Outside) continue;
            ++outside_seen;
            double mod = std::abs(d.center);
            fac *= mod;
            fac_err += d.radius / (mod - d.radius);
        }
        // A disk containing a modulus-1 root can never classify strictly
        // Outside, so a shortfall means a genuinely outside root straddles.
        if (outside_seen != c.outside)
            throw PrecisionUnreachable("mahler_measure: disk sides inconsistent with exact counts");
        for (int i = 0; i < mult; ++i) {
            m.value *= fac;
            rel_err += fac_err;
        }
    }
    m.error = m.value * (std::expm1(rel_err) + 1e-15) + 1e-300;
    return m;
}

std::optional<double> max_real_root_above_one(const IntPoly& p) {
    if (p.is_zero()) throw Error("max_real_root_above_one: zero polynomial");
    if (p.degree() < 1) return std::nullopt;
    IntPoly f = squarefree_part(p);
    if (f(mpz_class(1)) == 0) f = div_exact(f, IntPoly({-1, 1}));
    if (f.degree() < 1) return std::nullopt;
    mpq_class bound = cauchy_root_bound(f) + 1;
    if (count_real_roots_above(f, mpq_class(1)) == 0) return std::nullopt;
    auto ivs = isolate_real_roots(f, mpq_class(1), bound);
    if (ivs.empty()) return std::nullopt;
    RootInterval top = ivs.back();
    top = refine_root(f, top, mpq_class(1, 1000000000000000LL));  // 1e-15 exact width
    double x = (top.lo.get_d() + top.hi.get_d()) / 2;
    // Newton polish in double for the last bits
    for (int i = 0; i < 3; ++i) {
        double pv = 0, dv = 0;
        for (int k = f.degree(); k >= 0; --k) {
            dv = dv * x + pv;
            pv = pv * x + f.coeff(k).get_d();
        }
        if (dv != 0) {
            double nx = x - pv / dv;
            if (std::isfinite(nx) && std::abs(nx - x) < 1e-9) x = nx;
        }
    }
    return x;
}

}  // namespace salemlab
