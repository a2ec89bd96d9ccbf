#include "salemlab/classify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "salemlab/sturm.hpp"

namespace salemlab {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pisot: return "Pisot";
        case Verdict::Salem: return "Salem";
        case Verdict::CyclotomicProduct: return "CyclotomicProduct";
        case Verdict::Neither: return "Neither";
    }
    return "?";
}

IntPoly strip_cyclotomic_factors(const IntPoly& p, IntPoly* removed) {
    IntPoly f = p;
    IntPoly rem = IntPoly::one();
    if (f.is_zero() || f.degree() == 0) {
        if (removed) *removed = rem;
        return f;
    }
    // phi(n) >= sqrt(n/2), so phi(n) <= d forces n <= 2 d^2 + 2.
    const int dmax = f.degree();
    const int nmax = 2 * dmax * dmax + 2;
    for (int n = 1; n <= nmax && f.degree() >= 1; ++n) {
        if (euler_phi(n) > f.degree()) continue;
        const IntPoly& cyc = cyclotomic(n);
        while (f.degree() >= cyc.degree()) {
            try {
                IntPoly q = div_exact(f, cyc);
                f = std::move(q);
                rem = rem * cyc;
            } catch (const NotDivisible&) {
                break;
            }
        }
    }
    if (removed) *removed = rem;
    return f;
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive only for desk-scale constants; returns nullopt when the divisor
// enumeration would be unreasonable.
std::optional<bool> has_rational_root(const IntPoly& p) {
    if (p.constant_term() == 0) return true;  // z | p
    if (abs(p.constant_term()) > 1000000000000L || abs(p.leading()) > 1000000L)
        return std::nullopt;
    for (const auto& num : positive_divisors(p.constant_term()))
        for (const auto& den : positive_divisors(p.leading())) {
            mpq_class r(num, den);
            r.canonicalize();
            if (p(r) == 0 || p(mpq_class(-r)) == 0) return true;
        }
    return false;
}

// Root atoms for factor reconstruction: real roots and conjugate pairs.
struct RootAtom {
    bool real;
    double re, im;  // im > 0 for pairs
    int degree() const { return real ? 1 : 2; }
};

std::vector<RootAtom> make_atoms(const IntPoly& p, const std::vector<CertifiedRoot>& disks) {
    std::vector<RootAtom> atoms;
    std::vector<const CertifiedRoot*> upper, lower;
    for (const auto& d : disks) {
        double tol = std::max(d.radius * 2, 1e-300);
        if (std::abs(d.center.imag()) <= tol) {
            // certify by exact count that a real root really sits here
            mpq_class re(d.center.real());
            mpq_class delta = mpq_class(std::max(4 * d.radius, 1e-11));
            mpq_class a = re - delta, b = re + delta;
            if (p.sign_at(a) == 0 || p.sign_at(b) == 0 ||
                count_real_roots_open(p, a, b) < 1)
                throw PrecisionUnreachable("factor reconstruction: ambiguous near-real root");
            atoms.push_back({true, d.center.real(), 0.0});
        } else if (d.center.imag() > 0) {
            upper.push_back(&d);
        } else {
            lower.push_back(&d);
        }
    }
    if (upper.size() != lower.size())
        throw PrecisionUnreachable("factor reconstruction: unmatched conjugate pairs");
    for (const auto* u : upper) {
        // match with nearest conjugate below the axis
        double best = 1e300;
        size_t bi = lower.size();
        for (size_t i = 0; i < lower.size(); ++i) {
            if (!lower[i]) continue;
            double d = std::abs(u->center - std::conj(lower[i]->center));
            if (d < best) {
                best = d;
                bi = i;
            }
        }
        if (bi == lower.size() || best > 4 * (u->radius + lower[bi]->radius) + 1e-12)
            throw PrecisionUnreachable("factor reconstruction: conjugate pairing failed");
        lower[bi] = nullptr;
        atoms.push_back({false, u->center.real(), u->center.imag()});
    }
    return atoms;
}

// Enumerate atom subsets of total degree in [1, deg/2]; a rounded candidate
// whose exact division succeeds proves reducibility.
bool reconstruct_factor(const IntPoly& p, const std::vector<RootAtom>& atoms,
                        double max_radius) {
    const int half = p.degree() / 2;
    const auto lead_divs = positive_divisors(p.leading());
    const size_t na = atoms.size();
    if (na > 30) throw DegreeCapExceeded("factor reconstruction: too many root atoms");
    // coefficient error bound for a candidate: if it reaches the rounding
    // threshold the reconstruction is no longer unambiguous
    double maxmod = 1.0;
    for (const auto& a : atoms)
        maxmod = std::max(maxmod, std::hypot(a.re, a.im));
    double err_bound = p.degree() * std::pow(maxmod + 1.0, half) * (4 * max_radius + 1e-14) *
                       std::abs(p.leading().get_d());
    if (!(err_bound < 0.2))
        throw PrecisionUnreachable("factor reconstruction: rounding ambiguity");
    for (std::uint32_t mask = 1; mask < (1u << na); ++mask) {
        int deg = 0;
        for (size_t i = 0; i < na; ++i)
            if (mask & (1u << i)) deg += atoms[i].degree();
        if (deg < 1 || deg > half) continue;
        // monic product over the chosen atoms
        std::vector<double> c{1.0};
        for (size_t i = 0; i < na; ++i) {
            if (!(mask & (1u << i))) continue;
            if (atoms[i].real) {
                std::vector<double> nc(c.size() + 1, 0.0);
                for (size_t j = 0; j < c.size(); ++j) {
                    nc[j + 1] += c[j];
                    nc[j] -= atoms[i].re * c[j];
                }
                c = std::move(nc);
            } else {
                double b = -2 * atoms[i].re;
                double a = atoms[i].re * atoms[i].re + atoms[i].im * atoms[i].im;
                std::vector<double> nc(c.size() + 2, 0.0);
                for (size_t j = 0; j < c.size(); ++j) {
                    nc[j + 2] += c[j];
                    nc[j + 1] += b * c[j];
                    nc[j] += a * c[j];
                }
                c = std::move(nc);
            }
        }
        for (const auto& lam : lead_divs) {
            double l = lam.get_d();
            std::vector<mpz_class> zc(c.size());
            bool roundable = true;
            for (size_t j = 0; j < c.size() && roundable; ++j) {
                double scaled = l * c[j];
                double r = std::nearbyint(scaled);
                if (std::abs(scaled - r) > 0.25 || std::abs(r) > 9e15) roundable = false;
                zc[j] = static_cast<long>(r);
            }
            if (!roundable) continue;
            IntPoly cand{std::move(zc)};
            if (cand.degree() != deg) continue;
            try {
                div_exact(p, cand);
                return true;
            } catch (const NotDivisible&) {
            }
        }
    }
    return false;
}

}  // namespace

IrreducibilityResult is_irreducible(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw Error("is_irreducible: need degree >= 1");
    if (p.degree() > 64) throw DegreeCapExceeded("is_irreducible: degree cap is 64");
    IntPoly f = p.primitive_part();
    if (f.leading() < 0) f = -f;
    const int n = f.degree();
    if (n == 1) return {true, "degree 1"};

    if (f.constant_term() == 0) return {false, "monomial factor z"};

    // cyclotomic screen
    for (int m = 1; m <= 2 * n * n + 2; ++m) {
        if (euler_phi(m) > n) continue;
        const IntPoly& cyc = cyclotomic(m);
        if (f == cyc) return {true, "cyclotomic"};
        try {
            div_exact(f, cyc);
            return {false, "cyclotomic factor"};
        } catch (const NotDivisible&) {
        }
    }

    if (poly_gcd(f, f.derivative()).degree() > 0) return {false, "repeated factor"};
    auto ratroot = has_rational_root(f);
    if (ratroot.has_value()) {
        if (*ratroot) return {false, "rational root"};
        if (n <= 3) return {true, "no rational root at degree <= 3"};
    }

    auto disks = all_roots(f);
    double max_radius = 0;
    for (const auto& d : disks) max_radius = std::max(max_radius, d.radius);
    auto atoms = make_atoms(f, disks);
    if (reconstruct_factor(f, atoms, max_radius)) return {false, "root-subset factor"};
    return {true, "root-subset exhaustion"};
}

namespace {

bool is_cyclotomic_product(const IntPoly& p) {
    IntPoly core = strip_cyclotomic_factors(p);
    return core.degree() == 0 && abs(core.leading()) == 1;
}

// Pisot pattern in the paper's orientation: unit lead, exactly one root
// outside, none on the circle, and the outside root real > 1.
std::optional<double> pisot_value_if_match(const IntPoly& q, const RootProfile& prof) {
    if (prof.outside_count != 1 || prof.on_count != 0) return std::nullopt;
    if (abs(q.leading()) != 1) return std::nullopt;
    return max_real_root_above_one(q);
}

}  // namespace

NumberClass classify_number(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw Error("classify_number: need degree >= 1");
    IntPoly f = p.primitive_part();
    if (f.leading() < 0) f = -f;

    NumberClass nc;
    nc.degree = f.degree();
    nc.profile = circle_classification(f);

    if (nc.profile.on_count == nc.degree) {
        if (is_cyclotomic_product(f)) {
            nc.verdict = Verdict::CyclotomicProduct;
            auto irr = is_irreducible(f);
            nc.irreducible = irr.irreducible;
            nc.method_note = irr.method;
            return nc;
        }
        nc.verdict = Verdict::Neither;
        nc.method_note = "all roots on circle, not a cyclotomic product";
        return nc;
    }

    // Pisot: try the given orientation, then the reversal.
    if (auto theta = pisot_value_if_match(f, nc.profile)) {
        auto irr = is_irreducible(f);
        nc.irreducible = irr.irreducible;
        nc.method_note = irr.method;
        if (irr.irreducible) {
            nc.verdict = Verdict::Pisot;
            nc.value = theta;
            return nc;
        }
    } else if (f.constant_term() != 0) {
        IntPoly r = f.reversed();
        RootProfile rp = circle_classification(r);
        if (auto theta = pisot_value_if_match(r, rp)) {
            auto irr = is_irreducible(f);
            nc.irreducible = irr.irreducible;
            nc.method_note = irr.method + " (reversed orientation)";
            if (irr.irreducible) {
                nc.verdict = Verdict::Pisot;
                nc.value = theta;
                return nc;
            }
        }
    }

    // Salem: reciprocal, even degree >= 4, profile (1, deg-2, 1), simple
    // roots, irreducible, tau > 1.
    if (reciprocal_class(f) == ReciprocalClass::Reciprocal && nc.degree >= 4 &&
        nc.degree % 2 == 0 && nc.profile.outside_count == 1 &&
        nc.profile.inside_count == 1 && nc.profile.on_count == nc.degree - 2 &&
        squarefree_part(f).degree() == nc.degree) {
        if (auto tau = max_real_root_above_one(f)) {
            auto irr = is_irreducible(f);
            nc.irreducible = irr.irreducible;
            nc.method_note = irr.method;
            if (irr.irreducible) {
                nc.verdict = Verdict::Salem;
                nc.value = tau;
                return nc;
            }
        }
    }

    if (nc.method_note.empty()) {
        // informational only for a Neither verdict
        try {
            auto irr = is_irreducible(f);
            nc.irreducible = irr.irreducible;
            nc.method_note = irr.method;
        } catch (const Error& e) {
            nc.method_note = std::string("irreducibility not determined: ") + e.what();
        }
    }
    nc.verdict = Verdict::Neither;
    return nc;
}

GConstruction build_G(const IntPoly& A, const IntPoly& P) {
    if (A.is_zero() || A.constant_term() < 1)
        throw Error("build_G: A must be nonzero with A(0) >= 1");
    if (P.is_zero() || P.constant_term() < 1 || abs(P.leading()) != 1)
        throw Error("build_G: P must have P(0) >= 1 and unit lead");
    auto [Q, eps] = reciprocal_Q(P);
    auto [B, epsp] = reciprocal_B(A);
    const int e = eps.value * epsp.value;
    const int h = A.degree(), s = P.degree();

    GConstruction g;
    g.eps_product = SignChoice(e);
    if (h >= s + 1) {
        g.case_tag = GCase::HGeSPlus1;
        g.G = A * B - mpz_class(e) * (P * Q).shifted(h - s);
    } else if (s >= h + 1) {
        g.case_tag = GCase::SGeHPlus1;
        g.G = P * Q - mpz_class(e) * (A * B).shifted(s - h);
    } else {
        g.case_tag = GCase::SEqH;
        IntPoly D = A * B - mpz_class(e) * (P * Q);
        if (D.is_zero()) throw GIdenticallyZero("build_G: A*B == eps*eps' * P*Q");
        g.k = D.trailing_zeros();
        IntPoly core(std::vector<mpz_class>(D.coeffs().begin() + g.k, D.coeffs().end()));
        g.eta = SignChoice(sgn(core.constant_term()) >= 0 ? 1 : -1);
        g.G = g.eta.value == 1 ? core : -core;
        return g;
    }
    if (g.G.is_zero()) throw GIdenticallyZero("build_G: G vanishes identically");
    return g;
}

SPrimeCertificate sprime_criterion(const IntPoly& A, const IntPoly& P) {
    SPrimeCertificate cert;
    cert.A = A;
    cert.P = P;
    cert.g = build_G(A, P);

    auto [Q, eps] = reciprocal_Q(P);
    (void)eps;
    const int q = Q.degree(), h = A.degree();
    const int d = std::max(q, h);
    IntPoly N = (Q * Q.reversed()).shifted(d - q) - (A * A.reversed()).shifted(d - h);
    if (N.is_zero())
        throw GIdenticallyZero("sprime_criterion: |A| == |Q| identically on the circle");

    const int k = N.trailing_zeros();
    IntPoly Ncore(std::vector<mpz_class>(N.coeffs().begin() + k, N.coeffs().end()));
    if (reciprocal_class(Ncore) != ReciprocalClass::Reciprocal || Ncore.degree() % 2 != 0)
        throw Error("sprime_criterion: difference polynomial lost reciprocity");
    IntPoly M = circle_transform(Ncore);

    // M(x) >= 0 on [-2, 2]: no odd-multiplicity roots inside, and a positive
    // sample value.
    auto decomp = squarefree_decomposition(M);
    int distinct_inner_roots = 0;
    for (const auto& [mk, mult] : decomp) {
        IntPoly mk_inner = mk;
        for (long sgn1 : {1L, -1L})  // keep endpoints out of the Sturm count
            if (mk_inner(mpz_class(2 * sgn1)) == 0)
                mk_inner = div_exact(mk_inner, IntPoly({-2 * sgn1, 1}));
        int cnt = mk_inner.degree() >= 1
                      ? count_real_roots_open(mk_inner, mpq_class(-2), mpq_class(2))
                      : 0;
        distinct_inner_roots += cnt;
        if (mult % 2 == 1 && cnt > 0) {
            auto ivs = isolate_real_roots(mk_inner, mpq_class(-2), mpq_class(2));
            auto iv = refine_root(mk_inner, ivs.front(), mpq_class(1, 1024));
            throw CriterionFails("sprime_criterion: sign change on the circle",
                                 iv.lo.get_d(), iv.hi.get_d());
        }
    }
    // constant sign elsewhere; sample at a non-root rational
    mpq_class sample(0);
    for (int i = 1; M.sign_at(sample) == 0; ++i) sample = mpq_class(i, 64);
    if (M.sign_at(sample) < 0)
        throw CriterionFails("sprime_criterion: transform negative on [-2,2]",
                             sample.get_d(), sample.get_d());

    cert.nonnegative_on_circle = true;
    cert.equality_count = 2 * distinct_inner_roots + (M(mpz_class(2)) == 0 ? 1 : 0) +
                          (M(mpz_class(-2)) == 0 ? 1 : 0);
    return cert;
}

bool even_multiplicity_check(const IntPoly& G) {
    if (G.is_zero()) throw Error("even_multiplicity_check: zero polynomial");
    for (const auto& [g, mult] : squarefree_decomposition(G))
        if (mult % 2 == 1 && count_on_unit_circle(g) > 0) return false;
    return true;
}

}  // namespace salemlab
