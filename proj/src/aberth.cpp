// Aberth-Ehrlich simultaneous root iteration with exact-rational a posteriori
// certification of the final disks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "salemlab/rootloc.hpp"

namespace salemlab {

namespace {

template <typename F>
std::complex<F> horner(const std::vector<std::complex<F>>& c, std::complex<F> z) {
    std::complex<F> r(0, 0);
    for (size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
}

template <typename F>
bool aberth_pass(const std::vector<mpz_class>& coeffs, std::vector<std::complex<double>>& out) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<std::complex<F>> c(coeffs.size()), dc(coeffs.size() - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = std::complex<F>(F(coeffs[i].get_d()), 0);
    for (size_t i = 1; i < coeffs.size(); ++i) dc[i - 1] = F(i) * c[i];

    // perturbed-circle initialization; irrational angle offset breaks the
    // coefficient symmetries common in this domain
    F r0 = std::pow(std::abs(F(coeffs[0].get_d()) / F(coeffs[n].get_d())), F(1) / F(n));
    if (!(r0 > F(0)) || !std::isfinite(static_cast<double>(r0))) r0 = F(1);
    std::vector<std::complex<F>> z(n);
    const F two_pi = F(6.283185307179586476925286766559L);
    for (int k = 0; k < n; ++k) {
        F ang = two_pi * (F(k) + F(0.3618033988749895L)) / F(n) + F(0.2360679774997897L);
        F rad = r0 * (F(1) + F(0.05L) * std::sin(F(3) * ang));
        z[k] = std::complex<F>(rad * std::cos(ang), rad * std::sin(ang));
    }

    const F tol = std::numeric_limits<F>::epsilon() * F(8);
    bool converged = false;
    for (int iter = 0; iter < 400 && !converged; ++iter) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            std::complex<F> pv = horner(c, z[i]);
            std::complex<F> dv = horner(dc, z[i]);
            if (pv == std::complex<F>(0, 0)) continue;
            std::complex<F> ratio;
            if (dv == std::complex<F>(0, 0)) {
                ratio = std::complex<F>(tol, tol);  // nudge off a critical point
            } else {
                ratio = pv / dv;
            }
            std::complex<F> sum(0, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) sum += std::complex<F>(1, 0) / (z[i] - z[j]);
            std::complex<F> denom = std::complex<F>(1, 0) - ratio * sum;
            std::complex<F> corr = denom == std::complex<F>(0, 0) ? ratio : ratio / denom;
            z[i] -= corr;
            if (std::abs(corr) > tol * (F(1) + std::abs(z[i]))) converged = false;
        }
    }
    out.resize(n);
    for (int i = 0; i < n; ++i)
        out[i] = std::complex<double>(static_cast<double>(z[i].real()),
                                      static_cast<double>(z[i].imag()));
    return converged;
}

// |p(c)|^2 at a Gaussian-rational point, exact.
mpq_class abs2_at(const IntPoly& p, const mpq_class& re, const mpq_class& im) {
    mpq_class x = 0, y = 0;  // running value of p via complex Horner
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        mpq_class nx = x * re - y * im + p.coeffs()[i];
        mpq_class ny = x * im + y * re;
        x = nx;
        y = ny;
    }
    return x * x + y * y;
}

}  // namespace

std::vector<CertifiedRoot> all_roots(const IntPoly& p, double target_precision) {
    if (p.is_zero() || p.degree() < 1) throw Error("all_roots: degree must be >= 1");
    IntPoly f = p.primitive_part();
    const int v = f.trailing_zeros();
    std::vector<CertifiedRoot> result;
    if (v > 1) throw Error("all_roots: input not squarefree (z^2 divides)");
    if (v == 1) {
        result.push_back({{0.0, 0.0}, 0.0, CertifiedRoot::Side::Inside});
        f = div_exact(f, IntPoly::variable());
    }
    if (f.degree() == 0) return result;
    const int n = f.degree();
    const IntPoly df = f.derivative();

    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<std::complex<double>> centers;
        bool conv = attempt == 0 ? aberth_pass<double>(f.coeffs(), centers)
                                 : aberth_pass<long double>(f.coeffs(), centers);
        if (!conv && attempt == 0) continue;

        std::vector<CertifiedRoot> disks;
        disks.reserve(n);
        bool ok = true;
        for (const auto& c : centers) {
            mpq_class re(c.real()), im(c.imag());
            mpq_class num = abs2_at(f, re, im);
            mpq_class den = abs2_at(df, re, im);
            if (den == 0) {
                ok = false;
                break;
            }
            double ratio2 = mpq_class(num / den).get_d();
            double radius = n * std::sqrt(ratio2) * (1.0 + 1e-12) + 1e-300;
            if (!(radius <= target_precision)) {
                ok = false;
                break;
            }
            CertifiedRoot cr{c, radius, CertifiedRoot::Side::Straddle};
            double mod = std::abs(c);
            if (mod + radius < 1.0)
                cr.side = CertifiedRoot::Side::Inside;
            else if (mod - radius > 1.0)
                cr.side = CertifiedRoot::Side::Outside;
            disks.push_back(cr);
        }
        if (ok) {
            // pairwise disjoint => exactly one root per disk
            for (size_t i = 0; i < disks.size() && ok; ++i)
                for (size_t j = i + 1; j < disks.size(); ++j) {
                    double d = std::abs(disks[i].center - disks[j].center);
                    if (d <= (disks[i].radius + disks[j].radius) * (1.0 + 1e-9)) {
                        ok = false;
                        break;
                    }
                }
        }
        if (ok) {
            std::sort(disks.begin(), disks.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
                if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
                return a.center.imag() < b.center.imag();
            });
            result.insert(result.end(), disks.begin(), disks.end());
            return result;
        }
    }
    throw PrecisionUnreachable("all_roots: could not certify disjoint disks at target precision");
}

}  // namespace salemlab
