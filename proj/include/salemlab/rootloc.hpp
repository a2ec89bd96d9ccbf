#ifndef SALEMLAB_ROOTLOC_HPP
#define SALEMLAB_ROOTLOC_HPP

#include <complex>
#include <optional>
#include <vector>

#include "salemlab/intpoly.hpp"

namespace salemlab {

// A disk guaranteed to contain exactly one root (simple, for squarefree
// input). The radius comes from the a posteriori Newton bound
// n * |p(c)| / |p'(c)| evaluated in exact rational arithmetic at the
// floating-point center.
struct CertifiedRoot {
    std::complex<double> center;
    double radius = 0.0;
    enum class Side { Inside, Outside, Straddle } side = Side::Straddle;
};

struct RootProfile {
    std::vector<CertifiedRoot> roots;  // one disk per distinct root
    int inside_count = 0;              // |z| < 1, with multiplicity
    int on_count = 0;                  // |z| = 1, with multiplicity
    int outside_count = 0;             // |z| > 1, with multiplicity
    bool exact = true;                 // counts came from the exact path
};

// Simultaneous (Aberth-Ehrlich) iteration with certified radii.
// Requires p squarefree of degree >= 1. Throws PrecisionUnreachable when the
// long-double retry still cannot certify disjoint disks below target.
std::vector<CertifiedRoot> all_roots(const IntPoly& p, double target_precision = 1e-12);

// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

struct InsideCount {
    int count = 0;
    bool exact = true;
};

// Exact number of roots with |z| < 1, multiplicity counted. Falls back to
// certified numeric classification (exact = false) when the Schur-Cohn
// reduction degenerates; throws Degenerate when that fallback cannot separate
// a root from the circle either.
InsideCount count_inside_unit_disk(const IntPoly& p);

// Exact number of roots with |z| = 1, multiplicity counted (Sturm counting
// of the z + 1/z transform of gcd(p, reverse(p)); z = +-1 handled by direct
// evaluation).
int count_on_unit_circle(const IntPoly& p);

RootProfile circle_classification(const IntPoly& p);

struct MahlerMeasure {
    double value = 1.0;
    double error = 0.0;  // bound derived from certification radii
};

// |lead(p)| * prod of |root| over roots outside the unit circle.
MahlerMeasure mahler_measure(const IntPoly& p);

// Largest real root in (1, inf) to 1e-12; nullopt when none exists.
std::optional<double> max_real_root_above_one(const IntPoly& p);

// For an even-degree reciprocal f with f(0) != 0: the polynomial T with
// f(z) = z^(deg/2) * T(z + 1/z).
IntPoly circle_transform(const IntPoly& f);

}  // namespace salemlab

#endif
