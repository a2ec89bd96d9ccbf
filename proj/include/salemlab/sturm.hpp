#ifndef SALEMLAB_STURM_HPP
#define SALEMLAB_STURM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "salemlab/intpoly.hpp"

namespace salemlab {

// Sturm chain of a squarefree polynomial (members primitive over Z).
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

// Sign variations of the chain at x, at +inf, at -inf.
int sturm_variations(const std::vector<IntPoly>& chain, const mpq_class& x);
int sturm_variations_pos_inf(const std::vector<IntPoly>& chain);
int sturm_variations_neg_inf(const std::vector<IntPoly>& chain);

// Number of real roots of the squarefree p in the open interval (a, b).
// Requires p(a) != 0 and p(b) != 0.
int count_real_roots_open(const IntPoly& squarefree, const mpq_class& a,
                          const mpq_class& b);

// Number of real roots in (a, +inf); requires p(a) != 0.
int count_real_roots_above(const IntPoly& squarefree, const mpq_class& a);

// Cauchy bound: every root has |z| < bound.
mpq_class cauchy_root_bound(const IntPoly& p);

// Isolating intervals (a, b] ... with exactly one root each, for the real
// roots of the squarefree p inside (lo, hi). Endpoints that are roots are
// returned as degenerate [r, r] intervals.
struct RootInterval {
    mpq_class lo, hi;  // lo == hi means an exact rational root
};
std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree,
                                             const mpq_class& lo, const mpq_class& hi);

// Shrink an isolating interval by exact bisection until hi-lo <= width.
RootInterval refine_root(const IntPoly& squarefree, RootInterval iv, const mpq_class& width);

}  // namespace salemlab

#endif
