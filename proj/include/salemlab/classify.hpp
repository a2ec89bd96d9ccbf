#ifndef SALEMLAB_CLASSIFY_HPP
#define SALEMLAB_CLASSIFY_HPP

#include <optional>
#include <string>

#include "salemlab/intpoly.hpp"
#include "salemlab/rootloc.hpp"

namespace salemlab {

enum class Verdict { Pisot, Salem, CyclotomicProduct, Neither };

const char* verdict_name(Verdict v);

struct NumberClass {
    Verdict verdict = Verdict::Neither;
    std::optional<double> value;  // theta or tau when applicable
    RootProfile profile;
    bool irreducible = false;
    std::string method_note;
    int degree = 0;
};

struct IrreducibilityResult {
    bool irreducible = false;
    std::string method;
};

// Decision pipeline: cyclotomic trial division, rational root test, then
// numeric factor reconstruction over certified root subsets (conjugate pairs
// kept together); exhaustion proves irreducibility. Requires the primitive
// part; degree capped at 64.
IrreducibilityResult is_irreducible(const IntPoly& p);

// Pisot / Salem / CyclotomicProduct / Neither with certificate data. Accepts
// either the paper's orientation (theta a root, P(0) >= 1, unit lead) or the
// reversed one; classification runs on the primitive part.
NumberClass classify_number(const IntPoly& p);

enum class GCase { HGeSPlus1, SGeHPlus1, SEqH };

struct GConstruction {
    IntPoly G;
    GCase case_tag = GCase::SEqH;
    int k = 0;             // stripped z-power in the s == h case
    SignChoice eta{1};     // sign fixing G(0) >= 1 in the s == h case
    SignChoice eps_product{1};  // the eps * eps' actually used
};

// The three-case G construction from the pair (A, P). P must be in the
// paper's orientation: P(0) >= 1 and |lead(P)| = 1; A nonzero with A(0) >= 1.
// Throws GIdenticallyZero when A * B == eps*eps' * z^* * P * Q identically.
GConstruction build_G(const IntPoly& A, const IntPoly& P);

struct SPrimeCertificate {
    IntPoly A, P;
    GConstruction g;
    bool nonnegative_on_circle = false;
    int equality_count = 0;  // distinct circle points with |A| == |Q|
};

// Dufresnoy-Pisot S' membership test for the pair (A, P): decides exactly
// that |A| <= |Q| on |z| = 1 with equality at finitely many points, via the
// x = z + 1/z transform and Sturm isolation. Throws CriterionFails with a
// witness interval when the transform goes negative.
SPrimeCertificate sprime_criterion(const IntPoly& A, const IntPoly& P);

// True iff every root of G on |z| = 1 has even multiplicity.
bool even_multiplicity_check(const IntPoly& G);

// Divides out every cyclotomic factor to maximal multiplicity. When
// `removed` is non-null it receives the product of the factors taken out.
IntPoly strip_cyclotomic_factors(const IntPoly& p, IntPoly* removed = nullptr);

}  // namespace salemlab

#endif
