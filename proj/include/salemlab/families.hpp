#ifndef SALEMLAB_FAMILIES_HPP
#define SALEMLAB_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "salemlab/classify.hpp"
#include "salemlab/intpoly.hpp"

namespace salemlab {

enum class FamilyTag {
    Beta,      // Th.1 part 1
    Gamma,     // Th.1 part 2
    Gamma4,    // Th.1 part 3
    Alpha,     // Th.1 part 4 (s >= 3) and its s = 2 extension
    S1Beta,    // Th.2 part 1 (u0 = 1)
    S1Alpha,   // Th.2 part 3
    S1Gamma4,  // Th.2 part 2
    UvBeta,    // Th.3 part 1
    UvAlpha    // Th.3 part 2 smallest element (s = 2) and its extension
};

const char* family_tag_name(FamilyTag t);

enum class S1Kind { Alpha, Beta, Gamma4 };
enum class S1Variant { A1, A2 };
enum class UvKind { Beta, SmallestH, AlphaExt };

struct FamilyParams {
    FamilyTag tag = FamilyTag::Beta;
    int u0 = 0;
    std::optional<int> v0;
    int s = 0;
    std::optional<int> eps;
    std::optional<S1Variant> variant;
};

struct FamilyElement {
    FamilyParams params;
    IntPoly A, B, P, Q, G;
    GConstruction gcon;
};

// Generators. Each derives P, B by the reciprocal transforms and G by the
// three-case construction; exact division of the factored displays flags any
// transcription error as NotDivisible.
FamilyElement beta_family(int u0, int s);
FamilyElement gamma_family(int u0, int s, SignChoice eps);
FamilyElement gamma4_element(int u0);
FamilyElement alpha_family(int u0, int s);
FamilyElement sprime1_family(S1Kind kind, S1Variant variant, int s);
FamilyElement uv_family(int u0, int v0, UvKind kind, int s);

struct SalemConstruction {
    IntPoly P, Q;
    int m = 0;
    SignChoice eta{1};
    IntPoly W;  // Q + eta z^m P
    IntPoly U;  // extracted circle factor (product of cyclotomics up to sign)
    IntPoly R;  // W / U, positive leading coefficient
    std::optional<double> tau;
    std::optional<NumberClass> r_class;
};

// Salem's construction: W = Q + eta z^m P with Q the reciprocal of P; U is
// every cyclotomic factor of W to maximal multiplicity, R the cofactor.
// classify_r = false skips the R classification (profile sweeps).
SalemConstruction salem_construct(const IntPoly& P, int m, SignChoice eta,
                                  bool classify_r = true);

struct BoydSolution {
    IntPoly U, P, Q;
};

// Boyd's inverse procedure: enumerate candidate U (products of cyclotomics,
// total degree <= max_cyclotomic_degree, multiplicity <= 2 each), solve
// U R = Q + eta z^m P for integer P with Q = eps z^s P(1/z), and keep the
// solutions whose P classifies as Pisot with P(0) >= 1. Throws NoAssociation
// when the bounded search finds none.
std::vector<BoydSolution> boyd_associate(const IntPoly& R, int m, SignChoice eta,
                                         int max_cyclotomic_degree);

struct IdentityReport {
    std::string identity_id;
    FamilyParams params;
    bool holds = false;
    IntPoly difference;  // zero when holds
};

// Exact evaluation of every identity the paper displays for the element's
// family. Mismatches are recorded findings, never errors.
std::vector<IdentityReport> check_identities(const FamilyElement& fe);

// The three families of limit-point polynomials (ranges s >= 2, s >= 3,
// fixed); entries outside their range are omitted.
std::vector<IntPoly> accumulation_polys(int s);

}  // namespace salemlab

#endif
