#ifndef SALEMLAB_INTPOLY_HPP
#define SALEMLAB_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "salemlab/errors.hpp"

namespace salemlab {

// Univariate polynomial over Z, coefficients in ascending degree order
// (coeffs()[0] is the constant term). The zero polynomial is the empty
// coefficient sequence; constructors trim trailing zeros so degree() is
// always well defined.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
    IntPoly(std::initializer_list<long> c);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly variable() { return IntPoly({0, 1}); }
    // c * z^k
    static IntPoly monomial(int k, const mpz_class& c = 1);

    // Canonical text form: comma-separated ascending integer coefficients,
    // e.g. "1,1,0,-1" for 1+z-z^3. The zero polynomial is the empty string.
    static IntPoly parse(std::string_view csv);
    std::string to_csv() const;
    // Human form, e.g. "1 + z - z^3".
    std::string pretty() const;

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    // Coefficient of z^i; zero outside the stored range.
    const mpz_class& coeff(int i) const;
    const mpz_class& constant_term() const { return coeff(0); }
    const mpz_class& leading() const { return coeff(degree() < 0 ? 0 : degree()); }

    mpz_class operator()(const mpz_class& x) const;
    mpq_class operator()(const mpq_class& x) const;
    // Exact sign of p(a/b) for b > 0, via homogeneous integer evaluation.
    int sign_at(const mpz_class& a, const mpz_class& b) const;
    int sign_at(const mpq_class& x) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const mpz_class& s, const IntPoly& p);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly derivative() const;
    // Coefficient reversal of the trimmed sequence. Drops degree when the
    // constant term is zero.
    IntPoly reversed() const;
    // p(z) * z^k
    IntPoly shifted(int k) const;
    // p(-z)
    IntPoly flipped() const;
    // gcd of |coefficients|; 0 for the zero polynomial.
    mpz_class content() const;
    // content removed, sign of leading coefficient kept
    IntPoly primitive_part() const;
    // primitive with positive leading coefficient
    IntPoly normalized() const;
    // largest v with z^v | p (0 for the zero polynomial)
    int trailing_zeros() const;
    // max |coefficient|
    mpz_class height() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Exact quotient p / q over Z. Throws NotDivisible when the division has a
// remainder or a fractional quotient coefficient.
IntPoly div_exact(const IntPoly& p, const IntPoly& q);

// gcd over Z of the primitive parts, primitive with positive leading
// coefficient; gcd(0, q) = normalized q.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Yun decomposition of the primitive positive-lead part: p ~ prod f_k^k with
// the f_k squarefree, pairwise coprime, positive lead. Factors with f_k == 1
// are omitted.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

struct SignChoice {
    int value = 1;
    SignChoice() = default;
    explicit SignChoice(int v) : value(v) {
        if (v != 1 && v != -1) throw Error("SignChoice must be +1 or -1");
    }
};

struct ReciprocalResult {
    IntPoly poly;
    SignChoice sign;
};

// Q(z) = eps * z^s P(1/z) with eps = +-1 chosen so Q(0) = 1.
// Requires |leading(P)| = 1.
ReciprocalResult reciprocal_Q(const IntPoly& p);

// B(z) = eps' * z^h A(1/z) with eps' = +-1 chosen so B(0) >= 1.
ReciprocalResult reciprocal_B(const IntPoly& a);

enum class ReciprocalClass { Reciprocal, AntiReciprocal, Neither };

// Reciprocal iff reverse(p) == p, anti-reciprocal iff reverse(p) == -p.
ReciprocalClass reciprocal_class(const IntPoly& p);

// n-th cyclotomic polynomial, built by exact division of z^n - 1 by the
// lower-order cyclotomics. Memoized; thread-safe.
const IntPoly& cyclotomic(int n);

// Euler phi, the degree of cyclotomic(n).
int euler_phi(int n);

}  // namespace salemlab

#endif
