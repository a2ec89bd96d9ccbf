#ifndef SALEMLAB_RATPOLY_HPP
#define SALEMLAB_RATPOLY_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "salemlab/intpoly.hpp"

namespace salemlab {

// Polynomial over Q. Used for the Dufresnoy bracketing recurrences and for
// power-series developments; the exact root machinery stays on IntPoly.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
    explicit RatPoly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& coeff(int i) const;

    mpq_class operator()(const mpq_class& x) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const mpq_class& s, const RatPoly& p);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    RatPoly shifted(int k) const;
    // (primitive integer polynomial, positive denominator d) with d * this integral
    std::pair<IntPoly, mpz_class> scaled_to_integer() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// First `order` coefficients of the power series num/den; requires den(0) != 0.
std::vector<mpq_class> series_quotient(const IntPoly& num, const IntPoly& den, int order);

}  // namespace salemlab

#endif
