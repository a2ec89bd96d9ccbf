#include "salemlab/ratpoly.hpp"

namespace salemlab {

namespace {
const mpq_class kZeroQ = 0;
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroQ;
    return c_[i];
}

mpq_class RatPoly::operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

RatPoly RatPoly::operator-() const {
    std::vector<mpq_class> r(c_);
    for (auto& v : r) v = -v;
    return RatPoly(std::move(r));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly operator*(const mpq_class& s, const RatPoly& p) {
    if (s == 0) return RatPoly();
    std::vector<mpq_class> r(p.c_);
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<mpq_class> r(static_cast<size_t>(k), mpq_class(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return RatPoly(std::move(r));
}

std::pair<IntPoly, mpz_class> RatPoly::scaled_to_integer() const {
    mpz_class den = 1;
    for (const auto& v : c_) {
        mpz_class d = v.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> zi(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        mpq_class s = c_[i] * mpq_class(den);
        s.canonicalize();
        zi[i] = s.get_num();
    }
    return {IntPoly(std::move(zi)), den};
}

std::vector<mpq_class> series_quotient(const IntPoly& num, const IntPoly& den, int order) {
    if (den.constant_term() == 0) throw Error("series_quotient: den(0) == 0");
    std::vector<mpq_class> out(static_cast<size_t>(order));
    mpq_class d0(den.constant_term());
    for (int n = 0; n < order; ++n) {
        mpq_class acc(num.coeff(n));
        for (int j = 1; j <= n; ++j) acc -= mpq_class(den.coeff(j)) * out[n - j];
        out[n] = acc / d0;
    }
    return out;
}

}  // namespace salemlab
