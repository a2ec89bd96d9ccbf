#include "salemlab/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace salemlab {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> c) {
    c_.reserve(c.size());
    for (long v : c) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(int k, const mpz_class& c) {
    if (k < 0) throw Error("monomial: negative exponent");
    if (c == 0) return IntPoly();
    std::vector<mpz_class> v(static_cast<size_t>(k) + 1, mpz_class(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(std::string_view csv) {
    std::vector<mpz_class> c;
    size_t pos = 0;
    while (pos <= csv.size()) {
        if (pos == csv.size()) {
            if (!c.empty()) throw Error("poly parse: trailing comma");
            break;
        }
        size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos);
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string_view::npos) {
            if (csv.find_first_not_of(" \t") == std::string_view::npos && c.empty())
                break;  // all-blank input: zero polynomial
            throw Error("poly parse: empty coefficient");
        }
        std::string digits(tok.substr(b, e - b + 1));
        try {
            c.emplace_back(digits);
        } catch (const std::invalid_argument&) {
            throw Error("poly parse: bad integer '" + digits + "'");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntPoly(std::move(c));
}

std::string IntPoly::to_csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    return os.str();
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "z";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

mpq_class IntPoly::operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + mpq_class(c_[i]);
    return r;
}

int IntPoly::sign_at(const mpz_class& a, const mpz_class& b) const {
    // sign of p(a/b) = sign of sum c_i a^i b^(n-i), b > 0
    if (is_zero()) return 0;
    mpz_class acc = 0, ap = 1;
    std::vector<mpz_class> bp(c_.size());
    bp[c_.size() - 1] = 1;
    for (size_t i = c_.size() - 1; i-- > 0;) bp[i] = bp[i + 1] * b;
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * ap * bp[i];
        ap *= a;
    }
    return sgn(acc);
}

int IntPoly::sign_at(const mpq_class& x) const {
    return sign_at(x.get_num(), x.get_den());
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const mpz_class& s, const IntPoly& p) {
    if (s == 0) return IntPoly();
    std::vector<mpz_class> r(p.c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return k >= 0 ? *this : *this;
    if (k < 0) throw Error("shifted: negative shift");
    std::vector<mpz_class> r(static_cast<size_t>(k), mpz_class(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::flipped() const {
    std::vector<mpz_class> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v /= g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::normalized() const {
    IntPoly p = primitive_part();
    if (!p.is_zero() && p.leading() < 0) return -p;
    return p;
}

int IntPoly::trailing_zeros() const {
    int v = 0;
    while (v < static_cast<int>(c_.size()) && c_[v] == 0) ++v;
    return is_zero() ? 0 : v;
}

mpz_class IntPoly::height() const {
    mpz_class h = 0;
    for (const auto& v : c_) {
        mpz_class a = abs(v);
        if (a > h) h = a;
    }
    return h;
}

IntPoly div_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw Error("div_exact: division by zero polynomial");
    if (p.is_zero()) return IntPoly();
    int dp = p.degree(), dq = q.degree();
    if (dp < dq) throw NotDivisible("div_exact: degree of dividend below divisor");
    // Long division over Q; an exact integer quotient exists iff every
    // quotient coefficient is integral and the remainder vanishes.
    std::vector<mpq_class> rem(p.coeffs().begin(), p.coeffs().end());
    const mpq_class lead(q.leading());
    std::vector<mpz_class> quot(static_cast<size_t>(dp - dq) + 1);
    for (int k = dp - dq; k >= 0; --k) {
        mpq_class qc = rem[k + dq] / lead;
        qc.canonicalize();
        if (qc.get_den() != 1) throw NotDivisible("div_exact: fractional quotient");
        quot[k] = qc.get_num();
        if (qc != 0)
            for (int j = 0; j <= dq; ++j) rem[k + j] -= qc * mpq_class(q.coeff(j));
    }
    for (int j = 0; j < dq; ++j)
        if (rem[j] != 0) throw NotDivisible("div_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

namespace {

// Remainder of a/b over Q, returned as a primitive integer polynomial with
// the sign of the true rational remainder. Used by gcd and Sturm chains.
IntPoly rational_rem_primitive(const IntPoly& a, const IntPoly& b) {
    std::vector<mpq_class> rem(a.coeffs().begin(), a.coeffs().end());
    int da = a.degree(), db = b.degree();
    const mpq_class lead(b.leading());
    for (int k = da - db; k >= 0; --k) {
        mpq_class qc = rem[k + db] / lead;
        if (qc != 0)
            for (int j = 0; j <= db; ++j) rem[k + j] -= qc * mpq_class(b.coeff(j));
        rem[k + db] = 0;
    }
    // clear denominators, strip content
    mpz_class den = 1;
    for (auto& v : rem) {
        v.canonicalize();
        mpz_class d = v.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> zi(rem.size());
    for (size_t i = 0; i < rem.size(); ++i) {
        mpq_class s = rem[i] * mpq_class(den);
        s.canonicalize();
        zi[i] = s.get_num();
    }
    IntPoly r{std::move(zi)};
    return r.is_zero() ? r : r.primitive_part();
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = a.normalized(), g = b.normalized();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = rational_rem_primitive(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return f.normalized();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun's algorithm on the primitive positive-lead part.
    IntPoly f = p.normalized();
    IntPoly fp = f.derivative();
    IntPoly a = poly_gcd(f, fp);
    IntPoly b = div_exact(f, a);
    IntPoly c = div_exact(fp, a);
    int k = 1;
    while (true) {
        IntPoly d = c - b.derivative();
        if (d.is_zero()) {
            if (b.degree() > 0) out.emplace_back(b.normalized(), k);
            break;
        }
        IntPoly g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.normalized(), k);
        b = div_exact(b, g);
        c = div_exact(d, g);
        ++k;
        if (b.degree() == 0 && c.is_zero()) break;
    }
    return out;
}

ReciprocalResult reciprocal_Q(const IntPoly& p) {
    if (p.is_zero()) throw BadLeadingCoeff("reciprocal_Q: zero polynomial");
    mpz_class lead = p.leading();
    if (lead != 1 && lead != -1)
        throw BadLeadingCoeff("reciprocal_Q: |leading coefficient| must be 1");
    int eps = lead > 0 ? 1 : -1;  // Q(0) = eps * lead(p) = 1
    IntPoly q = p.reversed();
    if (eps < 0) q = -q;
    return {std::move(q), SignChoice(eps)};
}

ReciprocalResult reciprocal_B(const IntPoly& a) {
    if (a.is_zero()) throw ZeroLeading("reciprocal_B: zero polynomial");
    int eps = a.leading() > 0 ? 1 : -1;  // B(0) = eps * lead(a) = |lead(a)| >= 1
    IntPoly b = a.reversed();
    if (eps < 0) b = -b;
    return {std::move(b), SignChoice(eps)};
}

ReciprocalClass reciprocal_class(const IntPoly& p) {
    IntPoly r = p.reversed();
    if (r == p) return ReciprocalClass::Reciprocal;
    if (r == -p) return ReciprocalClass::AntiReciprocal;
    return ReciprocalClass::Neither;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

const IntPoly& cyclotomic(int n) {
    if (n < 1) throw Error("cyclotomic: n must be >= 1");
    static std::map<int, IntPoly> table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without re-entering the lock.
    std::vector<int> todo{n}, order;
    while (!todo.empty()) {
        int m = todo.back();
        todo.pop_back();
        if (table.count(m)) continue;
        order.push_back(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && !table.count(d)) todo.push_back(d);
    }
    for (auto rit = order.rbegin(); rit != order.rend(); ++rit) {
        int m = *rit;
        if (table.count(m)) continue;
        IntPoly num = IntPoly::monomial(m) - IntPoly::one();
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = div_exact(num, table.at(d));
        table.emplace(m, std::move(num));
    }
    return table.at(n);
}

}  // namespace salemlab
