#include "symcry/rational.hpp"

#include <algorithm>
#include <sstream>

namespace symcry {

namespace {

using Poly = std::vector<Rational>;  // dense, index = exponent

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a mod b, destructive on a; b nonzero
Poly rem(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= q * b[j];
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;  // monic gcd
    }
    return a;
}

// exact division a / b; throws if not exact
Poly divexact(Poly a, const Poly& b) {
    trim(a);
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::runtime_error("divexact: not divisible");
    Poly q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        trim(a);
    }
    if (!a.empty()) throw std::runtime_error("divexact: not divisible");
    return q;
}

}  // namespace

// ---------- LaurentPoly ----------

LaurentPoly LaurentPoly::monomial(long exp, Rational coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(long exp, Rational c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                r.terms_[e1 + e2] = c1 * c2;
            } else {
                it->second += c1 * c2;
            }
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

bool LaurentPoly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e != 0) os << "*v^" << e;
    }
    return os.str();
}

// ---------- RationalFunction ----------

RationalFunction::RationalFunction(const Rational& c) : ordv_(0), den_{Rational(1)} {
    if (c != 0) num_ = {c};
}

RationalFunction::RationalFunction(const LaurentPoly& p) : ordv_(0), den_{Rational(1)} {
    if (p.is_zero()) return;
    ordv_ = p.min_exp();
    num_.assign(static_cast<size_t>(p.max_exp() - p.min_exp() + 1), Rational(0));
    for (const auto& [e, c] : p.terms()) num_[static_cast<size_t>(e - ordv_)] = c;
}

RationalFunction RationalFunction::monomial(long exp, Rational coeff) {
    return RationalFunction(LaurentPoly::monomial(exp, std::move(coeff)));
}

RationalFunction RationalFunction::fraction(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero");
    if (num.is_zero()) return {};
    RationalFunction r;
    r.ordv_ = num.min_exp() - den.min_exp();
    r.num_.assign(static_cast<size_t>(num.max_exp() - num.min_exp() + 1), Rational(0));
    for (const auto& [e, c] : num.terms()) r.num_[static_cast<size_t>(e - num.min_exp())] = c;
    r.den_.assign(static_cast<size_t>(den.max_exp() - den.min_exp() + 1), Rational(0));
    for (const auto& [e, c] : den.terms()) r.den_[static_cast<size_t>(e - den.min_exp())] = c;
    r.canonicalize();
    return r;
}

void RationalFunction::canonicalize() {
    trim(num_);
    trim(den_);
    if (num_.empty()) {
        ordv_ = 0;
        den_ = {Rational(1)};
        return;
    }
    size_t nz = 0;
    while (num_[nz] == 0) ++nz;
    if (nz) {
        num_.erase(num_.begin(), num_.begin() + static_cast<long>(nz));
        ordv_ += static_cast<long>(nz);
    }
    size_t dz = 0;
    while (den_[dz] == 0) ++dz;
    if (dz) {
        den_.erase(den_.begin(), den_.begin() + static_cast<long>(dz));
        ordv_ -= static_cast<long>(dz);
    }
    Poly g = gcd(num_, den_);
    if (g.size() > 1) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    Rational lead = den_.back();
    if (lead != 1) {
        for (auto& c : den_) c /= lead;
        for (auto& c : num_) c /= lead;
    }
}

std::optional<long> RationalFunction::ord() const {
    if (is_zero()) return std::nullopt;
    return ordv_;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RationalFunction r;
    long base = std::min(ordv_, o.ordv_);
    Poly a = mul(num_, o.den_);
    Poly b = mul(o.num_, den_);
    // shift each numerator by its ord excess over the common base
    a.insert(a.begin(), static_cast<size_t>(ordv_ - base), Rational(0));
    b.insert(b.begin(), static_cast<size_t>(o.ordv_ - base), Rational(0));
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    r.ordv_ = base;
    r.num_ = std::move(a);
    r.den_ = mul(den_, o.den_);
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return {};
    RationalFunction r;
    r.ordv_ = ordv_ + o.ordv_;
    r.num_ = mul(num_, o.num_);
    r.den_ = mul(den_, o.den_);
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero");
    RationalFunction r;
    r.ordv_ = -ordv_;
    r.num_ = den_;
    r.den_ = num_;
    Rational lead = r.den_.back();
    if (lead != 1) {
        for (auto& c : r.den_) c /= lead;
        for (auto& c : r.num_) c /= lead;
    }
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return ordv_ == o.ordv_ && num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::bar() const {
    if (is_zero()) return {};
    RationalFunction r;
    long dn = static_cast<long>(num_.size()) - 1;
    long dd = static_cast<long>(den_.size()) - 1;
    r.ordv_ = -ordv_ - dn + dd;
    r.num_.assign(num_.rbegin(), num_.rend());
    r.den_.assign(den_.rbegin(), den_.rend());
    Rational lead = r.den_.back();
    if (lead != 1) {
        for (auto& c : r.den_) c /= lead;
        for (auto& c : r.num_) c /= lead;
    }
    return r;
}

bool RationalFunction::in_one_plus_vA0(long shift) const {
    RationalFunction d = RationalFunction(monomial(-shift)) * (*this) - RationalFunction(1);
    auto o = d.ord();
    return !o.has_value() || *o >= 1;
}

LaurentPoly RationalFunction::to_laurent() const {
    if (!is_laurent()) throw std::logic_error("not a Laurent polynomial");
    LaurentPoly p;
    for (size_t i = 0; i < num_.size(); ++i)
        p.set_coeff(ordv_ + static_cast<long>(i), num_[i]);
    return p;
}

std::vector<Rational> RationalFunction::series(long lo, long hi) const {
    std::vector<Rational> out;
    if (hi < lo) return out;
    out.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
    if (is_zero()) return out;
    // power-series coefficients c_k of num/den, k = 0 .. hi - ordv_
    long kmax = hi - ordv_;
    if (kmax < 0) return out;
    std::vector<Rational> c(static_cast<size_t>(kmax + 1), Rational(0));
    for (long k = 0; k <= kmax; ++k) {
        Rational acc = (static_cast<size_t>(k) < num_.size()) ? num_[static_cast<size_t>(k)]
                                                              : Rational(0);
        long jmax = std::min<long>(k, static_cast<long>(den_.size()) - 1);
        for (long j = 1; j <= jmax; ++j)
            acc -= den_[static_cast<size_t>(j)] * c[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k)] = acc / den_[0];
        long e = ordv_ + k;
        if (e >= lo && e <= hi) out[static_cast<size_t>(e - lo)] = c[static_cast<size_t>(k)];
    }
    return out;
}

std::string RationalFunction::str() const {
    if (is_zero()) return "0";
    if (is_laurent()) return to_laurent().str();
    std::ostringstream os;
    LaurentPoly n, d;
    for (size_t i = 0; i < num_.size(); ++i) n.set_coeff(static_cast<long>(i), num_[i]);
    for (size_t i = 0; i < den_.size(); ++i) d.set_coeff(static_cast<long>(i), den_[i]);
    os << "v^" << ordv_ << "*(" << n.str() << ")/(" << d.str() << ")";
    return os.str();
}

// ---------- quantum combinatorics ----------

LaurentPoly qint(long k) {
    if (k < 0) throw std::invalid_argument("qint: negative argument");
    LaurentPoly r;
    // [k]_v = v^{k-1} + v^{k-3} + ... + v^{1-k}
    for (long e = 1 - k; e <= k - 1; e += 2) r.set_coeff(e, 1);
    return r;
}

LaurentPoly qfact(long k) {
    if (k < 0) throw std::invalid_argument("qfact: negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (long j = 2; j <= k; ++j) r *= qint(j);
    return r;
}

LaurentPoly qbinom(long n, long k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
    RationalFunction q = RationalFunction(qfact(n)) /
                         (RationalFunction(qfact(k)) * RationalFunction(qfact(n - k)));
    if (!q.is_laurent()) throw std::runtime_error("qbinom: division not exact");
    return q.to_laurent();
}

}  // namespace symcry
