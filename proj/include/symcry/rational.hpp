#pragma once

// Exact arithmetic in Z[v,v^-1] and Q(v): Laurent polynomials with exact
// rational coefficients, rational functions in canonical v-adic form,
// the bar involution v -> v^-1, and quantum combinatorics.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcry {

using Rational = mpq_class;

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(long exp, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    long min_exp() const;  // pre: !is_zero
    long max_exp() const;  // pre: !is_zero
    Rational coeff(long exp) const;
    const std::map<long, Rational>& terms() const { return terms_; }

    void set_coeff(long exp, Rational c);  // erases when c == 0

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly bar() const;  // v -> v^-1

    bool is_integral() const;  // all coefficients in Z
    std::string str() const;   // human-readable, for reports

private:
    std::map<long, Rational> terms_;
};

// Element of Q(v) as v^ordv * num/den with num(0) != 0, den(0) != 0,
// den monic, gcd(num,den) = 1. Zero has num empty.
class RationalFunction {
public:
    RationalFunction() : ordv_(0), den_{Rational(1)} {}  // zero
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    explicit RationalFunction(const Rational& c);
    RationalFunction(const LaurentPoly& p);
    static RationalFunction monomial(long exp, Rational coeff = 1);
    static RationalFunction fraction(const LaurentPoly& num, const LaurentPoly& den);

    bool is_zero() const { return num_.empty(); }
    // largest n with f in v^n A0; nullopt encodes ord(0) = +infinity
    std::optional<long> ord() const;
    long ordv() const { return ordv_; }
    const std::vector<Rational>& num() const { return num_; }
    const std::vector<Rational>& den() const { return den_; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction bar() const;  // v -> v^-1
    RationalFunction inverse() const;

    // true iff v^{-shift} * f - 1 has ord >= 1
    bool in_one_plus_vA0(long shift) const;

    bool is_laurent() const { return den_.size() == 1; }
    LaurentPoly to_laurent() const;  // pre: is_laurent

    // coefficients of the v-adic Laurent expansion for exponents in [lo, hi]
    std::vector<Rational> series(long lo, long hi) const;

    std::string str() const;

private:
    long ordv_;
    std::vector<Rational> num_;  // dense poly, num_[0] != 0 unless zero (then empty)
    std::vector<Rational> den_;  // dense poly, den_[0] != 0, monic, gcd(num,den)=1
    void canonicalize();
};

// quantum combinatorics; all bar-fixed
LaurentPoly qint(long k);                 // [k]_v, pre: k >= 0
LaurentPoly qfact(long k);                // [k]_v!, pre: k >= 0
LaurentPoly qbinom(long n, long k);       // exact division, asserts divisibility

}  // namespace symcry
