#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcry/rational.hpp"

#include <random>

using namespace symcry;

namespace {

std::mt19937 rng(20260823);

LaurentPoly random_laurent() {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-5, 5), numd(-6, 6), dend(1, 4);
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Rational c(numd(rng), dend(rng));
        c.canonicalize();
        p.set_coeff(expd(rng), c);
    }
    return p;
}

RationalFunction random_ratfun() {
    LaurentPoly den = random_laurent();
    while (den.is_zero()) den = random_laurent();
    return RationalFunction::fraction(random_laurent(), den);
}

}  // namespace

TEST_CASE("laurent ring axioms, randomized") {
    for (int t = 0; t < 50; ++t) {
        LaurentPoly a = random_laurent(), b = random_laurent(), c = random_laurent();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == LaurentPoly::zero());
        CHECK(a * LaurentPoly::one() == a);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
    }
}

TEST_CASE("rational function field axioms, randomized") {
    for (int t = 0; t < 40; ++t) {
        RationalFunction a = random_ratfun(), b = random_ratfun(), c = random_ratfun();
        CHECK(a + b == b + a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RationalFunction());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RationalFunction(1));
            CHECK(b / a * a == b);
        }
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
}

TEST_CASE("canonical form invariants") {
    for (int t = 0; t < 40; ++t) {
        RationalFunction a = random_ratfun();
        if (a.is_zero()) {
            CHECK(!a.ord().has_value());
            continue;
        }
        CHECK(a.num()[0] != 0);
        CHECK(a.den()[0] != 0);
        CHECK(a.den().back() == 1);  // monic
        CHECK(*a.ord() == a.ordv());
    }
}

TEST_CASE("ord is a valuation") {
    RationalFunction v2_over = RationalFunction::fraction(
        LaurentPoly::monomial(2, 1), LaurentPoly::one() - LaurentPoly::monomial(1, 1));
    CHECK(*v2_over.ord() == 2);  // v^2/(1-v)
    RationalFunction f = RationalFunction::fraction(
        LaurentPoly::one() + LaurentPoly::monomial(1, 1), LaurentPoly::monomial(3, 1));
    CHECK(*f.ord() == -3);  // (1+v)/v^3
    for (int t = 0; t < 40; ++t) {
        RationalFunction a = random_ratfun(), b = random_ratfun();
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(*(a * b).ord() == *a.ord() + *b.ord());
        if (!(a + b).is_zero())
            CHECK(*(a + b).ord() >= std::min(*a.ord(), *b.ord()));
    }
}

TEST_CASE("bar via reversal agrees with substitution on monomials") {
    RationalFunction m = RationalFunction::monomial(3, Rational(5, 2));
    CHECK(m.bar() == RationalFunction::monomial(-3, Rational(5, 2)));
    // bar fixes symmetric elements
    LaurentPoly sym = LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(-2, 1);
    CHECK(RationalFunction(sym).bar() == RationalFunction(sym));
}

TEST_CASE("power series expansion") {
    // 1/(1-v) = 1 + v + v^2 + ...
    RationalFunction f = RationalFunction(1) /
                         RationalFunction(LaurentPoly::one() - LaurentPoly::monomial(1, 1));
    auto s = f.series(0, 5);
    for (int k = 0; k <= 5; ++k) CHECK(s[static_cast<size_t>(k)] == 1);
    auto below = f.series(-3, -1);
    for (auto& c : below) CHECK(c == 0);
    // v^{-1}/(1+v): starts at v^{-1} with alternating signs
    RationalFunction g = RationalFunction::monomial(-1) /
                         RationalFunction(LaurentPoly::one() + LaurentPoly::monomial(1, 1));
    auto sg = g.series(-1, 2);
    CHECK(sg[0] == 1);
    CHECK(sg[1] == -1);
    CHECK(sg[2] == 1);
    CHECK(sg[3] == -1);
}

TEST_CASE("membership in 1 + vA0") {
    LaurentPoly one_plus_v = LaurentPoly::one() + LaurentPoly::monomial(1, 1);
    CHECK(RationalFunction(one_plus_v).in_one_plus_vA0(0));
    CHECK(RationalFunction(LaurentPoly::monomial(-1, 1) + LaurentPoly::one())
              .in_one_plus_vA0(-1));  // v^{-1}(1+v)
    CHECK_FALSE(RationalFunction(one_plus_v).in_one_plus_vA0(1));
    CHECK(RationalFunction(1).in_one_plus_vA0(0));
    CHECK_FALSE(RationalFunction(2).in_one_plus_vA0(0));
}

TEST_CASE("quantum integers and binomials") {
    CHECK(qint(0) == LaurentPoly::zero());
    CHECK(qint(1) == LaurentPoly::one());
    LaurentPoly q2 = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, 1);
    CHECK(qint(2) == q2);
    LaurentPoly q3 =
        LaurentPoly::monomial(2, 1) + LaurentPoly::one() + LaurentPoly::monomial(-2, 1);
    CHECK(qint(3) == q3);
    CHECK(qfact(3) == qint(1) * qint(2) * qint(3));
    // [4 choose 2] = v^4 + v^2 + 2 + v^-2 + v^-4
    LaurentPoly b42 = LaurentPoly::monomial(4, 1) + LaurentPoly::monomial(2, 1) +
                      LaurentPoly::monomial(0, 2) + LaurentPoly::monomial(-2, 1) +
                      LaurentPoly::monomial(-4, 1);
    CHECK(qbinom(4, 2) == b42);
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(qbinom(n, k) == qbinom(n, k).bar());
            CHECK(qbinom(n, k) == qbinom(n, n - k));
            CHECK(qbinom(n, k).is_integral());
        }
    // Pascal (quantum): [n,k] = v^k [n-1,k] + v^{k-n} [n-1,k-1]
    for (long n = 1; n <= 6; ++n)
        for (long k = 1; k < n; ++k)
            CHECK(qbinom(n, k) == LaurentPoly::monomial(k, 1) * qbinom(n - 1, k) +
                                      LaurentPoly::monomial(k - n, 1) * qbinom(n - 1, k - 1));
}

TEST_CASE("laurent/rational conversions") {
    for (int t = 0; t < 30; ++t) {
        LaurentPoly p = random_laurent();
        RationalFunction f(p);
        REQUIRE(f.is_laurent());
        CHECK(f.to_laurent() == p);
    }
    RationalFunction nonpoly = RationalFunction(1) /
                               RationalFunction(LaurentPoly::one() + LaurentPoly::monomial(1, 1));
    CHECK_FALSE(nonpoly.is_laurent());
}
