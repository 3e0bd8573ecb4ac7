#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcry/linalg.hpp"

#include <random>

using namespace symcry;

namespace {

std::mt19937 rng(7);

RationalFunction rand_entry() {
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
    int x = c(rng);
    if (x == 0) return RationalFunction();
    return RationalFunction::monomial(e(rng), Rational(x));
}

// invertible by construction: unit lower times unit upper plus nonzero diag
Mat random_invertible(size_t n) {
    Mat l = identity_mat(n), u = identity_mat(n);
    std::uniform_int_distribution<int> d(1, 3);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < i; ++j) l[i][j] = rand_entry();
        for (size_t j = i + 1; j < n; ++j) u[i][j] = rand_entry();
        u[i][i] = RationalFunction(d(rng));
    }
    return mat_mul(l, u);
}

Vec random_vec(size_t n) {
    Vec x(n);
    for (auto& e : x) e = rand_entry();
    return x;
}

}  // namespace

TEST_CASE("solve_square recovers known solutions") {
    for (size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 8; ++t) {
            Mat a = random_invertible(n);
            Vec x = random_vec(n);
            Vec b = mat_vec(a, x);
            Vec got = solve_square(a, b);
            for (size_t i = 0; i < n; ++i) CHECK(got[i] == x[i]);
        }
}

TEST_CASE("solve_square throws on singular input") {
    Mat a(2, Vec(2));
    a[0][0] = RationalFunction(1);
    a[0][1] = RationalFunction(2);
    a[1][0] = RationalFunction(2);
    a[1][1] = RationalFunction(4);
    CHECK_THROWS(solve_square(a, Vec(2, RationalFunction(1))));
}

TEST_CASE("rank and kernel are consistent") {
    for (int t = 0; t < 10; ++t) {
        // build a 4x6 matrix of rank <= 3 as product of 4x3 and 3x6
        Mat a(4, Vec(3)), b(3, Vec(6));
        for (auto& row : a)
            for (auto& e : row) e = rand_entry();
        for (auto& row : b)
            for (auto& e : row) e = rand_entry();
        Mat m = mat_mul(a, b);
        size_t r = mat_rank(m);
        CHECK(r <= 3);
        auto ker = kernel(m);
        CHECK(ker.size() == 6 - r);
        for (const auto& k : ker) {
            Vec img = mat_vec(m, k);
            for (const auto& e : img) CHECK(e.is_zero());
        }
        CHECK(independent_columns(m).size() == r);
    }
}

TEST_CASE("independent_columns picks leftmost pivots") {
    // columns: c0, 2*c0, independent c2
    Mat m(2, Vec(3));
    m[0][0] = RationalFunction(1);
    m[1][0] = RationalFunction::monomial(1);
    m[0][1] = RationalFunction(2);
    m[1][1] = RationalFunction::monomial(1, 2);
    m[0][2] = RationalFunction();
    m[1][2] = RationalFunction(1);
    auto cols = independent_columns(m);
    REQUIRE(cols.size() == 2);
    CHECK(cols[0] == 0);
    CHECK(cols[1] == 2);
}

TEST_CASE("matrix algebra sanity") {
    Mat a = random_invertible(3);
    CHECK(mat_is_zero(mat_sub(a, a)));
    CHECK(mat_mul(a, identity_mat(3)) == a);
    CHECK(mat_transpose(mat_transpose(a)) == a);
    Mat twice = mat_add(a, a);
    CHECK(mat_scale(RationalFunction(2), a) == twice);
}

TEST_CASE("rational solver qsolve") {
    // unique solution
    QMat a{{Rational(1), Rational(2)}, {Rational(3), Rational(5)}};
    QVec b{Rational(5), Rational(13)};
    auto r = qsolve(a, b);
    REQUIRE(r.consistent);
    CHECK(r.nullity == 0);
    CHECK(r.solution[0] == 1);
    CHECK(r.solution[1] == 2);
    // inconsistent
    QMat a2{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    auto r2 = qsolve(a2, QVec{Rational(1), Rational(3)});
    CHECK_FALSE(r2.consistent);
    // underdetermined
    auto r3 = qsolve(a2, QVec{Rational(1), Rational(2)});
    REQUIRE(r3.consistent);
    CHECK(r3.nullity == 1);
    CHECK(r3.solution[0] + r3.solution[1] == 1);
    // randomized: A x = A x0 is always consistent with x0 - solution in the kernel
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 20; ++t) {
        QMat m(3, QVec(5));
        QVec x0(5);
        for (auto& row : m)
            for (auto& e : row) e = c(rng);
        for (auto& e : x0) e = c(rng);
        QVec rhs(3, Rational(0));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 5; ++j) rhs[i] += m[i][j] * x0[j];
        auto rr = qsolve(m, rhs);
        REQUIRE(rr.consistent);
        for (size_t i = 0; i < 3; ++i) {
            Rational acc(0);
            for (size_t j = 0; j < 5; ++j) acc += m[i][j] * rr.solution[j];
            CHECK(acc == rhs[i]);
        }
    }
}
