#include "symcry/linalg.hpp"

#include <stdexcept>

namespace symcry {

Mat identity_mat(size_t n) {
    Mat m(n, Vec(n, RationalFunction()));
    for (size_t i = 0; i < n; ++i) m[i][i] = RationalFunction(1);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Mat r(n, Vec(m, RationalFunction()));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r(a.size(), RationalFunction());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) r[i] += a[i][j] * x[j];
    }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Mat mat_scale(const RationalFunction& c, const Mat& a) {
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

Mat mat_transpose(const Mat& a) {
    size_t n = a.size(), m = n ? a[0].size() : 0;
    Mat r(m, Vec(n, RationalFunction()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

namespace {

// row echelon in place; returns pivot columns (in order)
std::vector<size_t> echelon(Mat& a) {
    std::vector<size_t> pivots;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        RationalFunction inv = a[r][c].inverse();
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            RationalFunction f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t mat_rank(Mat a) { return echelon(a).size(); }

std::vector<size_t> independent_columns(Mat a) { return echelon(a); }

Vec solve_square(Mat a, Vec b) {
    size_t n = a.size();
    if (n == 0) return {};
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a);
    // the augmented column must not carry a pivot
    if (pivots.size() != n || pivots.back() >= n)
        throw std::runtime_error("solve_square: singular matrix");
    Vec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::vector<Vec> kernel(Mat a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec x(cols, RationalFunction());
        x[fc] = RationalFunction(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < fc) x[pivots[r]] = -a[r][fc];
        basis.push_back(std::move(x));
    }
    return basis;
}

QSolveResult qsolve(QMat a, QVec b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = a[r][c];
        for (size_t j = c; j <= cols; ++j) a[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    QSolveResult res;
    for (size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return res;  // inconsistent
    res.consistent = true;
    res.nullity = cols - pivots.size();
    res.solution.assign(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) res.solution[pivots[i]] = a[i][cols];
    return res;
}

}  // namespace symcry
