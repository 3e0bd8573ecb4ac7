#pragma once

// Dense exact linear algebra over Q(v) (RationalFunction) and over Q,
// sized for desk-scale Gram matrices.

#include "symcry/rational.hpp"

#include <vector>

namespace symcry {

using Vec = std::vector<RationalFunction>;
using Mat = std::vector<Vec>;  // row-major

Mat identity_mat(size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const RationalFunction& c, const Mat& a);
Mat mat_transpose(const Mat& a);
bool mat_is_zero(const Mat& a);

size_t mat_rank(Mat a);

// leftmost maximal set of linearly independent columns
std::vector<size_t> independent_columns(Mat a);

// solve A x = b for square nonsingular A; throws on singular
Vec solve_square(Mat a, Vec b);

// basis of { x : A x = 0 }
std::vector<Vec> kernel(Mat a);

// exact rational linear systems (for the global-basis solver)
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

struct QSolveResult {
    bool consistent = false;
    size_t nullity = 0;
    QVec solution;  // one solution when consistent
};
QSolveResult qsolve(QMat a, QVec b);

}  // namespace symcry
