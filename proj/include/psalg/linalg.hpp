#pragma once

// Exact rational Gaussian elimination, enough for rank and span comparisons.

#include <vector>

#include "psalg/rational.hpp"

namespace psalg {

using Mat = std::vector<std::vector<Rational>>;

// Reduces in place to row echelon form; returns the rank.
size_t row_reduce(Mat& m);

inline size_t rank(Mat m) { return row_reduce(m); }

// span(rows of a) == span(rows of b)
bool same_row_space(const Mat& a, const Mat& b);

}  // namespace psalg
