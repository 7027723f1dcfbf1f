#include "psalg/linalg.hpp"

namespace psalg {

size_t row_reduce(Mat& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

bool same_row_space(const Mat& a, const Mat& b) {
    Mat ra = a, rb = b;
    size_t ka = row_reduce(ra), kb = row_reduce(rb);
    if (ka != kb) return false;
    Mat joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    return row_reduce(joint) == ka;
}

}  // namespace psalg
