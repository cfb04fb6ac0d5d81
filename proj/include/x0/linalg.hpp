#pragma once

#include <optional>

#include "x0/types.hpp"

namespace x0 {

// Exact rank by Gaussian elimination over Q.
template <class Scalar>
int rank(Mat<Scalar> a) {
    int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.row(r).swap(a.row(piv));
        for (int i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Scalar f = a(i, c) / a(r, c);
            for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

// Nonnegative lam with cols * lam = v, or nullopt if v is outside the cone
// spanned by the columns. Phase-one simplex with Bland's rule, exact.
std::optional<RVec> cone_combination(const RMat& cols, const RVec& v);

}  // namespace x0
