#include "x0/linalg.hpp"

#include <vector>

namespace x0 {

std::optional<RVec> cone_combination(const RMat& cols, const RVec& v) {
    const int m = static_cast<int>(cols.rows());
    const int n = static_cast<int>(cols.cols());
    if (v.size() != m) throw std::invalid_argument("cone_combination: dimension mismatch");

    // Tableau rows 0..m-1 are constraints, row m is the phase-one objective.
    // Columns 0..n-1 original, n..n+m-1 artificial, n+m is the right-hand side.
    const int W = n + m + 1;
    RMat t = RMat::Zero(m + 1, W);
    for (int i = 0; i < m; ++i) {
        int s = v(i) < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) t(i, j) = s * cols(i, j);
        t(i, n + i) = 1;
        t(i, W - 1) = s * v(i);
    }
    // objective: minimise the sum of artificials, written as reduced costs
    for (int j = 0; j < W; ++j) {
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += t(i, j);
        t(m, j) = (j >= n && j < n + m) ? Rat(0) : -s;
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (t(m, j) < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rat ratio = t(i, W - 1) / t(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded cannot happen in phase one
        Rat p = t(leave, enter);
        for (int j = 0; j < W; ++j) t(leave, j) /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || t(i, enter) == 0) continue;
            Rat f = t(i, enter);
            for (int j = 0; j < W; ++j) t(i, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }
    if (t(m, W - 1) != 0) return std::nullopt;
    RVec lam = RVec::Zero(n);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) lam(basis[i]) = t(i, W - 1);
    if (RVec(cols * lam) != v) return std::nullopt;
    return lam;
}

}  // namespace x0
