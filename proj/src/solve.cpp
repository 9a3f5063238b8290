#include "torusact/solve.hpp"

#include <vector>

namespace torusact {

RationalSolveResult solveRationalLinear(const RatMatrix& a, const RatMatrix& rhs) {
    if (a.rows() != rhs.rows()) throw std::invalid_argument("solve shape mismatch");
    const std::size_t m = a.rows(), k = a.cols(), c = rhs.cols();

    RatMatrix aug(m, k + c);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < c; ++j) aug(i, k + j) = rhs(i, j);
    }

    std::vector<std::size_t> pivotRow(k);
    std::size_t r = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t p = r;
        while (p < m && aug(p, col) == 0) ++p;
        if (p == m) throw RankDeficientError("coefficient matrix is rank deficient");
        if (p != r)
            for (std::size_t j = 0; j < k + c; ++j) std::swap(aug(r, j), aug(p, j));
        Rat inv = 1 / aug(r, col);
        for (std::size_t j = col; j < k + c; ++j) aug(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug(i, col) == 0) continue;
            Rat f = aug(i, col);
            for (std::size_t j = col; j < k + c; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivotRow[col] = r;
        ++r;
    }

    // Rows below the pivot block must have vanished for consistency.
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (aug(i, k + j) != 0) return {false, RatMatrix()};

    RatMatrix x(k, c);
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t j = 0; j < c; ++j) x(col, j) = aug(pivotRow[col], k + j);
    return {true, std::move(x)};
}

IntegerSolveResult solveIntegerLinear(const RatMatrix& a, const RatMatrix& rhs) {
    RationalSolveResult r = solveRationalLinear(a, rhs);
    if (!r.consistent) return {IntegerSolveStatus::NoRationalSolution, std::nullopt};
    IntMatrix out(r.solution.rows(), r.solution.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) {
            const Rat& e = r.solution(i, j);
            if (e.get_den() != 1) return {IntegerSolveStatus::NonIntegral, std::nullopt};
            out(i, j) = e.get_num();
        }
    return {IntegerSolveStatus::Integral, std::move(out)};
}

}  // namespace torusact
