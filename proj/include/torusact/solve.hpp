#pragma once

#include <optional>

#include "torusact/matrix.hpp"

namespace torusact {

/// Thrown when a linear solve requires full column rank and does not have it.
struct RankDeficientError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RationalSolveResult {
    bool consistent = false;
    RatMatrix solution;  // valid iff consistent
};

/// Unique rational solution of a*x = rhs for a matrix of full column rank.
/// Throws RankDeficientError otherwise.
RationalSolveResult solveRationalLinear(const RatMatrix& a, const RatMatrix& rhs);

enum class IntegerSolveStatus { Integral, NonIntegral, NoRationalSolution };

struct IntegerSolveResult {
    IntegerSolveStatus status = IntegerSolveStatus::NoRationalSolution;
    std::optional<IntMatrix> solution;  // present iff status == Integral
};

/// Unique solution of a*x = rhs, reported only when integral; distinguishes
/// "no rational solution" from "rational but non-integral".
IntegerSolveResult solveIntegerLinear(const RatMatrix& a, const RatMatrix& rhs);

}  // namespace torusact
