#pragma once

#include "torusact/matrix.hpp"

namespace torusact {

/// Row-style Hermite normal form.
///
/// Convention: pivot entries positive, pivot columns strictly increasing row
/// by row, entries above each pivot reduced into [0, pivot). Zero rows are
/// dropped from `h`; the transform keeps full size, so that
///   u * m  ==  [h stacked over (m.rows - h.rows) zero rows],
/// with u unimodular (|det u| = 1). The row span of h equals that of m.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};

HnfResult hnf(const IntMatrix& m);

/// HNF basis only (no transform), for large stacks of generators.
IntMatrix hnfBasis(const IntMatrix& m);

/// Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
/// d(0,0) | d(1,1) | ... >= 0. The diagonal entries are the invariant factors.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    IntMatrix vInv;
};

SnfResult snf(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws on
/// non-square input.
Int determinant(const IntMatrix& m);

/// True iff |det m| = 1. Throws on non-square input.
bool isUnimodular(const IntMatrix& m);

/// Exact inverse of a unimodular matrix (throws if |det| != 1).
IntMatrix unimodularInverse(const IntMatrix& m);

}  // namespace torusact
