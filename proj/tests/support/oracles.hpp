#pragma once

// Independent oracles for the test suites: brute-force enumeration, cofactor
// determinants, minor-gcd invariant factors, int64 normal forms and composite
// Simpson quadrature. Everything here stays independent of the library code
// paths it is used to check.

#include <complex>
#include <functional>
#include <random>

#include "torusact/action.hpp"
#include "torusact/folner.hpp"

namespace oracle {

using torusact::ActionSpec;
using torusact::Int;
using torusact::IntMatrix;
using torusact::RatMatrix;

// Determinant by recursive cofactor expansion.
Int cofactorDeterminant(const IntMatrix& m);

// gcd of all k x k minors for k = 1..min(rows, cols); stops at the first
// vanishing gcd. Invariant factors are the successive quotients.
std::vector<Int> minorGcds(const IntMatrix& m);
std::vector<Int> minorGcdInvariantFactors(const IntMatrix& m);

// Canonical row HNF over int64 (small inputs only); zero rows dropped.
std::vector<std::vector<long long>> hnfInt64(std::vector<std::vector<long long>> rows);

// Visits every u in Z^n with ||u||_inf <= bound.
void forEachBoxVector(std::size_t n, long bound,
                      const std::function<void(const std::vector<long long>&)>& visit);

// A random action with purely rational generators, together with the integer
// data (numerators over one common denominator) used for brute forcing.
struct RationalActionData {
    ActionSpec spec;
    long long commonDenominator = 1;
    // numerators[c][j] = commonDenominator * (coordinate c of generator j)
    std::vector<std::vector<long long>> numerators;
    bool latticeFamily = false;
};

RationalActionData randomRationalAction(std::mt19937_64& rng);

// HNF of every box vector satisfying the defining relation, entirely in int64.
IntMatrix bruteForceRelationBasis(const RationalActionData& data, long bound);

// Size of the (finite) orbit of 0 for a rational lattice action, by closure
// enumeration in Q/Z coordinates.
std::size_t bruteForceOrbitSize(const RationalActionData& data);

// Composite Simpson for the normalized box character integral, per axis.
std::complex<double> simpsonCharacterWeight(const torusact::FolnerFamily& f,
                                            std::span<const double> v, double t,
                                            std::size_t panelsPerAxis);

// Closed-form bound sum_{u not in Hperp} |a_u| / (2 pi min_{i: v_i != 0} |v_i(u)|),
// so that |A_T phi - target| <= bound / T on real boxes.
double weylEnvelopeConstant(const ActionSpec& action, const torusact::TrigPolynomial& phi);

// Random integer matrix with entries uniform in [lo, hi].
IntMatrix randomIntMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                          long hi);

// Random element of GL(2, Z) as a product of at most maxFactors elementary
// matrices (shears, a swap, a reflection).
IntMatrix randomGL2(std::mt19937_64& rng, int maxFactors = 6);

}  // namespace oracle
