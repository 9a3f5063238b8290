#pragma once

#include <cstdint>

#include "torusact/action.hpp"
#include "torusact/solve.hpp"

namespace torusact {

enum class ConjugacyStatus { Conjugate, NotConjugate, NotApplicable };

enum class ConjugacyFailure { NoRationalSolution, NonIntegralSolution, NotUnimodular };

struct ConjugacyResult {
    ConjugacyStatus status = ConjugacyStatus::NotApplicable;
    std::optional<IntMatrix> witness;              // set when Conjugate
    std::optional<ConjugacyFailure> reason;        // set when NotConjugate
    std::optional<std::vector<Int>> obstruction;   // violated relation when NotApplicable
    int nonMinimalAction = 0;                      // 1 = first argument, 2 = second
};

/// Decides topological conjugacy of two minimal translation actions and
/// returns the unique GL(n, Z) witness P with h = P g. Minimality of both
/// inputs is enforced (NotApplicable otherwise). Throws on mismatched
/// family, dimensions, or bases.
ConjugacyResult findConjugacy(const ActionSpec& g, const ActionSpec& h);

/// frac(P z) in additive coordinates; the multiplicative form is the torus
/// automorphism (or endomorphism, for non-unimodular P) z_i -> prod z_j^{p_ij}.
std::vector<double> applyAutomorphism(const IntMatrix& p, std::span<const double> z);

/// Max circular deviation of c * Psi_P(Phi^g_gamma(z)) from
/// Phi^h_gamma(c * Psi_P(z)) over `samples` random characters gamma and
/// random points z. Exact witnesses stay below 1e-9; zero samples give 0.
double verifyConjugacyNumerically(const ActionSpec& g, const ActionSpec& h, const IntMatrix& p,
                                  std::span<const double> c, std::size_t samples,
                                  std::uint64_t seed);

}  // namespace torusact
