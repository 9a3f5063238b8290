#include "torusact/conjugacy.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace torusact {

namespace {

double frac(double x) {
    double f = x - std::floor(x);
    return f >= 1.0 ? 0.0 : f;
}

double circularDistance(double a, double b) {
    double d = std::fabs(frac(a) - frac(b));
    return std::min(d, 1.0 - d);
}

void requireCompatible(const ActionSpec& g, const ActionSpec& h) {
    if (g.family() != h.family()) throw std::invalid_argument("actions of different families");
    if (g.timeDim() != h.timeDim() || g.torusDim() != h.torusDim())
        throw std::invalid_argument("actions of different dimensions");
    if (!sameBasis(g.basis(), h.basis()))
        throw std::invalid_argument("actions over different bases");
}

}  // namespace

ConjugacyResult findConjugacy(const ActionSpec& g, const ActionSpec& h) {
    requireCompatible(g, h);
    const std::size_t n = g.torusDim();
    const std::size_t d = g.timeDim();
    const std::size_t symbols = g.basis()->size();

    ConjugacyResult out;
    RelationLattice rg = relationLattice(g);
    if (rg.rank() > 0) {
        out.status = ConjugacyStatus::NotApplicable;
        out.obstruction = rg.lattice.basis().row(0);
        out.nonMinimalAction = 1;
        return out;
    }
    RelationLattice rh = relationLattice(h);
    if (rh.rank() > 0) {
        out.status = ConjugacyStatus::NotApplicable;
        out.obstruction = rh.lattice.basis().row(0);
        out.nonMinimalAction = 2;
        return out;
    }

    // Row i of P solves sum_j p_ij g_j = h_i symbol-wise; for lattice actions
    // the constant-symbol rows only hold modulo Z^d, so each row also carries
    // d integer offset unknowns with coefficient -1 on those rows.
    const bool modOne = g.family() == ActionFamily::LatticeAction;
    const std::size_t unknowns = n + (modOne ? d : 0);
    RatMatrix mg = coefficientMatrix(g.generators());
    RatMatrix a(d * symbols, unknowns);
    for (std::size_t r = 0; r < d * symbols; ++r)
        for (std::size_t j = 0; j < n; ++j) a(r, j) = mg(r, j);
    if (modOne)
        for (std::size_t i = 0; i < d; ++i) a(i * symbols, n + i) = -1;

    RatMatrix rhs(d * symbols, n);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t s = 0; s < symbols; ++s)
                rhs(i * symbols + s, col) = h.generators()[col][i].coord(s);

    IntegerSolveResult solved = solveIntegerLinear(a, rhs);
    if (solved.status == IntegerSolveStatus::NoRationalSolution) {
        out.status = ConjugacyStatus::NotConjugate;
        out.reason = ConjugacyFailure::NoRationalSolution;
        return out;
    }
    if (solved.status == IntegerSolveStatus::NonIntegral) {
        out.status = ConjugacyStatus::NotConjugate;
        out.reason = ConjugacyFailure::NonIntegralSolution;
        return out;
    }

    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = (*solved.solution)(j, i);
    if (!isUnimodular(p)) {
        out.status = ConjugacyStatus::NotConjugate;
        out.reason = ConjugacyFailure::NotUnimodular;
        return out;
    }
    out.status = ConjugacyStatus::Conjugate;
    out.witness = std::move(p);
    return out;
}

std::vector<double> applyAutomorphism(const IntMatrix& p, std::span<const double> z) {
    if (p.cols() != z.size()) throw std::invalid_argument("automorphism dimension mismatch");
    std::vector<double> out(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < p.cols(); ++j) acc += p(i, j).get_d() * z[j];
        out[i] = frac(acc);
    }
    return out;
}

double verifyConjugacyNumerically(const ActionSpec& g, const ActionSpec& h, const IntMatrix& p,
                                  std::span<const double> c, std::size_t samples,
                                  std::uint64_t seed) {
    requireCompatible(g, h);
    const std::size_t n = g.torusDim();
    const std::size_t d = g.timeDim();
    if (p.rows() != n || p.cols() != n) throw std::invalid_argument("witness has wrong shape");
    if (c.size() != n) throw std::invalid_argument("affine constant has wrong dimension");

    std::vector<std::vector<double>> gv(n, std::vector<double>(d));
    std::vector<std::vector<double>> hv(n, std::vector<double>(d));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            gv[j][i] = g.generators()[j][i].evalNumeric();
            hv[j][i] = h.generators()[j][i].evalNumeric();
        }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> realBox(-10.0, 10.0);
    std::uniform_int_distribution<int> intBox(-10, 10);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto translate = [&](const std::vector<std::vector<double>>& gen,
                         const std::vector<double>& z,
                         const std::vector<double>& x) {
        std::vector<double> out(n);
        for (std::size_t j = 0; j < n; ++j) {
            double shift = 0.0;
            for (std::size_t i = 0; i < d; ++i) shift += gen[j][i] * x[i];
            out[j] = frac(z[j] + shift);
        }
        return out;
    };

    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> x(d);
        for (double& xi : x)
            xi = g.family() == ActionFamily::RealFlow ? realBox(rng)
                                                      : static_cast<double>(intBox(rng));
        std::vector<double> z(n);
        for (double& zi : z) zi = unit(rng);

        std::vector<double> lhs = applyAutomorphism(p, translate(gv, z, x));
        for (std::size_t j = 0; j < n; ++j) lhs[j] = frac(lhs[j] + c[j]);

        std::vector<double> pz = applyAutomorphism(p, z);
        for (std::size_t j = 0; j < n; ++j) pz[j] = frac(pz[j] + c[j]);
        std::vector<double> rhs = translate(hv, pz, x);

        for (std::size_t j = 0; j < n; ++j)
            worst = std::max(worst, circularDistance(lhs[j], rhs[j]));
    }
    return worst;
}

}  // namespace torusact
