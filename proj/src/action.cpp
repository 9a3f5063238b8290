#include "torusact/action.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace torusact {

ActionSpec::ActionSpec(ActionFamily family, std::size_t timeDim,
                       std::vector<std::vector<SymbolicReal>> generators)
    : family_(family), d_(timeDim), generators_(std::move(generators)) {
    if (d_ < 1) throw std::invalid_argument("time dimension must be at least 1");
    if (generators_.empty()) throw std::invalid_argument("action needs at least one generator");
    basis_ = generators_[0][0].basis();
    for (auto& g : generators_) {
        if (g.size() != d_)
            throw std::invalid_argument("generator coordinate count does not match time dimension");
        for (auto& c : g) {
            if (!sameBasis(c.basis(), basis_))
                throw std::invalid_argument("generators over mixed bases");
            if (family_ == ActionFamily::LatticeAction) c = c.reducedMod1();
        }
    }
}

std::vector<SymbolicReal> ActionSpec::combination(std::span<const Int> u) const {
    if (u.size() != torusDim()) throw std::invalid_argument("combination length mismatch");
    std::vector<SymbolicReal> acc(d_, SymbolicReal::zero(basis_));
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        Rat f{u[j]};
        for (std::size_t i = 0; i < d_; ++i) acc[i] = acc[i] + generators_[j][i].scaled(f);
    }
    return acc;
}

namespace {

// Rows of the coefficient matrix belonging to the constant symbol, as a
// d x n rational matrix, and the remaining (irrational-symbol) rows.
void splitUnitRows(const RatMatrix& m, std::size_t d, std::size_t symbols, RatMatrix& unitPart,
                   RatMatrix& irrationalPart) {
    const std::size_t n = m.cols();
    unitPart = RatMatrix(d, n);
    irrationalPart = RatMatrix(d * (symbols - 1), n);
    std::size_t ir = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t s = 0; s < symbols; ++s) {
            if (s == 0) {
                for (std::size_t j = 0; j < n; ++j) unitPart(i, j) = m(i * symbols + s, j);
            } else {
                for (std::size_t j = 0; j < n; ++j) irrationalPart(ir, j) = m(i * symbols + s, j);
                ++ir;
            }
        }
}

}  // namespace

RelationLattice relationLattice(const ActionSpec& action) {
    RatMatrix m = coefficientMatrix(action.generators());
    if (action.family() == ActionFamily::RealFlow) return {rationalKernelLattice(m)};

    // LatticeAction: irrational symbol parts must vanish exactly, the
    // rational part only modulo Z^d.
    RatMatrix unitPart, irrationalPart;
    splitUnitRows(m, action.timeDim(), action.basis()->size(), unitPart, irrationalPart);
    Lattice kernel = rationalKernelLattice(irrationalPart);
    return {preimageLattice(unitPart, kernel)};
}

OrbitStructure orbitStructure(const RelationLattice& rl, std::size_t torusDim) {
    if (rl.ambientDim() != torusDim)
        throw std::invalid_argument("relation lattice has wrong ambient dimension");
    const std::size_t k = rl.rank();
    OrbitStructure out;
    out.freeRank = torusDim - k;

    SnfResult s = snf(rl.lattice.basis());
    // Basis rows are independent, so all k diagonal entries are nonzero.
    std::vector<Int> diag(k);
    for (std::size_t i = 0; i < k; ++i) diag[i] = s.d(i, i);
    for (const Int& f : diag)
        if (f > 1) out.invariantFactors.push_back(f);

    // In w = V^{-1} z coordinates the membership condition B z in Z^k reads
    // d_i w_i in Z. Reorder as [free | factors > 1 | collapsed d_i = 1].
    std::vector<std::size_t> order;
    for (std::size_t i = k; i < torusDim; ++i) order.push_back(i);
    for (std::size_t i = 0; i < k; ++i)
        if (diag[i] > 1) order.push_back(i);
    for (std::size_t i = 0; i < k; ++i)
        if (diag[i] == 1) order.push_back(i);

    IntMatrix perm(torusDim, torusDim);
    for (std::size_t r = 0; r < torusDim; ++r) perm(r, order[r]) = 1;
    out.coordinateChange = mul(perm, s.vInv);
    out.coordinateChangeInv = mul(s.v, perm.transpose());
    return out;
}

KroneckerResult kroneckerSolvable(const ActionSpec& action,
                                  const std::vector<SymbolicReal>& theta) {
    const std::size_t n = action.torusDim();
    if (theta.size() != n) throw std::invalid_argument("target length does not match torus dimension");
    for (const auto& t : theta)
        if (!sameBasis(t.basis(), action.basis()))
            throw std::invalid_argument("target over a different basis");

    RelationLattice rl = relationLattice(action);
    for (std::size_t i = 0; i < rl.rank(); ++i) {
        SymbolicReal dot = SymbolicReal::zero(action.basis());
        for (std::size_t j = 0; j < n; ++j) {
            const Int& c = rl.lattice.basis()(i, j);
            if (c != 0) dot = dot + theta[j].scaled(Rat(c));
        }
        if (!dot.isIntegerValue()) return {false, rl.lattice.basis().row(i)};
    }
    return {true, std::nullopt};
}

bool isUniquelyErgodic(const ActionSpec& action) { return relationLattice(action).rank() == 0; }

CosetSignature cosetSignature(const RelationLattice& rl, std::span<const double> z) {
    if (z.size() != rl.ambientDim())
        throw std::invalid_argument("point dimension does not match relation lattice");
    CosetSignature sig;
    sig.values.reserve(rl.rank());
    for (std::size_t i = 0; i < rl.rank(); ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < z.size(); ++j)
            dot += rl.lattice.basis()(i, j).get_d() * z[j];
        double frac = dot - std::floor(dot);
        if (frac >= 1.0) frac = 0.0;
        sig.values.push_back(frac);
    }
    return sig;
}

bool sameCoset(const CosetSignature& a, const CosetSignature& b, double tolerance) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        double diff = std::fabs(a.values[i] - b.values[i]);
        if (std::min(diff, 1.0 - diff) > tolerance) return false;
    }
    return true;
}

}  // namespace torusact
