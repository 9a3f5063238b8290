#pragma once

#include <span>

#include "torusact/lattice.hpp"
#include "torusact/real_field.hpp"

namespace torusact {

/// Which dual group acts: RealFlow is G = R^d acting through the characters
/// x -> e^{2 pi i g.x}; LatticeAction is G = T^d with dual Z^d.
enum class ActionFamily { RealFlow, LatticeAction };

/// Translation action data on T^n: n generators, each a vector in R^d with
/// exact symbolic coordinates over one shared basis. LatticeAction generators
/// are canonicalized so their rational ("1"-symbol) parts lie in [0, 1).
class ActionSpec {
public:
    ActionSpec(ActionFamily family, std::size_t timeDim,
               std::vector<std::vector<SymbolicReal>> generators);

    ActionFamily family() const { return family_; }
    std::size_t timeDim() const { return d_; }
    std::size_t torusDim() const { return generators_.size(); }
    const std::vector<std::vector<SymbolicReal>>& generators() const { return generators_; }
    const RealBasisPtr& basis() const { return basis_; }

    /// sum_j u_j * g_j as a symbolic vector in R^d.
    std::vector<SymbolicReal> combination(std::span<const Int> u) const;

private:
    ActionFamily family_;
    std::size_t d_;
    RealBasisPtr basis_;
    std::vector<std::vector<SymbolicReal>> generators_;
};

/// The annihilator H^perp of the orbit closure H: all integer vectors u with
/// sum_j u_j g_j = 0 in G (for LatticeAction, = 0 mod Z^d).
struct RelationLattice {
    Lattice lattice;

    std::size_t ambientDim() const { return lattice.ambientDim(); }
    std::size_t rank() const { return lattice.rank(); }
};

RelationLattice relationLattice(const ActionSpec& action);

/// Structure of the orbit closure H = T^freeRank x prod Z/d_i Z, read off the
/// Smith normal form of the relation-lattice basis. In the coordinates
/// w = coordinateChange * z (a torus automorphism), H sits canonically as
/// [free coordinates | cyclic factors of the listed orders | collapsed].
struct OrbitStructure {
    std::size_t freeRank = 0;
    std::vector<Int> invariantFactors;  // each > 1, divisibility chain
    IntMatrix coordinateChange;         // w = Q z
    IntMatrix coordinateChangeInv;      // z = Q^{-1} w
};

OrbitStructure orbitStructure(const RelationLattice& rl, std::size_t torusDim);

struct KroneckerResult {
    bool solvable = false;
    std::optional<std::vector<Int>> certificate;  // violating relation when unsolvable
};

/// Kronecker criterion: the target is simultaneously approximable iff every
/// relation u in H^perp has u . theta integral (checked exactly).
KroneckerResult kroneckerSolvable(const ActionSpec& action,
                                  const std::vector<SymbolicReal>& theta);

bool isUniquelyErgodic(const ActionSpec& action);

/// Residues frac(u . z) over the HNF basis rows u of H^perp; constant on
/// cosets of H, distinct across cosets (up to the signature tolerance).
struct CosetSignature {
    std::vector<double> values;
};

CosetSignature cosetSignature(const RelationLattice& rl, std::span<const double> z);

inline constexpr double kSignatureTolerance = 1e-9;

/// Compares signatures in the circular metric min(|x-y|, 1-|x-y|) per entry.
bool sameCoset(const CosetSignature& a, const CosetSignature& b,
               double tolerance = kSignatureTolerance);

}  // namespace torusact
