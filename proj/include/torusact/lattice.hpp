#pragma once

#include <span>

#include "torusact/normal_form.hpp"

namespace torusact {

/// Sublattice of Z^n, held as its unique row-HNF basis (zero rows dropped).
/// Two lattices are equal iff their bases are identical.
class Lattice {
public:
    /// Lattice spanned by the rows of `generators` (any number of rows).
    static Lattice fromGenerators(std::size_t ambientDim, const IntMatrix& generators);
    static Lattice full(std::size_t n) { return fromGenerators(n, IntMatrix::identity(n)); }
    static Lattice trivial(std::size_t n) { return fromGenerators(n, IntMatrix(0, n)); }

    std::size_t ambientDim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    /// Membership via reduction against the HNF basis.
    bool contains(std::span<const Int> u) const;

    bool operator==(const Lattice& other) const = default;

private:
    Lattice(std::size_t ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_ = 0;
    IntMatrix basis_;
};

/// {x in Z^r : x * m = 0} for an integer r x c matrix, i.e. the left kernel.
/// The result is the full (saturated) integral kernel.
Lattice integerRowKernel(const IntMatrix& m);

/// {u in Z^n : m * u = 0} for a rational matrix with n columns.
Lattice rationalKernelLattice(const RatMatrix& m);

/// {u in sub : b * u is integral}, for a rational d x n matrix b and a
/// sublattice sub of Z^n. Computed exactly by denominator clearing.
Lattice preimageLattice(const RatMatrix& b, const Lattice& sub);

}  // namespace torusact
