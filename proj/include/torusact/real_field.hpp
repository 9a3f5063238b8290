#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusact/matrix.hpp"

namespace torusact {

/// Ordered list of real symbols assumed Q-independent. Symbol 0 is always the
/// constant "1". Independence is a trusted declaration, not verified; every
/// downstream answer is relative to it.
class RealBasis {
public:
    /// `symbols` are the non-constant symbols; "1" is prepended automatically.
    static std::shared_ptr<const RealBasis> create(
        std::vector<std::pair<std::string, double>> symbols);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    double value(std::size_t i) const { return values_[i]; }
    std::optional<std::size_t> indexOf(const std::string& name) const;

    bool operator==(const RealBasis& other) const = default;

private:
    RealBasis() = default;
    std::vector<std::string> names_;
    std::vector<double> values_;
};

using RealBasisPtr = std::shared_ptr<const RealBasis>;

bool sameBasis(const RealBasisPtr& a, const RealBasisPtr& b);

/// Exact real number: a rational coordinate vector over a RealBasis.
class SymbolicReal {
public:
    SymbolicReal(RealBasisPtr basis, std::vector<Rat> coords);
    static SymbolicReal zero(RealBasisPtr basis);
    static SymbolicReal constant(RealBasisPtr basis, const Rat& value);
    static SymbolicReal symbol(RealBasisPtr basis, std::size_t index, const Rat& scale = Rat(1));

    const RealBasisPtr& basis() const { return basis_; }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& coord(std::size_t i) const { return coords_[i]; }
    const Rat& unitCoord() const { return coords_[0]; }

    /// Sum of coords[s] * value[s], left to right.
    double evalNumeric() const;

    bool isZero() const;
    /// True iff the value is an integer: unit coordinate integral, rest zero.
    bool isIntegerValue() const;
    /// Unit coordinate reduced into [0, 1); other coordinates untouched.
    SymbolicReal reducedMod1() const;

    SymbolicReal operator+(const SymbolicReal& other) const;
    SymbolicReal operator-(const SymbolicReal& other) const;
    SymbolicReal operator-() const;
    SymbolicReal scaled(const Rat& factor) const;

    bool operator==(const SymbolicReal& other) const;

private:
    RealBasisPtr basis_;
    std::vector<Rat> coords_;
};

/// Stacks the coordinates of n vectors in R^d (each entry a SymbolicReal over
/// one shared basis) into a (d * |basis|) x n rational matrix; row (i, s)
/// holds the symbol-s coordinate of the i-th component of each element. Its
/// integral kernel is exactly {u : sum_j u_j * elements[j] = 0 in R^d}.
RatMatrix coefficientMatrix(const std::vector<std::vector<SymbolicReal>>& elements);

/// Coordinates of alpha^k in the power basis {1, alpha, ..., alpha^(m-1)}
/// for alpha a root of the degree-m integer polynomial `minPoly`
/// (coefficients c_0..c_m, constant term first; normalized to monic over Q).
std::vector<Rat> powerBasisCoords(const std::vector<Int>& minPoly, unsigned k);

}  // namespace torusact
