#pragma once

#include <complex>
#include <iosfwd>

#include "torusact/action.hpp"

namespace torusact {

/// Shifted boxes: F_T = [-T, T]^d + shift in R^d, or
/// F_N = {-N, ..., N}^d + shift in Z^d. |F_T| = (2T)^d, |F_N| = (2N+1)^d,
/// independent of the shift.
enum class FolnerKind { RealBox, LatticeBox };

struct FolnerFamily {
    FolnerKind kind = FolnerKind::RealBox;
    std::size_t dim = 1;
    std::vector<double> shift;  // integral entries for LatticeBox

    static FolnerFamily realBox(std::size_t dim, std::vector<double> shift = {});
    static FolnerFamily latticeBox(std::size_t dim, std::vector<long long> shift = {});
};

/// Normalized character integral (1/|F_T|) int_{F_T} e^{2 pi i v.x} dx.
///
/// RealBox:    prod_i e^{2 pi i v_i s_i} * sin(2 pi v_i T) / (2 pi v_i T)
/// LatticeBox: prod_i e^{2 pi i v_i s_i} * sin((2N+1) pi v_i) / ((2N+1) sin(pi v_i))
/// with factor 1 at the removable singularities (v_i = 0 resp. v_i integral).
std::complex<double> characterWeight(const FolnerFamily& f, std::span<const double> v, double t);

/// Trigonometric polynomial on T^n: finitely many terms a_u * chi_u with
/// chi_u(z) = e^{2 pi i u.z} and distinct integer frequency vectors u.
struct TrigTerm {
    std::vector<long long> u;
    std::complex<double> a;
};

struct TrigPolynomial {
    std::size_t dim = 0;
    std::vector<TrigTerm> terms;

    void validate() const;  // throws on ragged or duplicated frequencies
};

std::complex<double> evaluate(const TrigPolynomial& phi, std::span<const double> z);

/// Folner average (A_T phi)(z) of phi along the action, evaluated in closed
/// form term by term. Frequencies landing exactly in H^perp (checked
/// symbolically) contribute with weight exactly 1.
std::complex<double> weylAverage(const ActionSpec& action, const TrigPolynomial& phi,
                                 std::span<const double> z, const FolnerFamily& f, double t);

/// Exact limit of the Weyl averages: the Haar integral of phi over the coset
/// z H, which keeps exactly the terms with u in H^perp.
std::complex<double> haarTarget(const RelationLattice& rl, const TrigPolynomial& phi,
                                std::span<const double> z);

/// Convergence record: averages along a parameter grid against an exact
/// target, with the per-point absolute errors.
struct AverageTrace {
    std::vector<double> parameters;
    std::vector<std::complex<double>> averages;
    std::complex<double> target;
    std::vector<double> errors;

    void computeErrors();
    /// Header + one row per parameter, 17 significant digits.
    void writeCsv(std::ostream& os) const;
};

AverageTrace weylAverageTrace(const ActionSpec& action, const TrigPolynomial& phi,
                              std::span<const double> z, const FolnerFamily& f,
                              std::span<const double> ts);

/// Bohr orthogonality (the averages of gamma(g) vanish for g != 0): the trace
/// of character weights at frequency g against the exact target 0. Throws on
/// g = 0, where the limit is 1 instead.
AverageTrace bohrOrthogonalityTrace(const FolnerFamily& f, std::span<const double> g,
                                    std::span<const double> ts);

/// Almost periodic trigonometric polynomial on the acting group, with exact
/// symbolic frequencies so the constant term is identified exactly.
struct GroupTerm {
    std::vector<SymbolicReal> frequency;  // length = group dimension
    std::complex<double> coefficient;
};

struct GroupPolynomial {
    std::vector<GroupTerm> terms;
};

/// Folner averages of x -> phi(x + shift); the limit is the Bohr mean, i.e.
/// the coefficient of the zero frequency, independent of the shift.
AverageTrace bohrMean(const GroupPolynomial& phi, std::span<const double> shift,
                      const FolnerFamily& f, std::span<const double> ts);

}  // namespace torusact
