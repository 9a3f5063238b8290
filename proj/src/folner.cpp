#include "torusact/folner.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace torusact {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSincGuard = 1e-12;

std::complex<double> unitPhase(double angleTurns) {
    return std::polar(1.0, kTwoPi * angleTurns);
}

}  // namespace

FolnerFamily FolnerFamily::realBox(std::size_t dim, std::vector<double> shift) {
    if (dim < 1) throw std::invalid_argument("Folner family needs dimension >= 1");
    if (shift.empty()) shift.assign(dim, 0.0);
    if (shift.size() != dim) throw std::invalid_argument("Folner shift has wrong dimension");
    return {FolnerKind::RealBox, dim, std::move(shift)};
}

FolnerFamily FolnerFamily::latticeBox(std::size_t dim, std::vector<long long> shift) {
    if (dim < 1) throw std::invalid_argument("Folner family needs dimension >= 1");
    if (shift.empty()) shift.assign(dim, 0);
    if (shift.size() != dim) throw std::invalid_argument("Folner shift has wrong dimension");
    std::vector<double> s(shift.begin(), shift.end());
    return {FolnerKind::LatticeBox, dim, std::move(s)};
}

std::complex<double> characterWeight(const FolnerFamily& f, std::span<const double> v, double t) {
    if (v.size() != f.dim) throw std::invalid_argument("frequency dimension mismatch");
    std::complex<double> w(1.0, 0.0);
    if (f.kind == FolnerKind::RealBox) {
        if (!(t > 0)) throw std::invalid_argument("RealBox parameter must be positive");
        for (std::size_t i = 0; i < v.size(); ++i) {
            double arg = kTwoPi * v[i] * t;
            double factor = std::fabs(arg) < kSincGuard ? 1.0 : std::sin(arg) / arg;
            w *= unitPhase(v[i] * f.shift[i]) * factor;
        }
    } else {
        long long n = std::llround(t);
        if (n < 0 || std::fabs(t - static_cast<double>(n)) > 1e-9)
            throw std::invalid_argument("LatticeBox parameter must be a nonnegative integer");
        double count = static_cast<double>(2 * n + 1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            double nearest = std::round(v[i]);
            double factor;
            if (std::fabs(v[i] - nearest) < kSincGuard)
                factor = 1.0;
            else
                factor = std::sin(count * std::numbers::pi * v[i]) /
                         (count * std::sin(std::numbers::pi * v[i]));
            w *= unitPhase(v[i] * f.shift[i]) * factor;
        }
    }
    return w;
}

void TrigPolynomial::validate() const {
    for (const auto& term : terms)
        if (term.u.size() != dim)
            throw std::invalid_argument("trigonometric term with wrong frequency dimension");
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i].u == terms[j].u)
                throw std::invalid_argument("duplicate frequency in trigonometric polynomial");
}

std::complex<double> evaluate(const TrigPolynomial& phi, std::span<const double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& term : phi.terms) {
        double angle = 0.0;
        for (std::size_t j = 0; j < term.u.size(); ++j)
            angle += static_cast<double>(term.u[j]) * z[j];
        acc += term.a * unitPhase(angle);
    }
    return acc;
}

std::complex<double> weylAverage(const ActionSpec& action, const TrigPolynomial& phi,
                                 std::span<const double> z, const FolnerFamily& f, double t) {
    const std::size_t n = action.torusDim();
    if (phi.dim != n) throw std::invalid_argument("polynomial dimension does not match torus");
    if (z.size() != n) throw std::invalid_argument("point dimension does not match torus");
    if (f.dim != action.timeDim())
        throw std::invalid_argument("Folner dimension does not match acting group");
    if ((f.kind == FolnerKind::RealBox) != (action.family() == ActionFamily::RealFlow))
        throw std::invalid_argument("Folner family does not match the acting group");

    std::complex<double> acc(0.0, 0.0);
    std::vector<Int> u(n);
    for (const auto& term : phi.terms) {
        for (std::size_t j = 0; j < n; ++j) u[j] = static_cast<long>(term.u[j]);
        std::vector<SymbolicReal> comb = action.combination(u);

        bool annihilated = true;
        for (const auto& c : comb) {
            bool trivial = action.family() == ActionFamily::RealFlow ? c.isZero()
                                                                     : c.isIntegerValue();
            if (!trivial) {
                annihilated = false;
                break;
            }
        }

        double angle = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            angle += static_cast<double>(term.u[j]) * z[j];
        std::complex<double> character = term.a * unitPhase(angle);

        if (annihilated) {
            acc += character;  // weight exactly 1 for every parameter
            continue;
        }
        std::vector<double> v(comb.size());
        for (std::size_t i = 0; i < comb.size(); ++i) v[i] = comb[i].evalNumeric();
        acc += character * characterWeight(f, v, t);
    }
    return acc;
}

std::complex<double> haarTarget(const RelationLattice& rl, const TrigPolynomial& phi,
                                std::span<const double> z) {
    if (phi.dim != rl.ambientDim())
        throw std::invalid_argument("polynomial dimension does not match relation lattice");
    if (z.size() != rl.ambientDim()) throw std::invalid_argument("point dimension mismatch");
    std::complex<double> acc(0.0, 0.0);
    std::vector<Int> u(phi.dim);
    for (const auto& term : phi.terms) {
        for (std::size_t j = 0; j < phi.dim; ++j) u[j] = static_cast<long>(term.u[j]);
        if (!rl.lattice.contains(u)) continue;
        double angle = 0.0;
        for (std::size_t j = 0; j < phi.dim; ++j)
            angle += static_cast<double>(term.u[j]) * z[j];
        acc += term.a * unitPhase(angle);
    }
    return acc;
}

void AverageTrace::computeErrors() {
    errors.resize(averages.size());
    for (std::size_t i = 0; i < averages.size(); ++i) errors[i] = std::abs(averages[i] - target);
}

void AverageTrace::writeCsv(std::ostream& os) const {
    os << "parameter,real_average,imag_average,real_target,imag_target,abs_error\n";
    char line[256];
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", parameters[i],
                      averages[i].real(), averages[i].imag(), target.real(), target.imag(),
                      errors[i]);
        os << line;
    }
}

AverageTrace weylAverageTrace(const ActionSpec& action, const TrigPolynomial& phi,
                              std::span<const double> z, const FolnerFamily& f,
                              std::span<const double> ts) {
    AverageTrace trace;
    trace.parameters.assign(ts.begin(), ts.end());
    for (double t : ts) trace.averages.push_back(weylAverage(action, phi, z, f, t));
    trace.target = haarTarget(relationLattice(action), phi, z);
    trace.computeErrors();
    return trace;
}

AverageTrace bohrOrthogonalityTrace(const FolnerFamily& f, std::span<const double> g,
                                    std::span<const double> ts) {
    bool zero = true;
    for (double gi : g)
        if (gi != 0.0) zero = false;
    if (zero)
        throw std::invalid_argument(
            "Bohr orthogonality requires g != 0 (the limit at g = 0 is 1, not 0)");
    AverageTrace trace;
    trace.parameters.assign(ts.begin(), ts.end());
    for (double t : ts) trace.averages.push_back(characterWeight(f, g, t));
    trace.target = {0.0, 0.0};
    trace.computeErrors();
    return trace;
}

AverageTrace bohrMean(const GroupPolynomial& phi, std::span<const double> shift,
                      const FolnerFamily& f, std::span<const double> ts) {
    for (const auto& term : phi.terms)
        if (term.frequency.size() != f.dim)
            throw std::invalid_argument("frequency dimension does not match group");
    if (shift.size() != f.dim) throw std::invalid_argument("shift dimension does not match group");
    for (std::size_t i = 0; i < phi.terms.size(); ++i)
        for (std::size_t j = i + 1; j < phi.terms.size(); ++j) {
            bool equal = true;
            for (std::size_t c = 0; c < f.dim && equal; ++c)
                equal = phi.terms[i].frequency[c] == phi.terms[j].frequency[c];
            if (equal) throw std::invalid_argument("duplicate frequency in group polynomial");
        }

    AverageTrace trace;
    trace.parameters.assign(ts.begin(), ts.end());
    trace.target = {0.0, 0.0};
    for (const auto& term : phi.terms) {
        bool zero = true;
        for (const auto& c : term.frequency)
            if (!c.isZero()) zero = false;
        if (zero) trace.target += term.coefficient;
    }

    for (double t : ts) {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& term : phi.terms) {
            bool zero = true;
            std::vector<double> v(f.dim);
            double angle = 0.0;
            for (std::size_t c = 0; c < f.dim; ++c) {
                if (!term.frequency[c].isZero()) zero = false;
                v[c] = term.frequency[c].evalNumeric();
                angle += v[c] * shift[c];
            }
            if (zero) {
                acc += term.coefficient;  // translation leaves the constant term fixed
                continue;
            }
            acc += term.coefficient * unitPhase(angle) * characterWeight(f, v, t);
        }
        trace.averages.push_back(acc);
    }
    trace.computeErrors();
    return trace;
}

}  // namespace torusact
