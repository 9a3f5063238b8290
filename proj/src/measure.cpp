#include "torusact/measure.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace torusact {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kQuadratureTolerance = 1e-10;
constexpr int kQuadratureMaxDepth = 20;  // panel cap 2^20

std::complex<double> unitPhase(double angleTurns) {
    return std::polar(1.0, kTwoPi * angleTurns);
}

bool coincident(MeasureGroup group, double x, double y, double tol) {
    if (group == MeasureGroup::RealLine) return std::fabs(x - y) <= tol;
    double d = std::fabs(x - y);
    d -= std::floor(d);
    return std::min(d, 1.0 - d) <= tol;
}

using Integrand = std::function<std::complex<double>(double)>;

std::complex<double> simpsonRule(const Integrand& f, double a, double b, std::complex<double> fa,
                                 std::complex<double> fm, std::complex<double> fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

std::complex<double> adaptiveStep(const Integrand& f, double a, double b,
                                  std::complex<double> fa, std::complex<double> fm,
                                  std::complex<double> fb, std::complex<double> whole, double tol,
                                  int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm), frm = f(rm);
    std::complex<double> left = simpsonRule(f, a, m, fa, flm, fm);
    std::complex<double> right = simpsonRule(f, m, b, fm, frm, fb);
    std::complex<double> sum = left + right;
    if (depth <= 0 || std::abs(sum - whole) < 15.0 * tol)
        return sum + (sum - whole) / 15.0;
    return adaptiveStep(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptiveStep(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

std::complex<double> adaptiveSimpson(const Integrand& f, double a, double b, double tol) {
    std::complex<double> fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return adaptiveStep(f, a, b, fa, fm, fb, simpsonRule(f, a, b, fa, fm, fb), tol,
                        kQuadratureMaxDepth);
}

void requireMatchingDual(const MeasureModel& m, const FolnerFamily& f) {
    if (f.dim != 1) throw std::invalid_argument("measure averaging needs a 1-dimensional dual");
    bool wantLattice = m.group == MeasureGroup::Circle;
    if ((f.kind == FolnerKind::LatticeBox) != wantLattice)
        throw std::invalid_argument("Folner family does not match the measure's dual group");
}

std::complex<double> gaussianTransform(const GaussianComponent& g, double xi) {
    return g.weight * unitPhase(-g.center * xi) *
           std::exp(-2.0 * std::numbers::pi * std::numbers::pi * g.sigma * g.sigma * xi * xi);
}

std::complex<double> continuousTransform(const MeasureModel& m, double xi) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& g : m.gaussians) acc += gaussianTransform(g, xi);
    for (const auto& arc : m.arcs) {
        // (1/(b-a)) int_a^b e^{-2 pi i k y} dy; the k = 0 coefficient is the mass.
        if (std::fabs(xi) < 1e-12) {
            acc += arc.weight;
        } else {
            std::complex<double> num = unitPhase(-xi * arc.a) - unitPhase(-xi * arc.b);
            acc += arc.weight * num / (std::complex<double>(0.0, kTwoPi * xi) * (arc.b - arc.a));
        }
    }
    return acc;
}

std::complex<double> atomicTransform(const MeasureModel& m, double xi) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& atom : m.atoms) acc += atom.weight * unitPhase(-atom.location * xi);
    return acc;
}

// Exact finite sum (1/(2N+1)) sum_k h(k) over the shifted lattice box.
std::complex<double> latticeBoxAverage(const FolnerFamily& f, double t,
                                       const Integrand& h) {
    long long n = std::llround(t);
    if (n < 0 || std::fabs(t - static_cast<double>(n)) > 1e-9)
        throw std::invalid_argument("LatticeBox parameter must be a nonnegative integer");
    long long s = std::llround(f.shift[0]);
    std::complex<double> acc(0.0, 0.0);
    for (long long k = s - n; k <= s + n; ++k) acc += h(static_cast<double>(k));
    return acc / static_cast<double>(2 * n + 1);
}

}  // namespace

void MeasureModel::validate() const {
    for (const auto& g : gaussians) {
        if (group != MeasureGroup::RealLine)
            throw std::invalid_argument("Gaussian components require the real line");
        if (!(g.sigma > 0)) throw std::invalid_argument("Gaussian sigma must be positive");
    }
    for (const auto& arc : arcs) {
        if (group != MeasureGroup::Circle)
            throw std::invalid_argument("uniform arcs require the circle");
        if (!(0.0 <= arc.a && arc.a < arc.b && arc.b <= 1.0))
            throw std::invalid_argument("uniform arc needs 0 <= a < b <= 1");
    }
    if (group == MeasureGroup::Circle)
        for (const auto& atom : atoms)
            if (!(0.0 <= atom.location && atom.location < 1.0))
                throw std::invalid_argument("circle atom location must lie in [0, 1)");
}

std::complex<double> measureFourier(const MeasureModel& m, double xi) {
    return atomicTransform(m, xi) + continuousTransform(m, xi);
}

AverageTrace wienerAtom(const MeasureModel& m, double x, const FolnerFamily& f,
                        std::span<const double> ts, double coincidenceTol) {
    m.validate();
    requireMatchingDual(m, f);

    AverageTrace trace;
    trace.parameters.assign(ts.begin(), ts.end());
    trace.target = {0.0, 0.0};
    for (const auto& atom : m.atoms)
        if (coincident(m.group, x, atom.location, coincidenceTol)) trace.target += atom.weight;

    for (double t : ts) {
        std::complex<double> acc(0.0, 0.0);
        if (m.group == MeasureGroup::Circle) {
            acc = latticeBoxAverage(f, t,
                                    [&](double k) { return measureFourier(m, k) * unitPhase(k * x); });
        } else {
            for (const auto& atom : m.atoms) {
                double v = x - atom.location;
                acc += atom.weight * characterWeight(f, std::span<const double>(&v, 1), t);
            }
            if (!m.gaussians.empty()) {
                double lo = f.shift[0] - t, hi = f.shift[0] + t;
                acc += adaptiveSimpson(
                           [&](double xi) {
                               std::complex<double> c(0.0, 0.0);
                               for (const auto& g : m.gaussians) c += gaussianTransform(g, xi);
                               return c * unitPhase(xi * x);
                           },
                           lo, hi, kQuadratureTolerance) /
                       (2.0 * t);
            }
        }
        trace.averages.push_back(acc);
    }
    trace.computeErrors();
    return trace;
}

AverageTrace wienerEnergy(const MeasureModel& m, const FolnerFamily& f,
                          std::span<const double> ts, double coincidenceTol) {
    m.validate();
    requireMatchingDual(m, f);

    AverageTrace trace;
    trace.parameters.assign(ts.begin(), ts.end());

    // Discrete energy: merge coincident atom locations before squaring.
    std::vector<MeasureAtom> merged;
    for (const auto& atom : m.atoms) {
        bool folded = false;
        for (auto& rep : merged)
            if (coincident(m.group, atom.location, rep.location, coincidenceTol)) {
                rep.weight += atom.weight;
                folded = true;
                break;
            }
        if (!folded) merged.push_back(atom);
    }
    std::complex<double> energy(0.0, 0.0);
    for (const auto& rep : merged) energy += std::norm(rep.weight);
    trace.target = energy;

    for (double t : ts) {
        std::complex<double> acc(0.0, 0.0);
        if (m.group == MeasureGroup::Circle) {
            acc = latticeBoxAverage(f, t, [&](double k) {
                return std::complex<double>(std::norm(measureFourier(m, k)), 0.0);
            });
        } else {
            // Atomic part in closed form; the continuous cross terms decay and
            // go through quadrature.
            for (const auto& ax : m.atoms)
                for (const auto& ay : m.atoms) {
                    double v = ay.location - ax.location;
                    acc += ax.weight * std::conj(ay.weight) *
                           characterWeight(f, std::span<const double>(&v, 1), t);
                }
            if (!m.gaussians.empty()) {
                double lo = f.shift[0] - t, hi = f.shift[0] + t;
                acc += adaptiveSimpson(
                           [&](double xi) {
                               std::complex<double> a = atomicTransform(m, xi);
                               std::complex<double> c = continuousTransform(m, xi);
                               return std::complex<double>(std::norm(a + c) - std::norm(a), 0.0);
                           },
                           lo, hi, kQuadratureTolerance) /
                       (2.0 * t);
            }
        }
        trace.averages.push_back(acc);
    }
    trace.computeErrors();
    return trace;
}

}  // namespace torusact
