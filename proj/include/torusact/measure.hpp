#pragma once

#include "torusact/folner.hpp"

namespace torusact {

/// Which LCA group the measure lives on. RealLine has dual R (RealBox
/// averaging), Circle has dual Z (LatticeBox averaging).
enum class MeasureGroup { RealLine, Circle };

struct MeasureAtom {
    double location = 0.0;  // Circle: in [0, 1)
    std::complex<double> weight;
};

/// Gaussian density component on R with closed-form transform.
struct GaussianComponent {
    double center = 0.0;
    double sigma = 1.0;
    std::complex<double> weight;
};

/// Uniform density on the circular arc [a, b], 0 <= a < b <= 1.
struct UniformArcComponent {
    double a = 0.0;
    double b = 1.0;
    std::complex<double> weight;
};

/// Regular finite complex measure built from atoms plus continuous parts
/// with closed-form Fourier transforms.
struct MeasureModel {
    MeasureGroup group = MeasureGroup::Circle;
    std::vector<MeasureAtom> atoms;
    std::vector<GaussianComponent> gaussians;  // RealLine only
    std::vector<UniformArcComponent> arcs;     // Circle only

    void validate() const;
};

/// Fourier transform mu^(xi) = int conj(gamma_xi(y)) dmu(y) with
/// gamma_xi(y) = e^{2 pi i xi y}; for the circle xi is an integer frequency.
std::complex<double> measureFourier(const MeasureModel& m, double xi);

inline constexpr double kCoincidenceTolerance = 1e-12;

/// Wiener atom recovery: averages of mu^(gamma) gamma(x) over the Folner
/// boxes, against the exact target mu({x}).
AverageTrace wienerAtom(const MeasureModel& m, double x, const FolnerFamily& f,
                        std::span<const double> ts,
                        double coincidenceTol = kCoincidenceTolerance);

/// Wiener energy: averages of |mu^(gamma)|^2 against the exact discrete
/// energy sum_x |mu({x})|^2 (coincident atom locations merged first).
AverageTrace wienerEnergy(const MeasureModel& m, const FolnerFamily& f,
                          std::span<const double> ts,
                          double coincidenceTol = kCoincidenceTolerance);

}  // namespace torusact
