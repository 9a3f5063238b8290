#include "support/oracles.hpp"

#include <numbers>
#include <numeric>
#include <set>

namespace oracle {

using torusact::ActionFamily;
using torusact::Rat;
using torusact::RealBasis;
using torusact::SymbolicReal;

Int cofactorDeterminant(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("cofactor determinant of non-square matrix");
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Int term = m(0, j) * cofactorDeterminant(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

namespace {

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Int> minorGcds(const IntMatrix& m) {
    std::vector<Int> gcds;
    const std::size_t kMax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kMax; ++k) {
        Int g = 0;
        combinations(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            combinations(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
                g = torusact::gcd(g, cofactorDeterminant(sub));
            });
        });
        gcds.push_back(g);
        if (g == 0) break;
    }
    return gcds;
}

std::vector<Int> minorGcdInvariantFactors(const IntMatrix& m) {
    std::vector<Int> g = minorGcds(m);
    std::vector<Int> factors;
    Int prev = 1;
    for (const Int& gk : g) {
        if (gk == 0) break;
        factors.push_back(gk / prev);
        prev = gk;
    }
    return factors;
}

std::vector<std::vector<long long>> hnfInt64(std::vector<std::vector<long long>> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            while (rows[i][c] != 0) {  // Euclid on the pair of rows
                long long q = rows[r][c] / rows[i][c];
                for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= q * rows[i][j];
                std::swap(rows[r], rows[i]);
            }
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            long long q = rows[i][c] / rows[r][c];
            if (rows[i][c] % rows[r][c] < 0) --q;  // floor division
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

void forEachBoxVector(std::size_t n, long bound,
                      const std::function<void(const std::vector<long long>&)>& visit) {
    std::vector<long long> u(n, -bound);
    while (true) {
        visit(u);
        std::size_t i = 0;
        while (i < n && u[i] == bound) u[i++] = -bound;
        if (i == n) return;
        ++u[i];
    }
}

RationalActionData randomRationalAction(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dDist(1, 2), nDist(1, 3), qDist(1, 6), pDist(-3, 3);
    std::uniform_int_distribution<int> famDist(0, 1);

    const bool latticeFamily = famDist(rng) == 1;
    const std::size_t d = static_cast<std::size_t>(dDist(rng));
    const std::size_t n = static_cast<std::size_t>(nDist(rng));
    // One denominator per instance: minimal relations then fit the
    // enumeration box (entries stay below 2 * 3^2 for real flows and below
    // the denominator for lattice actions).
    const long q = qDist(rng);

    auto basis = RealBasis::create({});
    std::vector<std::vector<SymbolicReal>> generators;
    std::vector<std::vector<std::pair<long, long>>> fractions(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<SymbolicReal> coords;
        for (std::size_t c = 0; c < d; ++c) {
            long p = latticeFamily ? std::uniform_int_distribution<long>(0, q - 1)(rng)
                                   : pDist(rng);
            fractions[j].emplace_back(p, q);
            coords.push_back(SymbolicReal::constant(basis, torusact::makeRat(p, q)));
        }
        generators.push_back(std::move(coords));
    }

    long long ell = 1;
    for (const auto& g : fractions)
        for (auto [p, q] : g) ell = std::lcm(ell, static_cast<long long>(q));
    std::vector<std::vector<long long>> numerators(d, std::vector<long long>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < d; ++c)
            numerators[c][j] = fractions[j][c].first * (ell / fractions[j][c].second);

    return {ActionSpec(latticeFamily ? ActionFamily::LatticeAction : ActionFamily::RealFlow, d,
                       std::move(generators)),
            ell, std::move(numerators), latticeFamily};
}

IntMatrix bruteForceRelationBasis(const RationalActionData& data, long bound) {
    const std::size_t n = data.spec.torusDim();
    const std::size_t d = data.spec.timeDim();
    std::vector<std::vector<long long>> matches;
    forEachBoxVector(n, bound, [&](const std::vector<long long>& u) {
        for (std::size_t c = 0; c < d; ++c) {
            long long acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += data.numerators[c][j] * u[j];
            if (data.latticeFamily ? (acc % data.commonDenominator != 0) : (acc != 0)) return;
        }
        matches.push_back(u);
    });
    auto basis = hnfInt64(std::move(matches));
    IntMatrix out(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = static_cast<long>(basis[i][j]);
    return out;
}

std::size_t bruteForceOrbitSize(const RationalActionData& data) {
    if (!data.latticeFamily) throw std::invalid_argument("orbit enumeration needs a lattice action");
    const std::size_t n = data.spec.torusDim();
    const std::size_t d = data.spec.timeDim();
    const long long ell = data.commonDenominator;

    auto mod = [&](long long x) { return ((x % ell) + ell) % ell; };
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> frontier{std::vector<long long>(n, 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& point : frontier)
            for (std::size_t c = 0; c < d; ++c) {
                std::vector<long long> moved(n);
                for (std::size_t j = 0; j < n; ++j)
                    moved[j] = mod(point[j] + data.numerators[c][j]);
                if (seen.insert(moved).second) next.push_back(std::move(moved));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

namespace {

std::complex<double> simpson1d(const std::function<std::complex<double>(double)>& f, double a,
                               double b, std::size_t panels) {
    if (panels % 2 == 1) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    std::complex<double> acc = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i)
        acc += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

}  // namespace

std::complex<double> simpsonCharacterWeight(const torusact::FolnerFamily& f,
                                            std::span<const double> v, double t,
                                            std::size_t panelsPerAxis) {
    if (f.kind != torusact::FolnerKind::RealBox)
        throw std::invalid_argument("quadrature oracle covers real boxes only");
    std::complex<double> w(1.0, 0.0);
    constexpr double twoPi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double lo = f.shift[i] - t, hi = f.shift[i] + t;
        double freq = v[i];
        // Keep a few hundred panels per oscillation; panelsPerAxis is the floor.
        double oscillations = std::fabs(freq) * (hi - lo);
        std::size_t panels =
            std::max<std::size_t>(panelsPerAxis,
                                  static_cast<std::size_t>(300.0 * oscillations) + 1);
        auto integrand = [freq](double x) {
            return std::complex<double>(std::cos(twoPi * freq * x), std::sin(twoPi * freq * x));
        };
        w *= simpson1d(integrand, lo, hi, panels) / (2.0 * t);
    }
    return w;
}

double weylEnvelopeConstant(const ActionSpec& action, const torusact::TrigPolynomial& phi) {
    torusact::RelationLattice rl = torusact::relationLattice(action);
    constexpr double twoPi = 2.0 * std::numbers::pi;
    double acc = 0.0;
    std::vector<Int> u(phi.dim);
    for (const auto& term : phi.terms) {
        for (std::size_t j = 0; j < phi.dim; ++j) u[j] = static_cast<long>(term.u[j]);
        if (rl.lattice.contains(u)) continue;
        std::vector<SymbolicReal> comb = action.combination(u);
        double smallest = 0.0;
        for (const auto& c : comb) {
            double vi = std::fabs(c.evalNumeric());
            if (vi > 0.0 && (smallest == 0.0 || vi < smallest)) smallest = vi;
        }
        acc += std::abs(term.a) / (twoPi * smallest);
    }
    return acc;
}

IntMatrix randomIntMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                          long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

IntMatrix randomGL2(std::mt19937_64& rng, int maxFactors) {
    std::uniform_int_distribution<int> countDist(1, maxFactors);
    std::uniform_int_distribution<int> kindDist(0, 3);
    std::uniform_int_distribution<long> shearDist(-2, 2);

    IntMatrix p = IntMatrix::identity(2);
    const int count = countDist(rng);
    for (int i = 0; i < count; ++i) {
        IntMatrix e = IntMatrix::identity(2);
        switch (kindDist(rng)) {
            case 0: e(0, 1) = shearDist(rng); break;
            case 1: e(1, 0) = shearDist(rng); break;
            case 2:  // swap
                e(0, 0) = 0;
                e(1, 1) = 0;
                e(0, 1) = 1;
                e(1, 0) = 1;
                break;
            default: e(0, 0) = -1; break;  // reflection
        }
        p = mul(p, e);
    }
    return p;
}

}  // namespace oracle
