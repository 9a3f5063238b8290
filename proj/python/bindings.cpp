#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusact/config.hpp"

namespace py = pybind11;
using namespace torusact;

namespace {

Int toInt(const py::handle& h) {
    return Int(py::str(h).cast<std::string>());
}

py::object fromInt(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

IntMatrix toIntMatrix(const py::sequence& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : py::sequence(rows[0]).size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row(rows[i]);
        if (row.size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = toInt(row[j]);
    }
    return m;
}

RatMatrix toRatMatrix(const py::sequence& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : py::sequence(rows[0]).size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row(rows[i]);
        if (row.size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = parseRational(py::str(row[j]).cast<std::string>());
    }
    return m;
}

py::list fromIntMatrix(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(fromInt(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list fromIntVector(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(fromInt(x));
    return out;
}

const ActionSpec& requireAction(const ProjectConfig& cfg) {
    if (!cfg.action) throw std::invalid_argument("config has no action section");
    return *cfg.action;
}

std::vector<double> resolveGrid(const ProjectConfig& cfg, const std::vector<double>& grid) {
    if (!grid.empty()) return grid;
    if (cfg.grid.empty()) throw std::invalid_argument("no parameter grid given");
    return cfg.grid;
}

FolnerFamily defaultFolner(const ProjectConfig& cfg, FolnerKind kind, std::size_t dim) {
    if (cfg.folner) return *cfg.folner;
    return kind == FolnerKind::RealBox ? FolnerFamily::realBox(dim)
                                       : FolnerFamily::latticeBox(dim);
}

std::vector<SymbolicReal> parseTheta(const ProjectConfig& cfg,
                                     const std::vector<std::string>& components) {
    std::vector<SymbolicReal> theta;
    for (const auto& c : components) theta.push_back(parseSymbolicExpression(cfg.basis, c));
    return theta;
}

py::dict traceDict(const AverageTrace& trace) {
    py::dict out;
    out["parameters"] = trace.parameters;
    out["averages"] = trace.averages;
    out["target"] = trace.target;
    out["errors"] = trace.errors;
    return out;
}

std::vector<double> pointOrZero(const ProjectConfig& cfg, std::size_t n) {
    return cfg.point ? *cfg.point : std::vector<double>(n, 0.0);
}

FolnerFamily actionFolner(const ProjectConfig& cfg, const ActionSpec& action) {
    return defaultFolner(cfg,
                         action.family() == ActionFamily::RealFlow ? FolnerKind::RealBox
                                                                   : FolnerKind::LatticeBox,
                         action.timeDim());
}

FolnerFamily measureFolner(const ProjectConfig& cfg) {
    if (!cfg.measure) throw std::invalid_argument("config has no measure section");
    return defaultFolner(cfg,
                         cfg.measure->group == MeasureGroup::Circle ? FolnerKind::LatticeBox
                                                                    : FolnerKind::RealBox,
                         1);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact lattice core and Folner-average simulators";

    m.def("hnf", [](const py::sequence& rows) {
        HnfResult r = hnf(toIntMatrix(rows));
        return py::make_tuple(fromIntMatrix(r.h), fromIntMatrix(r.u));
    });

    m.def("smith_normal_form", [](const py::sequence& rows) {
        SnfResult r = snf(toIntMatrix(rows));
        return py::make_tuple(fromIntMatrix(r.d), fromIntMatrix(r.u), fromIntMatrix(r.v));
    });

    m.def("is_unimodular", [](const py::sequence& rows) { return isUnimodular(toIntMatrix(rows)); });

    m.def("solve_integer_linear", [](const py::sequence& a, const py::sequence& rhs) {
        IntegerSolveResult r = solveIntegerLinear(toRatMatrix(a), toRatMatrix(rhs));
        py::dict out;
        switch (r.status) {
            case IntegerSolveStatus::Integral: out["status"] = "integral"; break;
            case IntegerSolveStatus::NonIntegral: out["status"] = "non_integral"; break;
            case IntegerSolveStatus::NoRationalSolution: out["status"] = "no_rational_solution"; break;
        }
        if (r.solution) out["solution"] = fromIntMatrix(*r.solution);
        return out;
    });

    m.def("rational_kernel_lattice", [](const py::sequence& rows) {
        return fromIntMatrix(rationalKernelLattice(toRatMatrix(rows)).basis());
    });

    m.def("preimage_lattice",
          [](const py::sequence& b, const py::sequence& subBasis, std::size_t ambient) {
              Lattice sub = Lattice::fromGenerators(ambient, toIntMatrix(subBasis));
              return fromIntMatrix(preimageLattice(toRatMatrix(b), sub).basis());
          });

    m.def("power_basis_coords", [](const std::vector<long long>& minPoly, unsigned k) {
        std::vector<Int> poly;
        for (long long c : minPoly) poly.emplace_back(static_cast<long>(c));
        std::vector<std::string> out;
        for (const auto& c : powerBasisCoords(poly, k)) out.push_back(toString(c));
        return out;
    });

    py::class_<ProjectConfig, std::shared_ptr<ProjectConfig>>(m, "Config");

    m.def("load_config", [](const std::string& text, const std::string& name) {
        return std::make_shared<ProjectConfig>(parseConfigText(text, name));
    }, py::arg("text"), py::arg("name") = "<python>");

    m.def("serialize_config", [](const ProjectConfig& cfg) { return serializeConfig(cfg); });

    m.def("relation_lattice", [](const ProjectConfig& cfg) {
        return fromIntMatrix(relationLattice(requireAction(cfg)).lattice.basis());
    });

    m.def("orbit_structure", [](const ProjectConfig& cfg) {
        const ActionSpec& action = requireAction(cfg);
        OrbitStructure os = orbitStructure(relationLattice(action), action.torusDim());
        py::dict out;
        out["free_rank"] = os.freeRank;
        out["invariant_factors"] = fromIntVector(os.invariantFactors);
        return out;
    });

    m.def("kronecker_solvable", [](const ProjectConfig& cfg, const std::vector<std::string>& theta) {
        KroneckerResult r = kroneckerSolvable(requireAction(cfg), parseTheta(cfg, theta));
        py::dict out;
        out["solvable"] = r.solvable;
        out["certificate"] = r.certificate ? py::object(fromIntVector(*r.certificate))
                                           : py::object(py::none());
        return out;
    });

    m.def("is_uniquely_ergodic",
          [](const ProjectConfig& cfg) { return isUniquelyErgodic(requireAction(cfg)); });

    m.def("find_conjugacy", [](const ProjectConfig& g, const ProjectConfig& h) {
        ConjugacyResult r = findConjugacy(requireAction(g), requireAction(h));
        py::dict out;
        if (r.status == ConjugacyStatus::Conjugate) {
            out["status"] = "conjugate";
            out["P"] = fromIntMatrix(*r.witness);
        } else if (r.status == ConjugacyStatus::NotConjugate) {
            out["status"] = "not_conjugate";
            switch (*r.reason) {
                case ConjugacyFailure::NoRationalSolution: out["reason"] = "no_rational_solution"; break;
                case ConjugacyFailure::NonIntegralSolution: out["reason"] = "non_integral_solution"; break;
                case ConjugacyFailure::NotUnimodular: out["reason"] = "not_unimodular"; break;
            }
        } else {
            out["status"] = "not_applicable";
            out["obstruction"] = fromIntVector(*r.obstruction);
        }
        return out;
    });

    m.def("apply_automorphism", [](const py::sequence& p, const std::vector<double>& z) {
        return applyAutomorphism(toIntMatrix(p), z);
    });

    m.def("verify_conjugacy",
          [](const ProjectConfig& g, const ProjectConfig& h, const py::sequence& p,
             const std::vector<double>& c, std::size_t samples, std::uint64_t seed) {
              return verifyConjugacyNumerically(requireAction(g), requireAction(h), toIntMatrix(p),
                                                c, samples, seed);
          },
          py::arg("g"), py::arg("h"), py::arg("p"), py::arg("c"), py::arg("samples") = 64,
          py::arg("seed") = 0);

    m.def("character_weight",
          [](const std::string& kind, const std::vector<double>& shift,
             const std::vector<double>& v, double t) {
              FolnerFamily f;
              if (kind == "real-box") {
                  f = FolnerFamily::realBox(v.size(), shift);
              } else if (kind == "lattice-box") {
                  std::vector<long long> s;
                  for (double x : shift) s.push_back(std::llround(x));
                  f = FolnerFamily::latticeBox(v.size(), s);
              } else {
                  throw std::invalid_argument("kind must be 'real-box' or 'lattice-box'");
              }
              return characterWeight(f, v, t);
          },
          py::arg("kind"), py::arg("shift"), py::arg("v"), py::arg("t"));

    m.def("weyl_average", [](const ProjectConfig& cfg, double t) {
        const ActionSpec& action = requireAction(cfg);
        if (!cfg.polynomial) throw std::invalid_argument("config has no polynomial section");
        return weylAverage(action, *cfg.polynomial, pointOrZero(cfg, action.torusDim()),
                           actionFolner(cfg, action), t);
    });

    m.def("haar_target", [](const ProjectConfig& cfg) {
        const ActionSpec& action = requireAction(cfg);
        if (!cfg.polynomial) throw std::invalid_argument("config has no polynomial section");
        return haarTarget(relationLattice(action), *cfg.polynomial,
                          pointOrZero(cfg, action.torusDim()));
    });

    m.def("weyl_trace",
          [](const ProjectConfig& cfg, const std::vector<double>& grid) {
              const ActionSpec& action = requireAction(cfg);
              if (!cfg.polynomial) throw std::invalid_argument("config has no polynomial section");
              return traceDict(weylAverageTrace(action, *cfg.polynomial,
                                                pointOrZero(cfg, action.torusDim()),
                                                actionFolner(cfg, action),
                                                resolveGrid(cfg, grid)));
          },
          py::arg("config"), py::arg("grid") = std::vector<double>{});

    m.def("bohr_orthogonality_trace",
          [](const ProjectConfig& cfg, const std::vector<double>& grid) {
              if (!cfg.groupElement) throw std::invalid_argument("config has no group_element");
              std::vector<double> g;
              for (const auto& c : *cfg.groupElement) g.push_back(c.evalNumeric());
              FolnerFamily f = defaultFolner(cfg, FolnerKind::RealBox, g.size());
              return traceDict(bohrOrthogonalityTrace(f, g, resolveGrid(cfg, grid)));
          },
          py::arg("config"), py::arg("grid") = std::vector<double>{});

    m.def("wiener_atom_trace",
          [](const ProjectConfig& cfg, const std::vector<double>& grid) {
              if (!cfg.wienerX) throw std::invalid_argument("config has no wiener_x");
              FolnerFamily f = measureFolner(cfg);  // checks cfg.measure
              return traceDict(wienerAtom(*cfg.measure, *cfg.wienerX, f, resolveGrid(cfg, grid)));
          },
          py::arg("config"), py::arg("grid") = std::vector<double>{});

    m.def("wiener_energy_trace",
          [](const ProjectConfig& cfg, const std::vector<double>& grid) {
              FolnerFamily f = measureFolner(cfg);  // checks cfg.measure
              return traceDict(wienerEnergy(*cfg.measure, f, resolveGrid(cfg, grid)));
          },
          py::arg("config"), py::arg("grid") = std::vector<double>{});

    m.def("bohr_mean_trace",
          [](const ProjectConfig& cfg, const std::vector<double>& grid) {
              if (!cfg.groupPolynomial || cfg.groupPolynomial->terms.empty())
                  throw std::invalid_argument("config has no group_polynomial terms");
              std::size_t dim = cfg.folner ? cfg.folner->dim
                                           : cfg.groupPolynomial->terms[0].frequency.size();
              FolnerFamily f = defaultFolner(cfg, FolnerKind::RealBox, dim);
              std::vector<double> shift =
                  cfg.groupShift ? *cfg.groupShift : std::vector<double>(f.dim, 0.0);
              return traceDict(bohrMean(*cfg.groupPolynomial, shift, f, resolveGrid(cfg, grid)));
          },
          py::arg("config"), py::arg("grid") = std::vector<double>{});
}
