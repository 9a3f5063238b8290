#include "torusact/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "torusact/config.hpp"

namespace torusact::cli {

namespace {

using Json = nlohmann::ordered_json;

Json intJson(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

Json vectorJson(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(intJson(x));
    return arr;
}

Json matrixJson(const IntMatrix& m) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(vectorJson(m.row(i)));
    return arr;
}

void emit(const std::string& text, const std::string& outPath, std::ostream& out) {
    if (outPath.empty()) {
        out << text;
        return;
    }
    std::ofstream file(outPath);
    if (!file) throw std::invalid_argument("cannot open output file '" + outPath + "'");
    file << text;
}

void emitJson(const Json& value, const std::string& outPath, std::ostream& out) {
    emit(value.dump(2) + "\n", outPath, out);
}

void emitTrace(const AverageTrace& trace, const std::string& outPath, std::ostream& out) {
    std::ostringstream csv;
    trace.writeCsv(csv);
    emit(csv.str(), outPath, out);
}

const ActionSpec& requireAction(const ProjectConfig& cfg, const std::string& source) {
    if (!cfg.action) throw ConfigError(source, "action", "an action section");
    return *cfg.action;
}

std::vector<double> resolveGrid(const ProjectConfig& cfg, const std::string& gridFlag,
                                const std::string& source) {
    if (!gridFlag.empty()) {
        std::vector<double> grid;
        std::stringstream ss(gridFlag);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                grid.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ConfigError("--grid", item, "a comma-separated list of numbers");
            }
        }
        if (!grid.empty()) return grid;
    }
    if (cfg.grid.empty())
        throw ConfigError(source, "grid", "a parameter grid (config key or --grid)");
    return cfg.grid;
}

FolnerFamily defaultFolner(const ProjectConfig& cfg, FolnerKind kind, std::size_t dim) {
    if (cfg.folner) return *cfg.folner;
    return kind == FolnerKind::RealBox ? FolnerFamily::realBox(dim)
                                       : FolnerFamily::latticeBox(dim);
}

std::vector<SymbolicReal> resolveTheta(const ProjectConfig& cfg, const std::string& thetaFlag,
                                       const std::string& source) {
    if (thetaFlag.empty()) throw ConfigError(source, "--theta", "a target vector");
    if (thetaFlag[0] == '@') {
        auto it = cfg.targets.find(thetaFlag.substr(1));
        if (it == cfg.targets.end())
            throw ConfigError(source, "targets." + thetaFlag.substr(1), "a declared target");
        return it->second;
    }
    std::vector<SymbolicReal> theta;
    std::stringstream ss(thetaFlag);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            theta.push_back(parseSymbolicExpression(cfg.basis, item));
        } catch (const std::exception& e) {
            throw ConfigError("--theta", item, std::string("a coordinate expression (") + e.what() + ")");
        }
    }
    return theta;
}

std::string failureName(ConjugacyFailure reason) {
    switch (reason) {
        case ConjugacyFailure::NoRationalSolution: return "no_rational_solution";
        case ConjugacyFailure::NonIntegralSolution: return "non_integral_solution";
        case ConjugacyFailure::NotUnimodular: return "not_unimodular";
    }
    return "unknown";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact relation lattices, orbit structure and Folner-average "
                 "simulation for translation actions on the torus"};
    app.require_subcommand(1);

    std::string configPath, configPathB, gridFlag, thetaFlag, outPath;
    std::uint64_t seedFlag = 0;
    bool seedGiven = false;
    double tolerance = kCoincidenceTolerance;

    auto addCommon = [&](CLI::App* cmd, bool twoConfigs = false) {
        cmd->add_option("config", configPath, "JSON project file")->required();
        if (twoConfigs) cmd->add_option("config_h", configPathB, "second JSON project file")->required();
        cmd->add_option("--grid", gridFlag, "comma-separated parameter grid");
        cmd->add_option("--theta", thetaFlag, "target vector (expressions or @name)");
        cmd->add_option("--out", outPath, "write the result to a file instead of stdout");
        cmd->add_option("--seed", seedFlag, "seed override for randomized checks")
            ->each([&](const std::string&) { seedGiven = true; });
        cmd->add_option("--tolerance", tolerance, "coincidence tolerance for Wiener targets");
        return cmd;
    };

    auto* relations = addCommon(app.add_subcommand("relations", "relation lattice H-perp in HNF"));
    auto* orbit = addCommon(app.add_subcommand("orbit", "orbit-closure structure of H"));
    auto* kronecker = addCommon(app.add_subcommand("kronecker", "Kronecker solvability of a target"));
    auto* ue = addCommon(app.add_subcommand("ue", "unique ergodicity of the action"));
    auto* conjugacy = addCommon(app.add_subcommand("conjugacy", "GL(n,Z) conjugacy of two actions"), true);
    auto* average = addCommon(app.add_subcommand("average", "Weyl averages along the Folner grid"));
    auto* bohr = addCommon(app.add_subcommand("bohr", "Bohr orthogonality trace of a character"));
    auto* wienerAtomCmd = addCommon(app.add_subcommand("wiener-atom", "Wiener atom recovery trace"));
    auto* wienerEnergyCmd = addCommon(app.add_subcommand("wiener-energy", "Wiener discrete-energy trace"));
    auto* mean = addCommon(app.add_subcommand("mean", "Bohr mean trace of an almost periodic polynomial"));

    try {
        std::vector<char*> argv;
        std::string name = "torusact";
        argv.push_back(name.data());
        std::vector<std::string> owned(args);
        for (auto& a : owned) argv.push_back(a.data());
        app.parse(static_cast<int>(argv.size()), argv.data());

        ProjectConfig cfg = parseConfigFile(configPath);
        std::uint64_t seed = seedGiven ? seedFlag : cfg.seed.value_or(0);

        if (relations->parsed()) {
            RelationLattice rl = relationLattice(requireAction(cfg, configPath));
            Json res{{"hnf_basis", matrixJson(rl.lattice.basis())}, {"rank", rl.rank()}};
            emitJson(res, outPath, out);
        } else if (orbit->parsed()) {
            const ActionSpec& action = requireAction(cfg, configPath);
            OrbitStructure os = orbitStructure(relationLattice(action), action.torusDim());
            Json factors = Json::array();
            for (const auto& f : os.invariantFactors) factors.push_back(intJson(f));
            emitJson(Json{{"free_rank", os.freeRank}, {"invariant_factors", factors}}, outPath, out);
        } else if (kronecker->parsed()) {
            const ActionSpec& action = requireAction(cfg, configPath);
            KroneckerResult res =
                kroneckerSolvable(action, resolveTheta(cfg, thetaFlag, configPath));
            Json doc{{"solvable", res.solvable}};
            doc["certificate"] = res.certificate ? vectorJson(*res.certificate) : Json(nullptr);
            emitJson(doc, outPath, out);
        } else if (ue->parsed()) {
            emitJson(Json{{"uniquely_ergodic", isUniquelyErgodic(requireAction(cfg, configPath))}},
                     outPath, out);
        } else if (conjugacy->parsed()) {
            ProjectConfig cfgB = parseConfigFile(configPathB);
            ConjugacyResult res = findConjugacy(requireAction(cfg, configPath),
                                                requireAction(cfgB, configPathB));
            Json doc = Json::object();
            if (res.status == ConjugacyStatus::Conjugate) {
                doc["status"] = "conjugate";
                doc["P"] = matrixJson(*res.witness);
                std::vector<double> origin(cfg.action->torusDim(), 0.0);
                doc["max_deviation"] = verifyConjugacyNumerically(
                    *cfg.action, *cfgB.action, *res.witness, origin, 64, seed);
            } else if (res.status == ConjugacyStatus::NotConjugate) {
                doc["status"] = "not_conjugate";
                doc["reason"] = failureName(*res.reason);
            } else {
                doc["status"] = "not_applicable";
                doc["reason"] = res.nonMinimalAction == 1 ? "first action is not minimal"
                                                          : "second action is not minimal";
                doc["obstruction"] = vectorJson(*res.obstruction);
            }
            emitJson(doc, outPath, out);
        } else if (average->parsed()) {
            const ActionSpec& action = requireAction(cfg, configPath);
            if (!cfg.polynomial) throw ConfigError(configPath, "polynomial", "a polynomial section");
            std::vector<double> z =
                cfg.point ? *cfg.point : std::vector<double>(action.torusDim(), 0.0);
            FolnerFamily folner = defaultFolner(
                cfg,
                action.family() == ActionFamily::RealFlow ? FolnerKind::RealBox
                                                          : FolnerKind::LatticeBox,
                action.timeDim());
            auto grid = resolveGrid(cfg, gridFlag, configPath);
            emitTrace(weylAverageTrace(action, *cfg.polynomial, z, folner, grid), outPath, out);
        } else if (bohr->parsed()) {
            if (!cfg.groupElement) throw ConfigError(configPath, "group_element", "a group element");
            std::vector<double> g;
            for (const auto& c : *cfg.groupElement) g.push_back(c.evalNumeric());
            FolnerFamily folner = defaultFolner(cfg, FolnerKind::RealBox, g.size());
            auto grid = resolveGrid(cfg, gridFlag, configPath);
            emitTrace(bohrOrthogonalityTrace(folner, g, grid), outPath, out);
        } else if (wienerAtomCmd->parsed()) {
            if (!cfg.measure) throw ConfigError(configPath, "measure", "a measure section");
            if (!cfg.wienerX) throw ConfigError(configPath, "wiener_x", "an evaluation point");
            FolnerFamily folner = defaultFolner(cfg,
                                                cfg.measure->group == MeasureGroup::Circle
                                                    ? FolnerKind::LatticeBox
                                                    : FolnerKind::RealBox,
                                                1);
            auto grid = resolveGrid(cfg, gridFlag, configPath);
            emitTrace(wienerAtom(*cfg.measure, *cfg.wienerX, folner, grid, tolerance), outPath, out);
        } else if (wienerEnergyCmd->parsed()) {
            if (!cfg.measure) throw ConfigError(configPath, "measure", "a measure section");
            FolnerFamily folner = defaultFolner(cfg,
                                                cfg.measure->group == MeasureGroup::Circle
                                                    ? FolnerKind::LatticeBox
                                                    : FolnerKind::RealBox,
                                                1);
            auto grid = resolveGrid(cfg, gridFlag, configPath);
            emitTrace(wienerEnergy(*cfg.measure, folner, grid, tolerance), outPath, out);
        } else if (mean->parsed()) {
            if (!cfg.groupPolynomial)
                throw ConfigError(configPath, "group_polynomial", "a group polynomial section");
            if (cfg.groupPolynomial->terms.empty())
                throw ConfigError(configPath, "group_polynomial.terms", "at least one term");
            std::size_t dim = cfg.folner ? cfg.folner->dim
                                         : cfg.groupPolynomial->terms[0].frequency.size();
            FolnerFamily folner = defaultFolner(cfg, FolnerKind::RealBox, dim);
            std::vector<double> shift =
                cfg.groupShift ? *cfg.groupShift : std::vector<double>(folner.dim, 0.0);
            auto grid = resolveGrid(cfg, gridFlag, configPath);
            emitTrace(bohrMean(*cfg.groupPolynomial, shift, folner, grid), outPath, out);
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace torusact::cli
