#pragma once

#include <cstdint>
#include <map>

#include "torusact/conjugacy.hpp"
#include "torusact/measure.hpp"

namespace torusact {

/// Malformed configuration: names the source, the offending key, and the
/// expected form. Mapped to exit code 2 by the CLI.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& source, const std::string& key, const std::string& expected)
        : std::runtime_error(source + ": key '" + key + "': expected " + expected) {}
};

/// Parsed project file. Exact values (generator coordinates, targets,
/// frequencies) travel as rational strings over the declared basis; floating
/// data (points, shifts, grids, weights) as plain numbers.
struct ProjectConfig {
    RealBasisPtr basis;
    std::optional<ActionSpec> action;
    std::map<std::string, std::vector<SymbolicReal>> targets;
    std::optional<TrigPolynomial> polynomial;
    std::optional<std::vector<double>> point;
    std::optional<MeasureModel> measure;
    std::optional<double> wienerX;
    std::optional<FolnerFamily> folner;
    std::optional<GroupPolynomial> groupPolynomial;
    std::optional<std::vector<double>> groupShift;
    std::optional<std::vector<SymbolicReal>> groupElement;
    std::vector<double> grid;
    std::optional<std::uint64_t> seed;
};

ProjectConfig parseConfigText(const std::string& text, const std::string& sourceName);
ProjectConfig parseConfigFile(const std::string& path);

/// Canonical JSON for a parsed config; parsing it back yields an identical
/// exact configuration (rational strings canonicalized, symbols in basis order).
std::string serializeConfig(const ProjectConfig& config);

/// Parses a sum of rational multiples of basis symbols, e.g. "1/10",
/// "3+1/2*sqrt2", "-sqrt3". Used for --theta components.
SymbolicReal parseSymbolicExpression(const RealBasisPtr& basis, const std::string& text);

}  // namespace torusact
