#include "torusact/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace torusact {

namespace {

using Json = nlohmann::ordered_json;

struct Cx {
    const std::string& source;

    [[noreturn]] void fail(const std::string& key, const std::string& expected) const {
        throw ConfigError(source, key, expected);
    }

    const Json& get(const Json& node, const std::string& key) const {
        auto it = node.find(key);
        if (it == node.end()) fail(key, "a value (key is missing)");
        return *it;
    }

    double number(const Json& node, const std::string& key) const {
        if (!node.is_number()) fail(key, "a number");
        return node.get<double>();
    }

    std::string text(const Json& node, const std::string& key) const {
        if (!node.is_string()) fail(key, "a string");
        return node.get<std::string>();
    }

    Rat rational(const Json& node, const std::string& key) const {
        if (!node.is_string()) fail(key, "an exact rational string \"p/q\"");
        try {
            return parseRational(node.get<std::string>());
        } catch (const std::exception&) {
            fail(key, "an exact rational string \"p/q\"");
        }
    }

    // Exact-to-double location: rational string or plain number.
    double looseNumber(const Json& node, const std::string& key) const {
        if (node.is_number()) return node.get<double>();
        if (node.is_string()) return rational(node, key).get_d();
        fail(key, "a number or rational string");
    }

    std::vector<double> numberList(const Json& node, const std::string& key) const {
        if (!node.is_array()) fail(key, "an array of numbers");
        std::vector<double> out;
        for (const auto& v : node) out.push_back(number(v, key));
        return out;
    }

    std::complex<double> weight(const Json& node, const std::string& key) const {
        double re = 0.0, im = 0.0;
        if (node.contains("re")) re = number(node["re"], key + ".re");
        if (node.contains("im")) im = number(node["im"], key + ".im");
        return {re, im};
    }

    // Coordinate over the basis: either {"symbol": "p/q", ...} or the
    // shorthand "p/q" meaning a plain rational.
    SymbolicReal coordinate(const RealBasisPtr& basis, const Json& node,
                            const std::string& key) const {
        if (node.is_string()) return SymbolicReal::constant(basis, rational(node, key));
        if (!node.is_object()) fail(key, "a rational string or {symbol: rational} object");
        std::vector<Rat> coords(basis->size());
        for (const auto& [name, value] : node.items()) {
            auto idx = basis->indexOf(name);
            if (!idx) fail(key, "a declared basis symbol (undeclared symbol '" + name + "')");
            coords[*idx] = rational(value, key + "." + name);
        }
        return SymbolicReal(basis, std::move(coords));
    }

    std::vector<SymbolicReal> coordinateList(const RealBasisPtr& basis, const Json& node,
                                             const std::string& key) const {
        if (!node.is_array()) fail(key, "an array of coordinates");
        std::vector<SymbolicReal> out;
        std::size_t i = 0;
        for (const auto& v : node) out.push_back(coordinate(basis, v, key + "[" + std::to_string(i++) + "]"));
        return out;
    }
};

RealBasisPtr parseBasis(const Cx& cx, const Json& root) {
    std::vector<std::pair<std::string, double>> symbols;
    if (root.contains("basis")) {
        const Json& node = root["basis"];
        if (!node.is_array()) cx.fail("basis", "an array of {name, value} objects");
        for (const auto& entry : node) {
            if (!entry.is_object()) cx.fail("basis", "an array of {name, value} objects");
            std::string name = cx.text(cx.get(entry, "name"), "basis.name");
            double value = cx.looseNumber(cx.get(entry, "value"), "basis.value");
            symbols.emplace_back(std::move(name), value);
        }
    }
    try {
        return RealBasis::create(std::move(symbols));
    } catch (const std::exception& e) {
        throw ConfigError(cx.source, "basis", std::string("a valid basis (") + e.what() + ")");
    }
}

ActionSpec parseAction(const Cx& cx, const RealBasisPtr& basis, const Json& node) {
    std::string family = cx.text(cx.get(node, "family"), "action.family");
    ActionFamily fam;
    if (family == "real-flow")
        fam = ActionFamily::RealFlow;
    else if (family == "lattice-action")
        fam = ActionFamily::LatticeAction;
    else
        cx.fail("action.family", "\"real-flow\" or \"lattice-action\"");

    double dRaw = cx.number(cx.get(node, "d"), "action.d");
    auto d = static_cast<std::size_t>(dRaw);
    if (dRaw != static_cast<double>(d) || d < 1) cx.fail("action.d", "a positive integer");

    const Json& gens = cx.get(node, "generators");
    if (!gens.is_array() || gens.empty())
        cx.fail("action.generators", "a nonempty array of generator coordinate lists");
    std::vector<std::vector<SymbolicReal>> generators;
    std::size_t gi = 0;
    for (const auto& g : gens) {
        std::string key = "action.generators[" + std::to_string(gi++) + "]";
        auto coords = cx.coordinateList(basis, g, key);
        if (coords.size() != d) cx.fail(key, "a coordinate list of length d");
        generators.push_back(std::move(coords));
    }
    if (node.contains("n")) {
        double nRaw = cx.number(node["n"], "action.n");
        if (nRaw != static_cast<double>(generators.size()))
            cx.fail("action.n", "the generator count (" + std::to_string(generators.size()) + ")");
    }
    try {
        return ActionSpec(fam, d, std::move(generators));
    } catch (const std::exception& e) {
        throw ConfigError(cx.source, "action", std::string("a valid action (") + e.what() + ")");
    }
}

TrigPolynomial parsePolynomial(const Cx& cx, const Json& node, const std::string& key) {
    const Json& terms = cx.get(node, "terms");
    if (!terms.is_array()) cx.fail(key + ".terms", "an array of terms");
    TrigPolynomial phi;
    std::size_t i = 0;
    for (const auto& term : terms) {
        std::string tk = key + ".terms[" + std::to_string(i++) + "]";
        const Json& u = cx.get(term, "u");
        if (!u.is_array()) cx.fail(tk + ".u", "an integer vector");
        TrigTerm t;
        for (const auto& c : u) {
            double x = cx.number(c, tk + ".u");
            auto v = static_cast<long long>(x);
            if (x != static_cast<double>(v)) cx.fail(tk + ".u", "an integer vector");
            t.u.push_back(v);
        }
        t.a = cx.weight(term, tk);
        phi.terms.push_back(std::move(t));
    }
    phi.dim = phi.terms.empty() ? 0 : phi.terms[0].u.size();
    try {
        phi.validate();
    } catch (const std::exception& e) {
        throw ConfigError(cx.source, key, std::string("a valid polynomial (") + e.what() + ")");
    }
    return phi;
}

MeasureModel parseMeasure(const Cx& cx, const Json& node) {
    MeasureModel m;
    std::string group = cx.text(cx.get(node, "group"), "measure.group");
    if (group == "circle")
        m.group = MeasureGroup::Circle;
    else if (group == "real-line")
        m.group = MeasureGroup::RealLine;
    else
        cx.fail("measure.group", "\"circle\" or \"real-line\"");

    if (node.contains("atoms")) {
        if (!node["atoms"].is_array()) cx.fail("measure.atoms", "an array");
        for (const auto& a : node["atoms"])
            m.atoms.push_back({cx.looseNumber(cx.get(a, "location"), "measure.atoms.location"),
                               cx.weight(a, "measure.atoms")});
    }
    if (node.contains("gaussians")) {
        if (!node["gaussians"].is_array()) cx.fail("measure.gaussians", "an array");
        for (const auto& g : node["gaussians"])
            m.gaussians.push_back({cx.number(cx.get(g, "center"), "measure.gaussians.center"),
                                   cx.number(cx.get(g, "sigma"), "measure.gaussians.sigma"),
                                   cx.weight(g, "measure.gaussians")});
    }
    if (node.contains("uniform_arcs")) {
        if (!node["uniform_arcs"].is_array()) cx.fail("measure.uniform_arcs", "an array");
        for (const auto& a : node["uniform_arcs"])
            m.arcs.push_back({cx.looseNumber(cx.get(a, "a"), "measure.uniform_arcs.a"),
                              cx.looseNumber(cx.get(a, "b"), "measure.uniform_arcs.b"),
                              cx.weight(a, "measure.uniform_arcs")});
    }
    try {
        m.validate();
    } catch (const std::exception& e) {
        throw ConfigError(cx.source, "measure", std::string("a valid measure (") + e.what() + ")");
    }
    return m;
}

FolnerFamily parseFolner(const Cx& cx, const Json& node) {
    std::string kind = cx.text(cx.get(node, "kind"), "folner.kind");
    double dimRaw = cx.number(cx.get(node, "dim"), "folner.dim");
    auto dim = static_cast<std::size_t>(dimRaw);
    if (dimRaw != static_cast<double>(dim) || dim < 1) cx.fail("folner.dim", "a positive integer");
    std::vector<double> shift;
    if (node.contains("shift")) shift = cx.numberList(node["shift"], "folner.shift");
    try {
        if (kind == "real-box") return FolnerFamily::realBox(dim, std::move(shift));
        if (kind == "lattice-box") {
            std::vector<long long> s;
            for (double x : shift) {
                auto v = static_cast<long long>(std::llround(x));
                if (x != static_cast<double>(v)) cx.fail("folner.shift", "integer shifts");
                s.push_back(v);
            }
            return FolnerFamily::latticeBox(dim, std::move(s));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(cx.source, "folner", std::string("a valid family (") + e.what() + ")");
    }
    cx.fail("folner.kind", "\"real-box\" or \"lattice-box\"");
}

GroupPolynomial parseGroupPolynomial(const Cx& cx, const RealBasisPtr& basis, const Json& node) {
    const Json& terms = cx.get(node, "terms");
    if (!terms.is_array()) cx.fail("group_polynomial.terms", "an array of terms");
    GroupPolynomial phi;
    std::size_t i = 0;
    for (const auto& term : terms) {
        std::string tk = "group_polynomial.terms[" + std::to_string(i++) + "]";
        GroupTerm t{cx.coordinateList(basis, cx.get(term, "frequency"), tk + ".frequency"),
                    cx.weight(term, tk)};
        phi.terms.push_back(std::move(t));
    }
    return phi;
}

}  // namespace

ProjectConfig parseConfigText(const std::string& text, const std::string& sourceName) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(sourceName, "<document>", std::string("valid JSON (") + e.what() + ")");
    }
    if (!root.is_object()) throw ConfigError(sourceName, "<document>", "a JSON object");

    Cx cx{sourceName};
    ProjectConfig cfg;
    cfg.basis = parseBasis(cx, root);

    if (root.contains("action")) cfg.action = parseAction(cx, cfg.basis, root["action"]);
    if (root.contains("targets")) {
        const Json& t = root["targets"];
        if (!t.is_object()) cx.fail("targets", "an object of named coordinate lists");
        for (const auto& [name, value] : t.items())
            cfg.targets[name] = cx.coordinateList(cfg.basis, value, "targets." + name);
    }
    if (root.contains("polynomial"))
        cfg.polynomial = parsePolynomial(cx, root["polynomial"], "polynomial");
    if (root.contains("point")) cfg.point = cx.numberList(root["point"], "point");
    if (root.contains("measure")) cfg.measure = parseMeasure(cx, root["measure"]);
    if (root.contains("wiener_x")) cfg.wienerX = cx.looseNumber(root["wiener_x"], "wiener_x");
    if (root.contains("folner")) cfg.folner = parseFolner(cx, root["folner"]);
    if (root.contains("group_polynomial"))
        cfg.groupPolynomial = parseGroupPolynomial(cx, cfg.basis, root["group_polynomial"]);
    if (root.contains("group_shift"))
        cfg.groupShift = cx.numberList(root["group_shift"], "group_shift");
    if (root.contains("group_element"))
        cfg.groupElement = cx.coordinateList(cfg.basis, root["group_element"], "group_element");
    if (root.contains("grid")) {
        cfg.grid = cx.numberList(root["grid"], "grid");
        if (cfg.grid.empty()) cx.fail("grid", "a nonempty array of parameters");
    }
    if (root.contains("seed")) {
        double s = cx.number(root["seed"], "seed");
        if (s < 0 || s != std::floor(s)) cx.fail("seed", "a nonnegative integer");
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    return cfg;
}

ProjectConfig parseConfigFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, "<file>", "a readable configuration file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseConfigText(buf.str(), path);
}

namespace {

Json coordinateJson(const SymbolicReal& value) {
    Json obj = Json::object();
    const RealBasisPtr& basis = value.basis();
    for (std::size_t s = 0; s < basis->size(); ++s)
        if (value.coord(s) != 0) obj[basis->name(s)] = toString(value.coord(s));
    return obj;
}

Json coordinateListJson(const std::vector<SymbolicReal>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(coordinateJson(v));
    return arr;
}

Json complexJson(Json obj, const std::complex<double>& w) {
    obj["re"] = w.real();
    obj["im"] = w.imag();
    return obj;
}

}  // namespace

std::string serializeConfig(const ProjectConfig& cfg) {
    Json root = Json::object();

    Json basis = Json::array();
    for (std::size_t i = 1; i < cfg.basis->size(); ++i)
        basis.push_back({{"name", cfg.basis->name(i)}, {"value", cfg.basis->value(i)}});
    root["basis"] = std::move(basis);

    if (cfg.action) {
        Json action = Json::object();
        action["family"] = cfg.action->family() == ActionFamily::RealFlow ? "real-flow"
                                                                          : "lattice-action";
        action["d"] = cfg.action->timeDim();
        action["n"] = cfg.action->torusDim();
        Json gens = Json::array();
        for (const auto& g : cfg.action->generators()) gens.push_back(coordinateListJson(g));
        action["generators"] = std::move(gens);
        root["action"] = std::move(action);
    }
    if (!cfg.targets.empty()) {
        Json targets = Json::object();
        for (const auto& [name, value] : cfg.targets) targets[name] = coordinateListJson(value);
        root["targets"] = std::move(targets);
    }
    if (cfg.polynomial) {
        Json terms = Json::array();
        for (const auto& t : cfg.polynomial->terms) {
            Json term = Json::object();
            term["u"] = t.u;
            terms.push_back(complexJson(std::move(term), t.a));
        }
        root["polynomial"] = Json{{"terms", std::move(terms)}};
    }
    if (cfg.point) root["point"] = *cfg.point;
    if (cfg.measure) {
        Json m = Json::object();
        m["group"] = cfg.measure->group == MeasureGroup::Circle ? "circle" : "real-line";
        if (!cfg.measure->atoms.empty()) {
            Json atoms = Json::array();
            for (const auto& a : cfg.measure->atoms)
                atoms.push_back(complexJson(Json{{"location", a.location}}, a.weight));
            m["atoms"] = std::move(atoms);
        }
        if (!cfg.measure->gaussians.empty()) {
            Json gs = Json::array();
            for (const auto& g : cfg.measure->gaussians)
                gs.push_back(complexJson(Json{{"center", g.center}, {"sigma", g.sigma}}, g.weight));
            m["gaussians"] = std::move(gs);
        }
        if (!cfg.measure->arcs.empty()) {
            Json arcs = Json::array();
            for (const auto& a : cfg.measure->arcs)
                arcs.push_back(complexJson(Json{{"a", a.a}, {"b", a.b}}, a.weight));
            m["uniform_arcs"] = std::move(arcs);
        }
        root["measure"] = std::move(m);
    }
    if (cfg.wienerX) root["wiener_x"] = *cfg.wienerX;
    if (cfg.folner) {
        root["folner"] = Json{{"kind", cfg.folner->kind == FolnerKind::RealBox ? "real-box"
                                                                               : "lattice-box"},
                              {"dim", cfg.folner->dim},
                              {"shift", cfg.folner->shift}};
    }
    if (cfg.groupPolynomial) {
        Json terms = Json::array();
        for (const auto& t : cfg.groupPolynomial->terms) {
            Json term = Json::object();
            term["frequency"] = coordinateListJson(t.frequency);
            terms.push_back(complexJson(std::move(term), t.coefficient));
        }
        root["group_polynomial"] = Json{{"terms", std::move(terms)}};
    }
    if (cfg.groupShift) root["group_shift"] = *cfg.groupShift;
    if (cfg.groupElement) root["group_element"] = coordinateListJson(*cfg.groupElement);
    if (!cfg.grid.empty()) root["grid"] = cfg.grid;
    if (cfg.seed) root["seed"] = *cfg.seed;

    return root.dump(2) + "\n";
}

SymbolicReal parseSymbolicExpression(const RealBasisPtr& basis, const std::string& text) {
    std::vector<Rat> coords(basis->size());
    std::size_t pos = 0;
    auto skipSpace = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skipSpace();
    if (pos == text.size()) throw std::invalid_argument("empty coordinate expression");
    bool first = true;
    while (pos < text.size()) {
        skipSpace();
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in expression '" + text + "'");
        }
        first = false;
        skipSpace();
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '/' ))
            ++pos;
        Rat value = 1;
        bool haveNumber = pos > start;
        if (haveNumber) value = parseRational(text.substr(start, pos - start));
        skipSpace();
        std::size_t symbolIdx = 0;
        if (pos < text.size() && (text[pos] == '*' || std::isalpha(static_cast<unsigned char>(text[pos])))) {
            if (text[pos] == '*') ++pos;
            skipSpace();
            start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            auto idx = basis->indexOf(name);
            if (!idx) throw std::invalid_argument("undeclared basis symbol '" + name + "'");
            symbolIdx = *idx;
        } else if (!haveNumber) {
            throw std::invalid_argument("expected a rational or symbol in '" + text + "'");
        }
        coords[symbolIdx] += sign * value;
        skipSpace();
    }
    return SymbolicReal(basis, std::move(coords));
}

}  // namespace torusact
