#include "torusact/real_field.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace torusact {

std::shared_ptr<const RealBasis> RealBasis::create(
    std::vector<std::pair<std::string, double>> symbols) {
    auto basis = std::shared_ptr<RealBasis>(new RealBasis());
    basis->names_.push_back("1");
    basis->values_.push_back(1.0);
    std::set<std::string> seen{"1"};
    for (auto& [name, value] : symbols) {
        if (name.empty()) throw std::invalid_argument("basis symbol with empty name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate basis symbol '" + name + "'");
        if (!std::isfinite(value) || value == 0.0)
            throw std::invalid_argument("basis symbol '" + name +
                                        "' must have a finite nonzero value");
        basis->names_.push_back(std::move(name));
        basis->values_.push_back(value);
    }
    return basis;
}

std::optional<std::size_t> RealBasis::indexOf(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool sameBasis(const RealBasisPtr& a, const RealBasisPtr& b) {
    return a == b || (a && b && *a == *b);
}

SymbolicReal::SymbolicReal(RealBasisPtr basis, std::vector<Rat> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
    if (!basis_) throw std::invalid_argument("symbolic real without a basis");
    if (coords_.size() != basis_->size())
        throw std::invalid_argument("coordinate count does not match basis size");
}

SymbolicReal SymbolicReal::zero(RealBasisPtr basis) {
    std::vector<Rat> c(basis->size());
    return SymbolicReal(std::move(basis), std::move(c));
}

SymbolicReal SymbolicReal::constant(RealBasisPtr basis, const Rat& value) {
    std::vector<Rat> c(basis->size());
    c[0] = value;
    return SymbolicReal(std::move(basis), std::move(c));
}

SymbolicReal SymbolicReal::symbol(RealBasisPtr basis, std::size_t index, const Rat& scale) {
    std::vector<Rat> c(basis->size());
    c.at(index) = scale;
    return SymbolicReal(std::move(basis), std::move(c));
}

double SymbolicReal::evalNumeric() const {
    double acc = 0.0;
    for (std::size_t s = 0; s < coords_.size(); ++s)
        acc += coords_[s].get_d() * basis_->value(s);
    return acc;
}

bool SymbolicReal::isZero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

bool SymbolicReal::isIntegerValue() const {
    if (!isInteger(coords_[0])) return false;
    for (std::size_t s = 1; s < coords_.size(); ++s)
        if (coords_[s] != 0) return false;
    return true;
}

SymbolicReal SymbolicReal::reducedMod1() const {
    std::vector<Rat> c = coords_;
    c[0] = fractionalPart(c[0]);
    return SymbolicReal(basis_, std::move(c));
}

namespace {
void requireSame(const SymbolicReal& a, const SymbolicReal& b) {
    if (!sameBasis(a.basis(), b.basis()))
        throw std::invalid_argument("symbolic reals over different bases");
}
}  // namespace

SymbolicReal SymbolicReal::operator+(const SymbolicReal& other) const {
    requireSame(*this, other);
    std::vector<Rat> c = coords_;
    for (std::size_t s = 0; s < c.size(); ++s) c[s] += other.coords_[s];
    return SymbolicReal(basis_, std::move(c));
}

SymbolicReal SymbolicReal::operator-(const SymbolicReal& other) const {
    requireSame(*this, other);
    std::vector<Rat> c = coords_;
    for (std::size_t s = 0; s < c.size(); ++s) c[s] -= other.coords_[s];
    return SymbolicReal(basis_, std::move(c));
}

SymbolicReal SymbolicReal::operator-() const {
    std::vector<Rat> c = coords_;
    for (Rat& v : c) v = -v;
    return SymbolicReal(basis_, std::move(c));
}

SymbolicReal SymbolicReal::scaled(const Rat& factor) const {
    std::vector<Rat> c = coords_;
    for (Rat& v : c) v *= factor;
    return SymbolicReal(basis_, std::move(c));
}

bool SymbolicReal::operator==(const SymbolicReal& other) const {
    return sameBasis(basis_, other.basis_) && coords_ == other.coords_;
}

RatMatrix coefficientMatrix(const std::vector<std::vector<SymbolicReal>>& elements) {
    if (elements.empty()) throw std::invalid_argument("coefficient matrix of no elements");
    const std::size_t n = elements.size();
    const std::size_t d = elements[0].size();
    if (d == 0) throw std::invalid_argument("elements must have at least one coordinate");
    const RealBasisPtr& basis = elements[0][0].basis();
    const std::size_t symbols = basis->size();

    RatMatrix m(d * symbols, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (elements[j].size() != d)
            throw std::invalid_argument("elements have mixed coordinate counts");
        for (std::size_t i = 0; i < d; ++i) {
            if (!sameBasis(elements[j][i].basis(), basis))
                throw std::invalid_argument("elements over mixed bases");
            for (std::size_t s = 0; s < symbols; ++s)
                m(i * symbols + s, j) = elements[j][i].coord(s);
        }
    }
    return m;
}

std::vector<Rat> powerBasisCoords(const std::vector<Int>& minPoly, unsigned k) {
    std::size_t deg = minPoly.size();
    while (deg > 0 && minPoly[deg - 1] == 0) --deg;
    if (deg == 0) throw std::invalid_argument("zero minimal polynomial");
    const std::size_t m = deg - 1;
    if (m == 0) throw std::invalid_argument("minimal polynomial must have degree >= 1");

    // alpha^m = -(c_0 + c_1 alpha + ... + c_{m-1} alpha^{m-1}) / c_m
    std::vector<Rat> reduction(m);
    for (std::size_t i = 0; i < m; ++i) reduction[i] = makeRat(-minPoly[i], minPoly[m]);

    std::vector<Rat> coords(m);
    coords[0] = 1;  // alpha^0
    for (unsigned step = 0; step < k; ++step) {
        Rat overflow = coords[m - 1];
        for (std::size_t i = m - 1; i > 0; --i) coords[i] = coords[i - 1];
        coords[0] = 0;
        if (overflow != 0)
            for (std::size_t i = 0; i < m; ++i) coords[i] += overflow * reduction[i];
    }
    return coords;
}

}  // namespace torusact
