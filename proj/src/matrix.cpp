#include "torusact/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace torusact {

Rat parseRational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

std::string toString(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        for (long v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::isZeroRow(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) return false;
    return true;
}

void IntMatrix::swapRows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::addRowMultiple(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += q * (*this)(j, c);
}

void IntMatrix::negateRow(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::toString() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix stackRows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged row stack");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<std::string>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        for (const auto& v : r) entries_.push_back(parseRational(v));
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix toRational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

}  // namespace torusact
