#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "torusact/rational.hpp"

namespace torusact {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    IntMatrix transpose() const;
    bool isZeroRow(std::size_t i) const;

    void swapRows(std::size_t i, std::size_t j);
    /// row i += q * row j
    void addRowMultiple(std::size_t i, std::size_t j, const Int& q);
    void negateRow(std::size_t i);

    bool operator==(const IntMatrix& other) const = default;

    std::string toString() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix stackRows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

/// Dense row-major matrix over rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<std::string>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

RatMatrix toRational(const IntMatrix& m);
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);

}  // namespace torusact
