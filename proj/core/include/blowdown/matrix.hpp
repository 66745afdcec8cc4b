#pragma once

#include "blowdown/rational.hpp"

#include <cstddef>
#include <vector>

namespace blowdown {

// Dense exact matrices. Everything here is computed with exact rational
// pivoting since the callers cannot tolerate rounding of any kind.

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    RationalMatrix operator*(const RationalMatrix& other) const;
    bool operator==(const RationalMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalMatrix to_rational() const;
    IntegerMatrix operator*(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

// Exact determinant via pivoted elimination. The empty matrix has determinant 1.
Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);

// Exact inverse; throws Singular naming the pivot column that vanished.
RationalMatrix invert(const RationalMatrix& m);

// Leading-principal-minor test: sign(minor_k) == (-1)^k for all k.
// Requires a square symmetric input.
bool is_negative_definite(const RationalMatrix& m);

} // namespace blowdown
