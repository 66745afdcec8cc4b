#include "blowdown/matrix.hpp"

#include "blowdown/errors.hpp"

#include <string>

namespace blowdown {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_)
        throw Error(ErrorKind::Dimension, "product of " + std::to_string(rows_) + "x" +
                                              std::to_string(cols_) + " with " +
                                              std::to_string(other.rows_) + "x" +
                                              std::to_string(other.cols_));
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RationalMatrix IntegerMatrix::to_rational() const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = Rational(at(i, j));
    return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw Error(ErrorKind::Dimension, "integer matrix product shape mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += at(i, k) * other.at(k, j);
        }
    return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::Dimension, "determinant of non-square " + std::to_string(m.rows()) +
                                              "x" + std::to_string(m.cols()) + " matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            Rational f = a.at(r, col) / a.at(col, col);
            for (std::size_t j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return det;
}

Integer determinant(const IntegerMatrix& m) {
    Rational d = determinant(m.to_rational());
    return numerator(d); // exact: integer matrices have integer determinants
}

RationalMatrix invert(const RationalMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::Dimension, "inverse of non-square matrix");
    std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n)
            throw Error(ErrorKind::Singular,
                        "no nonzero pivot in column " + std::to_string(col + 1) +
                            " after eliminating " + std::to_string(col) + " columns");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

RationalMatrix leading_minor(const RationalMatrix& m, std::size_t k) {
    RationalMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.at(i, j) = m.at(i, j);
    return out;
}

} // namespace

bool is_negative_definite(const RationalMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::Shape, "definiteness of non-square matrix");
    if (!m.is_symmetric()) throw Error(ErrorKind::Shape, "definiteness of asymmetric matrix");
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Rational d = determinant(leading_minor(m, k));
        int expected = (k % 2 == 0) ? 1 : -1;
        if (sign_of(d) != expected) return false;
    }
    return true;
}

} // namespace blowdown
