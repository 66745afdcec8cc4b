#pragma once

#include "blowdown/matrix.hpp"

#include <vector>

namespace blowdown {

// U * A * V = diag(d_1, ..., d_r, 0, ...) with d_1 | d_2 | ... and U, V unimodular.
struct SmithDecomposition {
    std::vector<Integer> diagonal; // non-negative, length min(rows, cols)
    IntegerMatrix u;               // rows x rows
    IntegerMatrix v;               // cols x cols

    IntegerMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Cokernel summary of a square integer matrix: Z^n / im(A).
struct AbelianGroup {
    bool finite = true;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion; // invariant factors > 1, in divisibility order
    Integer order = 1;            // meaningful only when finite
};

AbelianGroup cokernel(const IntegerMatrix& m);

} // namespace blowdown
