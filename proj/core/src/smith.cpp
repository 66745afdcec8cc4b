#include "blowdown/smith.hpp"

#include <algorithm>

namespace blowdown {

IntegerMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntegerMatrix d(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) d.at(i, i) = diagonal[i];
    return d;
}

namespace {

void swap_rows(IntegerMatrix& a, IntegerMatrix& u, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IntegerMatrix& a, IntegerMatrix& v, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
}

// row i -= q * row j
void row_op(IntegerMatrix& a, IntegerMatrix& u, std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
}

void col_op(IntegerMatrix& a, IntegerMatrix& v, std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
}

void negate_row(IntegerMatrix& a, IntegerMatrix& u, std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
}

SmithDecomposition finish(IntegerMatrix& a, IntegerMatrix& u, IntegerMatrix& v, std::size_t nmin) {
    SmithDecomposition out;
    out.diagonal.resize(nmin);
    for (std::size_t i = 0; i < nmin; ++i) out.diagonal[i] = a.at(i, i);
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    IntegerMatrix a = m;
    IntegerMatrix u(rows, rows), v(cols, cols);
    for (std::size_t i = 0; i < rows; ++i) u.at(i, i) = 1;
    for (std::size_t i = 0; i < cols; ++i) v.at(i, i) = 1;

    std::size_t nmin = std::min(rows, cols);
    for (std::size_t s = 0; s < nmin; ++s) {
        bool step_done = false;
        while (!step_done) {
            // locate smallest nonzero |entry| in the trailing block
            bool found = false;
            std::size_t pr = s, pc = s;
            Integer best = 0;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j) {
                    if (a.at(i, j) == 0) continue;
                    Integer mag = abs(a.at(i, j));
                    if (!found || mag < best) {
                        found = true;
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) return finish(a, u, v, nmin);
            if (pr != s) swap_rows(a, u, s, pr);
            if (pc != s) swap_cols(a, v, s, pc);

            // clear row and column s; restart whenever a remainder appears,
            // since it is strictly smaller than the pivot
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = s + 1; i < rows; ++i) {
                    if (a.at(i, s) == 0) continue;
                    Integer q = a.at(i, s) / a.at(s, s);
                    row_op(a, u, i, s, q);
                    if (a.at(i, s) != 0) {
                        swap_rows(a, u, s, i);
                        dirty = true;
                    }
                }
                for (std::size_t j = s + 1; j < cols; ++j) {
                    if (a.at(s, j) == 0) continue;
                    Integer q = a.at(s, j) / a.at(s, s);
                    col_op(a, v, j, s, q);
                    if (a.at(s, j) != 0) {
                        swap_cols(a, v, s, j);
                        dirty = true;
                    }
                }
            }

            // divisibility: pivot must divide every remaining entry
            step_done = true;
            for (std::size_t i = s + 1; i < rows && step_done; ++i)
                for (std::size_t j = s + 1; j < cols && step_done; ++j)
                    if (a.at(i, j) % a.at(s, s) != 0) {
                        // fold row i into row s and redo the step
                        row_op(a, u, s, i, Integer(-1));
                        step_done = false;
                    }
        }
        if (a.at(s, s) < 0) negate_row(a, u, s);
    }
    return finish(a, u, v, nmin);
}

AbelianGroup cokernel(const IntegerMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    AbelianGroup g;
    std::size_t ncols = m.cols();
    std::size_t rank = 0;
    for (const Integer& d : snf.diagonal) {
        if (d != 0) {
            ++rank;
            if (d > 1) {
                g.torsion.push_back(d);
                g.order *= d;
            }
        }
    }
    g.free_rank = ncols - rank;
    g.finite = g.free_rank == 0;
    if (!g.finite) g.order = 0;
    return g;
}

} // namespace blowdown
