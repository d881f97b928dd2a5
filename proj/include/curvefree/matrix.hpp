#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "curvefree/eisenstein.hpp"

namespace curvefree {

/// Dense matrix over Q(w), row-major.
///
/// Elimination always takes the first nonzero entry of a column as pivot,
/// so ranks, pivot columns and nullspace bases are reproducible.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Eisenstein& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Eisenstein& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t nonzero_count() const;

    /// Rank by fraction-free (Bareiss) elimination over Z[w] after clearing
    /// column denominators.
    std::size_t rank() const;

    /// Basis of the right nullspace {v : M v = 0} from the reduced row echelon
    /// form; one vector per free column, normalized to 1 at that column.
    std::vector<std::vector<Eisenstein>> nullspace() const;

    /// Apply to a vector.
    std::vector<Eisenstein> apply(const std::vector<Eisenstein>& v) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Eisenstein> data_;
};

/// Elimination statistics for the last rank() call on this thread; reported
/// when CURVEFREE_ELIM_VERBOSE is set.
struct EliminationStats {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t max_entry_bits = 0;
};

const EliminationStats& last_elimination_stats();

}  // namespace curvefree
