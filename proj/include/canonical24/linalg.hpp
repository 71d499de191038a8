#pragma once

// Exact linear algebra over Q. Matrices are dense row-major tables.

#include "canonical24/rational.hpp"

#include <cstddef>
#include <vector>

namespace canonical24 {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerVector = std::vector<Integer>;

/// Clears denominators and divides out the content; the zero vector stays zero.
IntegerVector primitive_integer_vector(const std::vector<Rational>& v);

/// Rank by fraction-free elimination, pivoting down the columns left to right.
std::size_t bareiss_rank(const RationalMatrix& m);

/// Rank of the transpose, so the elimination runs over the other index.
std::size_t bareiss_rank_transposed(const RationalMatrix& m);

RationalMatrix transpose(const RationalMatrix& m);

/// Basis of {x : m x = 0} from the reduced row echelon form; one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t columns);

/// Row echelon basis grown one vector at a time. Each stored row is primitive
/// and vanishes on the pivots of the rows stored before it.
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(std::size_t length) : length_(length) {}

    /// Adds v to the span; true iff v was independent of the rows so far.
    bool add(const std::vector<Rational>& v);
    bool add(IntegerVector v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t length() const { return length_; }
    bool full() const { return rows_.size() == length_; }

private:
    std::size_t length_;
    std::vector<IntegerVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace canonical24
