#pragma once

#include <cstddef>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& other) const = default;

    static RationalMatrix identity(std::size_t n);

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// A rational subspace given by a canonical basis: the rows of `basis` are in
/// reduced row-echelon form with no zero rows, so two subspaces are equal iff
/// their bases are literally equal.
struct RationalSubspace {
    RationalMatrix basis; // rows = basis vectors, RREF, no zero rows

    std::size_t dimension() const { return basis.rows(); }
    std::size_t ambient_dimension() const { return basis.cols(); }
    bool operator==(const RationalSubspace& other) const = default;

    bool contains(const std::vector<Rat>& vec) const;
    bool contains(const RationalSubspace& other) const;
};

/// In-place reduction to reduced row-echelon form. Pivoting within the
/// elimination steps selects the entry of smallest "size" (max of |num|,
/// |den|) to bound coefficient growth; the arithmetic itself stays exact.
/// Returns the rank.
std::size_t rref(RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Right kernel {v : m v = 0}, as a canonical RationalSubspace. The
/// elimination runs fraction-free (Bareiss) on the integer matrix obtained by
/// clearing row denominators.
RationalSubspace kernel(const RationalMatrix& m);

/// Column space of m, canonicalized.
RationalSubspace column_space(const RationalMatrix& m);

/// Span of the given row vectors, canonicalized.
RationalSubspace row_span(const RationalMatrix& rows);

} // namespace hopf
