#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cliff/field.hpp"

namespace cliff {

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldSpec spec);

  static Matrix identity(std::size_t n, FieldSpec spec);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec spec() const noexcept { return spec_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec spec_{};
  std::vector<FieldElement> data_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
FieldElement determinant(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Unique solution of a x = b, or nullopt when a is singular.
std::optional<std::vector<FieldElement>> solve(const Matrix& a, std::span<const FieldElement> b);

std::optional<Matrix> inverse(const Matrix& m);

/// trace(a * b) without forming the product.
FieldElement trace_of_product(const Matrix& a, const Matrix& b);

/// Sparse row: (column, value) pairs, strictly increasing columns, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, FieldElement>>;

/// Incremental exact row reduction over sparse rows. Used for kernels of the
/// very sparse commutator systems and for the bilinear-form axiom system.
class SparseEchelon {
 public:
  SparseEchelon(std::size_t cols, FieldSpec spec);

  /// Reduces and stores the row; returns true when it raised the rank.
  /// Unsorted input and repeated columns are accepted and combined.
  bool insert(SparseRow row);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool has_pivot(std::size_t col) const { return pivots_.contains(col); }

  /// Basis of {x : row . x = 0 for every inserted row}, one dense vector per free column.
  std::vector<std::vector<FieldElement>> kernel() const;

  struct AffineSolution {
    bool consistent = false;
    std::vector<FieldElement> particular;
    std::vector<std::vector<FieldElement>> directions;
  };
  /// Treats the last column as the right-hand side of row . x = rhs.
  AffineSolution solve_affine() const;

 private:
  std::map<std::size_t, SparseRow> reduced() const;

  std::size_t cols_;
  FieldSpec spec_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with leading 1
};

}  // namespace cliff
