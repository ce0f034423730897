#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "massey/scalar.hpp"

namespace massey {

using ModVector = std::vector<Residue>;

/// Dense row-major matrix over Z/p.
class ModMatrix {
 public:
  ModMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  /// Entries are reduced mod p; every row must have the same length.
  static ModMatrix from_rows(const PrimeField& field,
                             const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Residue& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }
  std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Residue> values);

  /// A * x. Throws Error(DimensionMismatch).
  ModVector apply(std::span<const Residue> x) const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Reduced row echelon form. Zero rows are dropped, so reduced.rows() is the
/// rank and pivot_columns[i] is the pivot of row i (strictly increasing).
struct RowEchelon {
  ModMatrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }

  /// Canonical representative of x modulo the row space: every pivot
  /// coordinate of the result is zero.
  ModVector reduce(std::span<const Residue> x) const;
  bool in_row_space(std::span<const Residue> x) const;
};

/// Gauss-Jordan elimination taking the first nonzero entry in each column as
/// pivot, scanning columns left to right.
RowEchelon row_reduce(ModMatrix m);

std::size_t rank(const ModMatrix& m);

struct AffineSystem {
  ModMatrix coefficients;
  ModVector constants;
  /// Optional names for the unknowns; empty or one per column.
  std::vector<std::string> labels;
};

/// {x : A x = b}, either empty or particular + span(kernel).
class SolutionSet {
 public:
  static SolutionSet none() { return SolutionSet(); }
  SolutionSet(ModVector particular, std::vector<ModVector> kernel)
      : consistent_(true),
        particular_(std::move(particular)),
        kernel_(std::move(kernel)) {}

  bool empty() const noexcept { return !consistent_; }
  const ModVector& particular() const noexcept { return particular_; }
  const std::vector<ModVector>& kernel() const noexcept { return kernel_; }

  /// particular + sum_i coeffs[i] * kernel[i].
  ModVector point(const PrimeField& field,
                  std::span<const Residue> coeffs) const;

 private:
  SolutionSet() = default;

  bool consistent_ = false;
  ModVector particular_;
  std::vector<ModVector> kernel_;
};

/// Free variables are set to zero in the particular solution; the kernel
/// basis has one vector per free column (that column set to 1).
/// Throws Error(DimensionMismatch) when b or the labels do not fit A.
SolutionSet solve_affine(const AffineSystem& sys);

}  // namespace massey
