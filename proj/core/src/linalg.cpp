#include "massey/linalg.hpp"

#include <utility>

#include "massey/error.hpp"

namespace massey {

ModMatrix::ModMatrix(const PrimeField& field, std::size_t rows,
                     std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ModMatrix ModMatrix::from_rows(
    const PrimeField& field,
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ModMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

void ModMatrix::append_row(std::span<const Residue> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "row length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

ModVector ModMatrix::apply(std::span<const Residue> x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "vector length");
  ModVector y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto row_r = row(r);
    for (std::size_t c = 0; c < cols_; ++c)
      y[r] = field_.fma(y[r], row_r[c], x[c]);
  }
  return y;
}

RowEchelon row_reduce(ModMatrix m) {
  const PrimeField f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pr = lead;
    while (pr < m.rows() && m(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != lead)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(pr, c), m(lead, c));
    const Residue scale = f.inv(m(lead, col));
    for (std::size_t c = col; c < m.cols(); ++c)
      m(lead, c) = f.mul(m(lead, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Residue factor = f.neg(m(r, col));
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.fma(m(r, c), factor, m(lead, c));
    }
    pivots.push_back(col);
    ++lead;
  }
  ModMatrix reduced(f, pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
  return RowEchelon{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const ModMatrix& m) { return row_reduce(m).rank(); }

ModVector RowEchelon::reduce(std::span<const Residue> x) const {
  if (x.size() != reduced.cols())
    throw Error(ErrorCode::DimensionMismatch, "vector length");
  const PrimeField& f = reduced.field();
  ModVector out(x.begin(), x.end());
  for (std::size_t r = 0; r < pivot_columns.size(); ++r) {
    const Residue coef = out[pivot_columns[r]];
    if (coef == 0) continue;
    const Residue factor = f.neg(coef);
    const auto row = reduced.row(r);
    for (std::size_t c = pivot_columns[r]; c < out.size(); ++c)
      if (row[c] != 0) out[c] = f.fma(out[c], factor, row[c]);
  }
  return out;
}

bool RowEchelon::in_row_space(std::span<const Residue> x) const {
  for (Residue v : reduce(x))
    if (v != 0) return false;
  return true;
}

ModVector SolutionSet::point(const PrimeField& field,
                             std::span<const Residue> coeffs) const {
  if (coeffs.size() != kernel_.size())
    throw Error(ErrorCode::DimensionMismatch, "kernel coefficient count");
  ModVector x = particular_;
  for (std::size_t i = 0; i < kernel_.size(); ++i)
    for (std::size_t c = 0; c < x.size(); ++c)
      x[c] = field.fma(x[c], coeffs[i], kernel_[i][c]);
  return x;
}

SolutionSet solve_affine(const AffineSystem& sys) {
  const ModMatrix& a = sys.coefficients;
  const PrimeField& f = a.field();
  if (sys.constants.size() != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "constant vector length");
  if (!sys.labels.empty() && sys.labels.size() != a.cols())
    throw Error(ErrorCode::DimensionMismatch, "unknown labels");

  const std::size_t n = a.cols();
  ModMatrix augmented(f, a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = sys.constants[r];
  }
  const RowEchelon ech = row_reduce(std::move(augmented));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == n)
    return SolutionSet::none();

  ModVector particular(n, 0);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    particular[ech.pivot_columns[r]] = ech.reduced(r, n);
    is_pivot[ech.pivot_columns[r]] = true;
  }
  std::vector<ModVector> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ModVector k(n, 0);
    k[free] = 1;
    for (std::size_t r = 0; r < ech.rank(); ++r)
      k[ech.pivot_columns[r]] = f.neg(ech.reduced(r, free));
    kernel.push_back(std::move(k));
  }
  return SolutionSet(std::move(particular), std::move(kernel));
}

}  // namespace massey
