#include "cliff/matrix.hpp"

#include <algorithm>

#include "cliff/error.hpp"

namespace cliff {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec spec)
    : rows_(rows), cols_(cols), spec_(spec), data_(rows * cols, FieldElement::zero(spec)) {}

Matrix Matrix::identity(std::size_t n, FieldSpec spec) {
  Matrix m(n, n, spec);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(spec);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, spec_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  }
  Matrix out(a.rows_, b.cols_, a.spec_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldElement& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  }
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  }
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const FieldElement& s, const Matrix& m) {
  Matrix out(m);
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

FieldElement determinant(const Matrix& input) {
  if (!input.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = input.rows();
  const FieldSpec spec = input.spec();
  if (n == 0) return FieldElement::one(spec);

  Matrix m(input);
  FieldElement previous = FieldElement::one(spec);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return FieldElement::zero(spec);
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    const FieldElement pivot = m(k, k);
    const FieldElement previous_inv = previous.inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      const FieldElement lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        FieldElement value = m(i, j) * pivot;
        if (!lead.is_zero() && !m(k, j).is_zero()) value -= lead * m(k, j);
        m(i, j) = value * previous_inv;
      }
      m(i, k) = FieldElement::zero(spec);
    }
    previous = pivot;
  }
  FieldElement det = m(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

// Gauss-Jordan on an augmented copy; returns pivot columns in order.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t eliminate_cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < eliminate_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const FieldElement scale = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElement factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const Matrix& input) {
  Matrix m(input);
  return row_reduce(m, m.cols()).size();
}

std::optional<std::vector<FieldElement>> solve(const Matrix& a, std::span<const FieldElement> b) {
  if (!a.is_square() || b.size() != a.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "solve expects a square system");
  }
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1, a.spec());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  if (row_reduce(aug, n).size() != n) return std::nullopt;
  std::vector<FieldElement> x;
  x.reserve(n);
  for (std::size_t r = 0; r < n; ++r) x.push_back(aug(r, n));
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n, a.spec());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = FieldElement::one(a.spec());
  }
  if (row_reduce(aug, n).size() != n) return std::nullopt;
  Matrix inv(n, n, a.spec());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

FieldElement trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "trace_of_product shape mismatch");
  }
  FieldElement sum = FieldElement::zero(a.spec());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero() || b(k, i).is_zero()) continue;
      sum += a(i, k) * b(k, i);
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------

namespace {

// lhs - factor * rhs, both sorted.
SparseRow axpy(const SparseRow& lhs, const FieldElement& factor, const SparseRow& rhs) {
  SparseRow out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[j].first)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].first < lhs[i].first) {
      out.emplace_back(rhs[j].first, -(factor * rhs[j].second));
      ++j;
    } else {
      FieldElement v = lhs[i].second - factor * rhs[j].second;
      if (!v.is_zero()) out.emplace_back(lhs[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const FieldElement* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, std::size_t c) { return entry.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

SparseEchelon::SparseEchelon(std::size_t cols, FieldSpec spec) : cols_(cols), spec_(spec) {}

bool SparseEchelon::insert(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow combined;
  for (auto& [col, value] : row) {
    if (col >= cols_) throw Error(ErrorKind::DimensionMismatch, "sparse row column out of range");
    if (!combined.empty() && combined.back().first == col) {
      combined.back().second += value;
    } else {
      combined.emplace_back(col, std::move(value));
    }
  }
  std::erase_if(combined, [](const auto& entry) { return entry.second.is_zero(); });

  while (!combined.empty()) {
    auto it = pivots_.find(combined.front().first);
    if (it == pivots_.end()) break;
    const FieldElement factor = combined.front().second;
    combined = axpy(combined, factor, it->second);
  }
  if (combined.empty()) return false;

  const FieldElement scale = combined.front().second.inv();
  for (auto& entry : combined) entry.second *= scale;
  const std::size_t pivot = combined.front().first;
  pivots_.emplace(pivot, std::move(combined));
  return true;
}

std::map<std::size_t, SparseRow> SparseEchelon::reduced() const {
  std::map<std::size_t, SparseRow> rows = pivots_;
  for (auto p = rows.rbegin(); p != rows.rend(); ++p) {
    const std::size_t col = p->first;
    const SparseRow& pivot_row = p->second;
    for (auto& [other_col, other] : rows) {
      if (other_col >= col) break;
      if (const FieldElement* v = find_entry(other, col)) {
        const FieldElement factor = *v;
        other = axpy(other, factor, pivot_row);
      }
    }
  }
  return rows;
}

std::vector<std::vector<FieldElement>> SparseEchelon::kernel() const {
  const auto rows = reduced();
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (rows.contains(f)) continue;
    std::vector<FieldElement> v(cols_, FieldElement::zero(spec_));
    v[f] = FieldElement::one(spec_);
    for (const auto& [p, row] : rows) {
      if (const FieldElement* e = find_entry(row, f)) v[p] = -*e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseEchelon::AffineSolution SparseEchelon::solve_affine() const {
  AffineSolution out;
  if (cols_ == 0) return out;
  const std::size_t rhs = cols_ - 1;
  if (pivots_.contains(rhs)) return out;
  out.consistent = true;
  const auto rows = reduced();
  out.particular.assign(rhs, FieldElement::zero(spec_));
  for (const auto& [p, row] : rows) {
    if (const FieldElement* e = find_entry(row, rhs)) out.particular[p] = *e;
  }
  for (std::size_t f = 0; f < rhs; ++f) {
    if (rows.contains(f)) continue;
    std::vector<FieldElement> v(rhs, FieldElement::zero(spec_));
    v[f] = FieldElement::one(spec_);
    for (const auto& [p, row] : rows) {
      if (const FieldElement* e = find_entry(row, f)) v[p] = -*e;
    }
    out.directions.push_back(std::move(v));
  }
  return out;
}

}  // namespace cliff
