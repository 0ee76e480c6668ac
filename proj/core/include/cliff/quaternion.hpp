#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliff/clifford.hpp"
#include "cliff/matrix.hpp"

namespace cliff {

/// a + bi + cj + dk with i^2 = j^2 = k^2 = -1 and ij = k.
class Quaternion {
 public:
  Quaternion() : Quaternion(FieldSpec::rational()) {}
  explicit Quaternion(FieldSpec spec);
  Quaternion(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

  static Quaternion scalar(FieldElement a);
  static Quaternion one(FieldSpec spec = FieldSpec::rational());
  static Quaternion i(FieldSpec spec = FieldSpec::rational());
  static Quaternion j(FieldSpec spec = FieldSpec::rational());
  static Quaternion k(FieldSpec spec = FieldSpec::rational());

  /// Accepts "a+bi+cj+dk" with any subset of terms, e.g. "1/2-k" or "i".
  static Quaternion parse(std::string_view text, FieldSpec spec = FieldSpec::rational());

  const FieldElement& a() const noexcept { return a_; }
  const FieldElement& b() const noexcept { return b_; }
  const FieldElement& c() const noexcept { return c_; }
  const FieldElement& d() const noexcept { return d_; }
  FieldSpec spec() const noexcept { return a_.spec(); }

  bool is_zero() const;
  /// a^2 + b^2 + c^2 + d^2.
  FieldElement norm() const;
  Quaternion conj() const;
  /// Throws InversionOfZero.
  Quaternion inverse() const;

  Quaternion operator-() const;
  Quaternion& operator+=(const Quaternion& rhs);
  Quaternion& operator-=(const Quaternion& rhs);
  friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) { return lhs += rhs; }
  friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) { return lhs -= rhs; }
  friend Quaternion operator*(const Quaternion& lhs, const Quaternion& rhs);
  friend Quaternion operator*(const FieldElement& s, const Quaternion& q);
  friend bool operator==(const Quaternion& lhs, const Quaternion& rhs);

  /// Always all four components: "1-2i+0j+3/4k".
  std::string to_string() const;

 private:
  FieldElement a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

using QuatVector = std::vector<Quaternion>;

/// Square matrix of quaternions, row-major.
class QuatMatrix {
 public:
  explicit QuatMatrix(std::size_t size, FieldSpec spec = FieldSpec::rational());
  static QuatMatrix identity(std::size_t size, FieldSpec spec = FieldSpec::rational());

  std::size_t size() const noexcept { return size_; }
  FieldSpec spec() const noexcept { return spec_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }

  friend bool operator==(const QuatMatrix& lhs, const QuatMatrix& rhs) = default;

 private:
  std::size_t size_;
  FieldSpec spec_;
  std::vector<Quaternion> entries_;
};

/// y_i = sum_k x_k A_ik. Throws DimensionMismatch.
QuatVector quat_action(const QuatMatrix& a, const QuatVector& x);
/// (A . B)_ij = sum_k B_kj A_ik, so that (A . B)(x) = A(B(x)). Throws DimensionMismatch.
QuatMatrix quat_mat_product(const QuatMatrix& a, const QuatMatrix& b);
/// A*_ij = conj(A_ji).
QuatMatrix quat_adjoint(const QuatMatrix& a);

/// Matrix of A in the basis u: A(u_i) = sum_r B(A)_ri u_r. Throws SingularBasis and
/// DimensionMismatch.
QuatMatrix basis_change(const QuatMatrix& a, const std::vector<QuatVector>& basis);

/// 1 -> 1, e1 -> i, e2 -> j, e12 -> k on the rational form diag(1,1). Throws WrongForm.
Quaternion cl2_iso(const Multivector& x);
Multivector cl2_iso_inverse(const Quaternion& q, const FormPtr& form);
/// 4x4 matrix of cl2_iso on the blade basis (columns 1, e1, e2, e12).
Matrix cl2_iso_matrix(const FormPtr& form);

}  // namespace cliff
