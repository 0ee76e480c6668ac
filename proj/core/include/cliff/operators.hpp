#pragma once

#include <cstddef>
#include <vector>

#include "cliff/clifford.hpp"
#include "cliff/matrix.hpp"

namespace cliff {

/// Matrix of a linear operator on the algebra in the blade basis of its form:
/// column J holds the coefficients of the operator applied to e_J.
using OperatorMatrix = Matrix;

/// L_a : x -> a x.
OperatorMatrix left_matrix(const Multivector& a);
/// R_a : x -> x a.
OperatorMatrix right_matrix(const Multivector& a);

/// Gram^{-1} M^t Gram for the (diagonal) Qbar Gram matrix of the form.
OperatorMatrix metric_adjoint(const OperatorMatrix& m, const QuadraticForm& form);

struct ZeroDivisorReport {
  FieldElement det_left;   // phi_L(a)
  FieldElement det_right;  // phi_R(a)
  bool zero_divisor = false;
};

/// Both determinants; throws ZeroElement for a = 0.
ZeroDivisorReport zero_divisor_report(const Multivector& a);
bool is_zero_divisor(const Multivector& a);
bool is_invertible(const Multivector& a);

/// Two-sided inverse. Throws NotInvertible for zero divisors and zero.
Multivector inverse(const Multivector& a);

/// Linear map between two algebras of equal dimension; column J is the image of e_J.
class AlgebraMap {
 public:
  AlgebraMap(FormPtr source, FormPtr target, Matrix matrix);

  const FormPtr& source() const noexcept { return source_; }
  const FormPtr& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  Multivector operator()(const Multivector& x) const;
  Multivector image(BladeIndex blade) const;

  /// f(1) = 1 and f(e_I e_J) = f(e_I) f(e_J) for every pair of blades.
  bool is_multiplicative() const;

  /// (this o inner), defined when inner's target is this map's source.
  AlgebraMap compose(const AlgebraMap& inner) const;

 private:
  FormPtr source_;
  FormPtr target_;
  Matrix matrix_;
};

/// For T with T^t diag(Q1) T = diag(Q2): the algebra map Cl(Q2) -> Cl(Q1) sending
/// e_{j1}...e_{jk} to T(e_{j1})...T(e_{jk}). T is n x n, column j = T(e_j).
/// Throws SingularT, NotEquivalent, DimensionMismatch.
AlgebraMap equivalence_isomorphism(const Matrix& t, FormPtr q1, FormPtr q2);

struct QbarUniquenessReport {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool consistent = false;
  std::size_t nullity = 0;
  bool unique = false;
  /// Gram matrix of the solution (particular solution when not unique).
  Matrix solution;
  bool matches_qbar = false;
  /// Gram matrices spanning the homogeneous solutions (empty when unique).
  std::vector<Matrix> free_directions;
};

inline constexpr int kQbarUniquenessMaxDim = 3;

/// Solves the linear axiom system (unit, left/right adjointness against c, restriction to Q)
/// over symmetric bilinear forms on the algebra. For n = 3 mod 4 these four axioms leave
/// B + t Qbar(omega x, y) free; alpha_invariance adds B(alpha x, alpha y) = B(x, y), which
/// removes it. Throws CapExceeded for n > 3.
QbarUniquenessReport qbar_uniqueness_solve(const FormPtr& form, bool alpha_invariance = false);

}  // namespace cliff
