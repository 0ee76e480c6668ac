#include "cliff/operators.hpp"

#include "cliff/error.hpp"

namespace cliff {

OperatorMatrix left_matrix(const Multivector& a) {
  const QuadraticForm& form = a.form();
  const std::size_t dim = form.blade_count();
  OperatorMatrix m(dim, dim, form.field());
  const std::vector<BladeIndex> support = a.support();
  for (std::uint32_t j = 0; j < dim; ++j) {
    for (BladeIndex i : support) {
      const auto [coef, k] = blade_product(i, BladeIndex(j), form);
      m(k.mask, j) += a[i] * coef;
    }
  }
  return m;
}

OperatorMatrix right_matrix(const Multivector& a) {
  const QuadraticForm& form = a.form();
  const std::size_t dim = form.blade_count();
  OperatorMatrix m(dim, dim, form.field());
  const std::vector<BladeIndex> support = a.support();
  for (std::uint32_t j = 0; j < dim; ++j) {
    for (BladeIndex i : support) {
      const auto [coef, k] = blade_product(BladeIndex(j), i, form);
      m(k.mask, j) += a[i] * coef;
    }
  }
  return m;
}

OperatorMatrix metric_adjoint(const OperatorMatrix& m, const QuadraticForm& form) {
  const std::vector<FieldElement> gram = gram_matrix(form);
  if (m.rows() != gram.size() || m.cols() != gram.size()) {
    throw Error(ErrorKind::DimensionMismatch, "operator does not act on this algebra");
  }
  OperatorMatrix out(m.rows(), m.cols(), m.spec());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const FieldElement inv = gram[r].inv();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(c, r).is_zero()) out(r, c) = inv * m(c, r) * gram[c];
    }
  }
  return out;
}

ZeroDivisorReport zero_divisor_report(const Multivector& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "zero is neither a unit nor a zero divisor");
  ZeroDivisorReport report{determinant(left_matrix(a)), determinant(right_matrix(a)), false};
  report.zero_divisor = report.det_left.is_zero() || report.det_right.is_zero();
  return report;
}

bool is_zero_divisor(const Multivector& a) { return zero_divisor_report(a).zero_divisor; }

bool is_invertible(const Multivector& a) { return !zero_divisor_report(a).zero_divisor; }

Multivector inverse(const Multivector& a) {
  if (a.is_zero()) throw Error(ErrorKind::NotInvertible, "zero element");
  const FieldSpec spec = a.field();
  std::vector<FieldElement> unit(a.size(), FieldElement::zero(spec));
  unit[0] = FieldElement::one(spec);
  auto solution = solve(left_matrix(a), unit);
  if (!solution) throw Error(ErrorKind::NotInvertible, "zero divisor");
  Multivector x = Multivector::from_coeffs(a.form_ptr(), std::move(*solution));
  const Multivector one = Multivector::scalar(a.form_ptr(), 1);
  if (!(multiply(a, x) == one) || !(multiply(x, a) == one)) {
    throw Error(ErrorKind::InternalInconsistency, "right inverse is not a left inverse");
  }
  return x;
}

// ---------------------------------------------------------------------------

AlgebraMap::AlgebraMap(FormPtr source, FormPtr target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.cols() != source_->blade_count() || matrix_.rows() != target_->blade_count()) {
    throw Error(ErrorKind::DimensionMismatch, "algebra map matrix has the wrong shape");
  }
}

Multivector AlgebraMap::operator()(const Multivector& x) const {
  if (x.form_ptr() != source_ && !(x.form() == *source_)) {
    throw Error(ErrorKind::MismatchedForm, "element is not in the source algebra");
  }
  std::vector<FieldElement> out(matrix_.rows(), FieldElement::zero(matrix_.spec()));
  for (BladeIndex j : x.support()) {
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      if (!matrix_(r, j.mask).is_zero()) out[r] += matrix_(r, j.mask) * x[j];
    }
  }
  return Multivector::from_coeffs(target_, std::move(out));
}

Multivector AlgebraMap::image(BladeIndex blade) const {
  return (*this)(Multivector::blade(source_, blade));
}

bool AlgebraMap::is_multiplicative() const {
  if (!(image(BladeIndex{}) == Multivector::scalar(target_, 1))) return false;
  const std::size_t count = source_->blade_count();
  std::vector<Multivector> images;
  images.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) images.push_back(image(BladeIndex(i)));
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = 0; j < count; ++j) {
      const auto [coef, k] = blade_product(BladeIndex(i), BladeIndex(j), *source_);
      if (!(images[k.mask] * coef == multiply(images[i], images[j]))) return false;
    }
  }
  return true;
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& inner) const {
  if (!(*inner.target_ == *source_)) {
    throw Error(ErrorKind::MismatchedForm, "cannot compose: target and source differ");
  }
  return AlgebraMap(inner.source_, target_, matrix_ * inner.matrix_);
}

AlgebraMap equivalence_isomorphism(const Matrix& t, FormPtr q1, FormPtr q2) {
  const int n = q1->dim();
  if (q2->dim() != n || t.rows() != static_cast<std::size_t>(n) || !t.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "T must be n x n for two forms of dimension n");
  }
  if (q1->field() != q2->field() || t.spec() != q1->field()) {
    throw Error(ErrorKind::MixedFieldSpec, "forms and T must share one field");
  }
  if (determinant(t).is_zero()) throw Error(ErrorKind::SingularT, "T is singular");

  const FieldSpec spec = q1->field();
  Matrix g1(n, n, spec);
  Matrix g2(n, n, spec);
  for (int i = 0; i < n; ++i) {
    g1(i, i) = q1->q(i + 1);
    g2(i, i) = q2->q(i + 1);
  }
  if (!(t.transpose() * g1 * t == g2)) {
    throw Error(ErrorKind::NotEquivalent, "T^t diag(Q1) T != diag(Q2)");
  }

  std::vector<Multivector> columns;
  for (int j = 0; j < n; ++j) {
    Multivector v(q1);
    for (int i = 0; i < n; ++i) v.set(BladeIndex(1U << i), t(i, j));
    columns.push_back(std::move(v));
  }
  const std::size_t count = q2->blade_count();
  Matrix m(count, count, spec);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Multivector image = Multivector::scalar(q1, 1);
    for (int j = 0; j < n; ++j) {
      if ((mask >> j) & 1U) image = multiply(image, columns[static_cast<std::size_t>(j)]);
    }
    for (std::size_t r = 0; r < count; ++r) m(r, mask) = image.coeffs()[r];
  }
  return AlgebraMap(std::move(q2), std::move(q1), std::move(m));
}

// ---------------------------------------------------------------------------

QbarUniquenessReport qbar_uniqueness_solve(const FormPtr& form, bool alpha_invariance) {
  const int n = form->dim();
  if (n > kQbarUniquenessMaxDim) {
    throw Error(ErrorKind::CapExceeded, "uniqueness solver supports n <= 3, got n = " + std::to_string(n));
  }
  const FieldSpec spec = form->field();
  const std::size_t count = form->blade_count();

  // Unknown u(I, J) = B(e_I, e_J) for I <= J.
  std::vector<std::size_t> index(count * count);
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      index[i * count + j] = unknowns;
      index[j * count + i] = unknowns;
      ++unknowns;
    }
  }
  auto u = [&](std::uint32_t i, std::uint32_t j) { return index[i * count + j]; };
  const std::size_t rhs = unknowns;

  SparseEchelon system(unknowns + 1, spec);
  std::size_t equations = 0;
  auto add = [&](SparseRow row) {
    ++equations;
    system.insert(std::move(row));
  };

  add({{u(0, 0), FieldElement::one(spec)}, {rhs, FieldElement::one(spec)}});

  const auto conj_sign = [&](BladeIndex b) {
    return FieldElement(spec, involution_sign(Involution::Conjugation, b.grade()));
  };
  for (std::uint32_t i = 0; i < count; ++i) {
    const BladeIndex bi(i);
    const FieldElement ci = conj_sign(bi);
    for (std::uint32_t j = 0; j < count; ++j) {
      const BladeIndex bj(j);
      for (std::uint32_t k = 0; k < count; ++k) {
        const BladeIndex bk(k);
        // B(e_I e_J, e_K) = B(e_J, c(e_I) e_K)
        {
          const auto lhs = blade_product(bi, bj, *form);
          const auto rhs_prod = blade_product(bi, bk, *form);
          add({{u(lhs.result.mask, k), lhs.coef},
               {u(j, rhs_prod.result.mask), -(ci * rhs_prod.coef)}});
        }
        // B(e_J e_I, e_K) = B(e_J, e_K c(e_I))
        {
          const auto lhs = blade_product(bj, bi, *form);
          const auto rhs_prod = blade_product(bk, bi, *form);
          add({{u(lhs.result.mask, k), lhs.coef},
               {u(j, rhs_prod.result.mask), -(ci * rhs_prod.coef)}});
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const FieldElement value = a == b ? form->q(a + 1) : FieldElement::zero(spec);
      SparseRow row{{u(1U << a, 1U << b), FieldElement::one(spec)}};
      if (!value.is_zero()) row.emplace_back(rhs, value);
      add(std::move(row));
    }
  }
  if (alpha_invariance) {
    // B(alpha(e_I), alpha(e_J)) = B(e_I, e_J) forces u(I, J) = 0 across parities.
    for (std::uint32_t i = 0; i < count; ++i) {
      for (std::uint32_t j = i; j < count; ++j) {
        if ((BladeIndex(i).grade() + BladeIndex(j).grade()) % 2 == 1) add({{u(i, j), FieldElement::one(spec)}});
      }
    }
  }

  QbarUniquenessReport report;
  report.unknowns = unknowns;
  report.equations = equations;
  report.rank = system.rank();
  const auto solution = system.solve_affine();
  report.consistent = solution.consistent;
  report.solution = Matrix(count, count, spec);
  if (!solution.consistent) return report;

  report.nullity = solution.directions.size();
  report.unique = report.nullity == 0;
  for (const auto& direction : solution.directions) {
    Matrix gram(count, count, spec);
    for (std::uint32_t i = 0; i < count; ++i) {
      for (std::uint32_t j = 0; j < count; ++j) gram(i, j) = direction[u(i, j)];
    }
    report.free_directions.push_back(std::move(gram));
  }
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = 0; j < count; ++j) report.solution(i, j) = solution.particular[u(i, j)];
  }
  report.matches_qbar = true;
  for (std::uint32_t i = 0; i < count && report.matches_qbar; ++i) {
    for (std::uint32_t j = 0; j < count; ++j) {
      const FieldElement expected =
          qbar(Multivector::blade(form, BladeIndex(i)), Multivector::blade(form, BladeIndex(j)));
      if (!(report.solution(i, j) == expected)) {
        report.matches_qbar = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace cliff
