#include "cliff/clifford.hpp"

#include <algorithm>

#include "cliff/error.hpp"

namespace cliff {

QuadraticForm::QuadraticForm(FieldSpec field, std::vector<FieldElement> diag)
    : field_(field), diag_(std::move(diag)) {
  if (diag_.empty() || diag_.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw Error(ErrorKind::DimensionOutOfRange,
                "form dimension must be in [1, " + std::to_string(kMaxDimension) + "], got " +
                    std::to_string(diag_.size()));
  }
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i].spec() != field_) {
      throw Error(ErrorKind::MixedFieldSpec, "diagonal entry " + std::to_string(i + 1) +
                                                 " is not in " + field_.to_string());
    }
    if (diag_[i].is_zero()) {
      throw Error(ErrorKind::DegenerateForm, "q_" + std::to_string(i + 1) + " is zero");
    }
  }
  const std::size_t count = blade_count();
  square_products_.assign(count, FieldElement::one(field_));
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    square_products_[mask] = square_products_[mask & (mask - 1)] * -diag_[static_cast<std::size_t>(low)];
  }
}

QuadraticForm QuadraticForm::signature(int r, int s, FieldSpec field) {
  if (r < 0 || s < 0) throw Error(ErrorKind::DimensionOutOfRange, "negative signature");
  std::vector<FieldElement> diag;
  for (int i = 0; i < r; ++i) diag.emplace_back(field, 1);
  for (int i = 0; i < s; ++i) diag.emplace_back(field, -1);
  return QuadraticForm(field, std::move(diag));
}

bool QuadraticForm::is_positive_definite() const {
  if (!field_.is_rational()) return false;
  return std::all_of(diag_.begin(), diag_.end(), [](const FieldElement& q) { return q.sign() > 0; });
}

std::string QuadraticForm::to_string() const {
  std::string out = "diag:";
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (i != 0) out += ',';
    out += diag_[i].to_plain_string();
  }
  return out;
}

BladeProductResult blade_product(BladeIndex lhs, BladeIndex rhs, const QuadraticForm& form) {
  if (!form.contains(lhs) || !form.contains(rhs)) {
    throw Error(ErrorKind::IndexOutOfRange, "blade index exceeds form dimension");
  }
  FieldElement coef = form.square_product(lhs.mask & rhs.mask);
  if (reorder_sign(lhs, rhs) < 0) coef = -coef;
  return {std::move(coef), BladeIndex(lhs.mask ^ rhs.mask)};
}

FieldElement blade_square(BladeIndex blade, const QuadraticForm& form) {
  return blade_product(blade, blade, form).coef;
}

// ---------------------------------------------------------------------------

Multivector::Multivector(FormPtr form)
    : form_(std::move(form)), coeffs_(form_->blade_count(), FieldElement::zero(form_->field())) {}

Multivector Multivector::scalar(FormPtr form, const FieldElement& value) {
  Multivector x(std::move(form));
  x.set(BladeIndex{}, value);
  return x;
}

Multivector Multivector::scalar(FormPtr form, long long value) {
  const FieldSpec spec = form->field();
  return scalar(std::move(form), FieldElement(spec, value));
}

Multivector Multivector::blade(FormPtr form, BladeIndex blade) {
  const FieldSpec spec = form->field();
  return Multivector::blade(std::move(form), blade, FieldElement::one(spec));
}

Multivector Multivector::blade(FormPtr form, BladeIndex blade, const FieldElement& coef) {
  Multivector x(std::move(form));
  x.set(blade, coef);
  return x;
}

Multivector Multivector::vector(FormPtr form, std::span<const FieldElement> components) {
  if (components.size() != static_cast<std::size_t>(form->dim())) {
    throw Error(ErrorKind::DimensionMismatch, "vector needs exactly n components");
  }
  Multivector x(std::move(form));
  for (std::size_t i = 0; i < components.size(); ++i) {
    x.set(BladeIndex(1U << i), components[i]);
  }
  return x;
}

Multivector Multivector::from_coeffs(FormPtr form, std::vector<FieldElement> coeffs) {
  Multivector x(std::move(form));
  if (coeffs.size() != x.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector must have length 2^n");
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) x.set(BladeIndex(static_cast<std::uint32_t>(i)), coeffs[i]);
  return x;
}

void Multivector::set(BladeIndex b, FieldElement value) {
  if (!form_->contains(b)) throw Error(ErrorKind::IndexOutOfRange, "blade index exceeds form dimension");
  if (value.spec() != form_->field()) {
    throw Error(ErrorKind::MixedFieldSpec, "coefficient not in " + form_->field().to_string());
  }
  coeffs_[b.mask] = std::move(value);
}

void Multivector::add(BladeIndex b, const FieldElement& value) {
  if (!form_->contains(b)) throw Error(ErrorKind::IndexOutOfRange, "blade index exceeds form dimension");
  coeffs_[b.mask] += value;
}

bool Multivector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

std::vector<BladeIndex> Multivector::support() const {
  std::vector<BladeIndex> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_form(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_form(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

Multivector& Multivector::operator*=(const FieldElement& s) {
  for (auto& c : coeffs_) {
    if (!c.is_zero()) c *= s;
  }
  return *this;
}

bool operator==(const Multivector& a, const Multivector& b) {
  require_same_form(a, b);
  return a.coeffs_ == b.coeffs_;
}

void require_same_form(const Multivector& a, const Multivector& b) {
  if (a.form_ptr() != b.form_ptr() && !(a.form() == b.form())) {
    throw Error(ErrorKind::MismatchedForm,
                "operands over " + a.form().to_string() + " and " + b.form().to_string());
  }
}

Multivector operator*(const Multivector& a, const Multivector& b) { return multiply(a, b); }

Multivector multiply(const Multivector& x, const Multivector& y) {
  require_same_form(x, y);
  const QuadraticForm& form = x.form();
  const std::vector<BladeIndex> right = y.support();
  Multivector out(x.form_ptr());
  std::vector<FieldElement> acc(x.size(), FieldElement::zero(form.field()));
  for (BladeIndex i : x.support()) {
    const FieldElement& xi = x[i];
    for (BladeIndex j : right) {
      FieldElement term = xi * y[j];
      term *= form.square_product(i.mask & j.mask);
      if (reorder_sign(i, j) < 0) {
        acc[i.mask ^ j.mask] -= term;
      } else {
        acc[i.mask ^ j.mask] += term;
      }
    }
  }
  return Multivector::from_coeffs(x.form_ptr(), std::move(acc));
}

Multivector commutator(const Multivector& x, const Multivector& y) {
  return multiply(x, y) - multiply(y, x);
}

Multivector involution(Involution kind, const Multivector& x) {
  Multivector out(x);
  for (BladeIndex b : x.support()) {
    if (involution_sign(kind, b.grade()) < 0) out.set(b, -x[b]);
  }
  return out;
}

FieldElement scalar_part(const Multivector& x) { return x[BladeIndex{}]; }

FieldElement scalar_part_of_product(const Multivector& x, const Multivector& y) {
  require_same_form(x, y);
  // Only e_I e_I contributes to the scalar blade.
  FieldElement sum = FieldElement::zero(x.field());
  for (BladeIndex i : x.support()) {
    if (y[i].is_zero()) continue;
    sum += x[i] * y[i] * blade_square(i, x.form());
  }
  return sum;
}

FieldElement qbar(const Multivector& x, const Multivector& y) {
  return scalar_part_of_product(x, involution(Involution::Conjugation, y));
}

std::vector<FieldElement> gram_matrix(const QuadraticForm& form) {
  std::vector<FieldElement> out;
  out.reserve(form.blade_count());
  for (std::uint32_t mask = 0; mask < form.blade_count(); ++mask) {
    const BladeIndex b(mask);
    FieldElement square = blade_square(b, form);
    out.push_back(involution_sign(Involution::Conjugation, b.grade()) < 0 ? -square : square);
  }
  return out;
}

}  // namespace cliff
