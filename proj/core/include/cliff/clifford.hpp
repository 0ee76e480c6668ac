#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliff/field.hpp"

namespace cliff {

inline constexpr int kMaxDimension = 16;

/// Subset I of {1..n} stored as a bitmask; bit i-1 set iff i is in I.
/// The empty mask is the scalar blade 1.
struct BladeIndex {
  std::uint32_t mask = 0;

  constexpr BladeIndex() noexcept = default;
  constexpr explicit BladeIndex(std::uint32_t m) noexcept : mask(m) {}

  /// From 1-based generator indices, e.g. {1, 3} -> e13.
  static constexpr BladeIndex of(std::initializer_list<int> indices) noexcept {
    std::uint32_t m = 0;
    for (int i : indices) m |= 1U << (i - 1);
    return BladeIndex(m);
  }

  constexpr int grade() const noexcept { return std::popcount(mask); }
  constexpr bool contains(int i) const noexcept { return (mask >> (i - 1)) & 1U; }
  constexpr bool is_scalar() const noexcept { return mask == 0; }

  friend constexpr auto operator<=>(BladeIndex, BladeIndex) = default;
};

/// Diagonal nondegenerate quadratic form Q(e_i, e_i) = q_i on F^n, 1 <= n <= 16.
/// Immutable; precomputes the products of generator squares for every subset.
class QuadraticForm {
 public:
  /// Throws DimensionOutOfRange, DegenerateForm (some q_i = 0) or MixedFieldSpec.
  QuadraticForm(FieldSpec field, std::vector<FieldElement> diag);

  /// r entries +1 followed by s entries -1.
  static QuadraticForm signature(int r, int s, FieldSpec field = FieldSpec::rational());
  /// "diag:1,1,-1" or "sig:r,s".
  static QuadraticForm parse(std::string_view text, FieldSpec field = FieldSpec::rational());

  int dim() const noexcept { return static_cast<int>(diag_.size()); }
  std::size_t blade_count() const noexcept { return std::size_t{1} << diag_.size(); }
  FieldSpec field() const noexcept { return field_; }
  std::span<const FieldElement> diag() const noexcept { return diag_; }
  /// q_i, 1-based.
  const FieldElement& q(int i) const { return diag_.at(static_cast<std::size_t>(i - 1)); }
  /// Product over i in mask of e_i^2 = -q_i.
  const FieldElement& square_product(std::uint32_t mask) const { return square_products_[mask]; }

  bool contains(BladeIndex b) const noexcept { return b.mask < blade_count(); }
  BladeIndex omega() const noexcept { return BladeIndex(static_cast<std::uint32_t>(blade_count() - 1)); }

  /// Rational field and every q_i > 0.
  bool is_positive_definite() const;

  std::string to_string() const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.field_ == b.field_ && a.diag_ == b.diag_;
  }

 private:
  FieldSpec field_;
  std::vector<FieldElement> diag_;
  std::vector<FieldElement> square_products_;
};

using FormPtr = std::shared_ptr<const QuadraticForm>;

inline FormPtr make_form(QuadraticForm form) {
  return std::make_shared<const QuadraticForm>(std::move(form));
}
inline FormPtr make_form(std::string_view text, FieldSpec field = FieldSpec::rational()) {
  return make_form(QuadraticForm::parse(text, field));
}

/// (-1)^t with t the number of pairs (i in I, j in J) with i > j.
constexpr int reorder_sign(BladeIndex lhs, BladeIndex rhs) noexcept {
  int swaps = 0;
  for (std::uint32_t a = lhs.mask >> 1U; a != 0; a >>= 1U) swaps += std::popcount(a & rhs.mask);
  return (swaps & 1) ? -1 : 1;
}

/// e_I e_J = (-1)^{|I||J| - |I n J|} e_J e_I.
constexpr bool blades_anticommute(BladeIndex lhs, BladeIndex rhs) noexcept {
  return ((lhs.grade() * rhs.grade() - std::popcount(lhs.mask & rhs.mask)) & 1) != 0;
}

struct BladeProductResult {
  FieldElement coef;  // never zero
  BladeIndex result;
};

/// e_I * e_J = coef * e_{I xor J}. Throws IndexOutOfRange for masks outside the form.
BladeProductResult blade_product(BladeIndex lhs, BladeIndex rhs, const QuadraticForm& form);

/// e_I^2, a nonzero scalar.
FieldElement blade_square(BladeIndex blade, const QuadraticForm& form);

/// Dense coefficient vector of length 2^n over the blade basis of one form.
class Multivector {
 public:
  explicit Multivector(FormPtr form);

  static Multivector scalar(FormPtr form, const FieldElement& value);
  static Multivector scalar(FormPtr form, long long value);
  static Multivector blade(FormPtr form, BladeIndex blade);
  static Multivector blade(FormPtr form, BladeIndex blade, const FieldElement& coef);
  /// Grade-1 element sum_i v_i e_i.
  static Multivector vector(FormPtr form, std::span<const FieldElement> components);
  static Multivector from_coeffs(FormPtr form, std::vector<FieldElement> coeffs);

  const QuadraticForm& form() const noexcept { return *form_; }
  const FormPtr& form_ptr() const noexcept { return form_; }
  FieldSpec field() const noexcept { return form_->field(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  const FieldElement& operator[](BladeIndex b) const { return coeffs_.at(b.mask); }
  void set(BladeIndex b, FieldElement value);
  void add(BladeIndex b, const FieldElement& value);

  bool is_zero() const;
  /// Blades with nonzero coefficient, ascending.
  std::vector<BladeIndex> support() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(const FieldElement& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const FieldElement& s) { return a *= s; }
  friend Multivector operator*(const FieldElement& s, Multivector a) { return a *= s; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  /// Throws MismatchedForm across forms.
  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  FormPtr form_;
  std::vector<FieldElement> coeffs_;
};

/// Throws MismatchedForm unless both live over the same quadratic form.
void require_same_form(const Multivector& a, const Multivector& b);

Multivector multiply(const Multivector& x, const Multivector& y);
/// xy - yx.
Multivector commutator(const Multivector& x, const Multivector& y);

enum class Involution { Alpha, Tau, Conjugation };

/// Sign by which an involution multiplies a blade of the given grade.
constexpr int involution_sign(Involution kind, int grade) noexcept {
  switch (kind) {
    case Involution::Alpha: return (grade & 1) ? -1 : 1;
    case Involution::Tau: return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
    case Involution::Conjugation: return ((grade * (grade + 1) / 2) & 1) ? -1 : 1;
  }
  return 1;
}

Multivector involution(Involution kind, const Multivector& x);

/// p(x): the coefficient of the scalar blade.
FieldElement scalar_part(const Multivector& x);
/// p(x * y) without forming the full product.
FieldElement scalar_part_of_product(const Multivector& x, const Multivector& y);

/// Qbar(x, y) = p(x * c(y)).
FieldElement qbar(const Multivector& x, const Multivector& y);

/// Diagonal of the Qbar Gram matrix in blade order: Qbar(e_I, e_I) for every I.
std::vector<FieldElement> gram_matrix(const QuadraticForm& form);

/// Grammar: terms "[coef *] blade" joined by + / -, blade "1" | "e13" | "e{1,12}".
/// Throws SyntaxError or IndexOutOfRange.
Multivector parse_multivector(std::string_view text, FormPtr form);
std::string format_multivector(const Multivector& x);
std::string format_blade(BladeIndex blade, int n);

Involution parse_involution(std::string_view name);
std::string_view involution_name(Involution kind) noexcept;

}  // namespace cliff
