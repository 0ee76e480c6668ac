#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cliff {

enum class FieldKind : std::uint8_t { Rational, PrimeField };

/// Selects the coefficient field: the rationals, or F_p for an odd prime p < 2^63.
class FieldSpec {
 public:
  constexpr FieldSpec() noexcept = default;

  static constexpr FieldSpec rational() noexcept { return FieldSpec{}; }
  /// Throws EvenCharacteristic for p = 2 and NonPrimeModulus for composite or out-of-range p.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "rational", "Q", "prime:p", "Fp", "F_p" and "mod p".
  static FieldSpec parse(std::string_view text);

  constexpr FieldKind kind() const noexcept { return kind_; }
  constexpr bool is_rational() const noexcept { return kind_ == FieldKind::Rational; }
  /// Zero for the rationals.
  constexpr std::uint64_t modulus() const noexcept { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  constexpr FieldSpec(FieldKind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact scalar in canonical form: a reduced fraction with positive denominator,
/// or a residue in [0, p). Equality is representation equality.
class FieldElement {
 public:
  /// Rational zero.
  FieldElement() = default;
  FieldElement(FieldSpec spec, long long value);
  /// For F_p the fraction is mapped to num * den^{-1}; a denominator divisible by p throws.
  FieldElement(FieldSpec spec, const mpq_class& value);

  static FieldElement zero(FieldSpec spec) { return FieldElement(spec, 0); }
  static FieldElement one(FieldSpec spec) { return FieldElement(spec, 1); }
  /// "a", "a/b" (optional sign, whitespace) or "k mod p".
  static FieldElement parse(std::string_view text, FieldSpec spec);

  FieldSpec spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rational value; only meaningful when spec().is_rational().
  const mpq_class& rational() const noexcept { return q_; }
  /// Residue in [0, p); only meaningful for prime fields.
  std::uint64_t residue() const noexcept { return r_; }

  FieldElement inv() const;
  /// -1, 0 or +1. Throws UnorderedField over F_p.
  int sign() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  /// Throws MixedFieldSpec when the operands live in different fields.
  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

  /// "a/b", "a", or "k mod p".
  std::string to_string() const;
  /// Like to_string() but without the " mod p" suffix.
  std::string to_plain_string() const;

 private:
  void require_same(const FieldElement& rhs) const;

  FieldSpec spec_{};
  mpq_class q_{};
  std::uint64_t r_ = 0;
};

inline int sign_of(const FieldElement& x) { return x.sign(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace cliff
