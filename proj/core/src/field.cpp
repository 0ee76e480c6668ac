#include "cliff/field.hpp"

#include <cctype>
#include <ostream>

#include "cliff/error.hpp"

namespace cliff {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by digits; whitespace allowed after the sign.
mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text = trim(text.substr(1));
  }
  if (!all_digits(text)) {
    throw Error(ErrorKind::SyntaxError, "expected an integer, got '" + std::string(text) + "'");
  }
  mpz_class value(std::string(text), 10);
  return negative ? mpz_class(-value) : value;
}

std::uint64_t parse_u64(std::string_view text) {
  mpz_class v = parse_integer(text);
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw Error(ErrorKind::NonPrimeModulus, "modulus out of range: " + std::string(text));
  }
  return static_cast<std::uint64_t>(std::stoull(v.get_str()));
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint64_t>(std::stoull(r.get_str()));
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) {
    throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
  }
  if (p >= (1ULL << 63U) || !is_prime(p)) {
    throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not an odd prime below 2^63");
  }
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "Q" || text == "QQ") return rational();
  if (text.starts_with("prime:")) return prime(parse_u64(text.substr(6)));
  if (text.starts_with("mod ")) return prime(parse_u64(text.substr(4)));
  if (text.starts_with("F_")) return prime(parse_u64(text.substr(2)));
  if (text.starts_with("F") && text.size() > 1) return prime(parse_u64(text.substr(1)));
  throw Error(ErrorKind::SyntaxError,
              "unknown field '" + std::string(text) + "' (expected rational or prime:<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(p_);
}

FieldElement::FieldElement(FieldSpec spec, long long value) : spec_(spec) {
  if (spec_.is_rational()) {
    q_ = mpz_class(static_cast<signed long>(value));
  } else {
    const auto p = static_cast<long long>(spec_.modulus());
    long long r = value % p;
    if (r < 0) r += p;
    r_ = static_cast<std::uint64_t>(r);
  }
}

FieldElement::FieldElement(FieldSpec spec, const mpq_class& value) : spec_(spec) {
  if (value.get_den() == 0) throw Error(ErrorKind::InversionOfZero, "zero denominator");
  if (spec_.is_rational()) {
    // mpq assignment assumes a positive denominator, so copy the parts before canonicalizing.
    q_.get_num() = value.get_num();
    q_.get_den() = value.get_den();
    q_.canonicalize();
    return;
  }
  const std::uint64_t p = spec_.modulus();
  const std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::InversionOfZero, "denominator vanishes modulo " + std::to_string(p));
  }
  r_ = mul_mod(reduce(value.get_num(), p), pow_mod(den, p - 2, p), p);
}

FieldElement FieldElement::parse(std::string_view text, FieldSpec spec) {
  std::string_view body = trim(text);
  if (auto pos = body.find("mod"); pos != std::string_view::npos) {
    const std::uint64_t p = parse_u64(body.substr(pos + 3));
    if (spec.is_rational() || spec.modulus() != p) {
      throw Error(ErrorKind::MixedFieldSpec,
                  "'" + std::string(body) + "' does not belong to field " + spec.to_string());
    }
    return FieldElement(spec, mpq_class(parse_integer(body.substr(0, pos))));
  }
  mpz_class num;
  mpz_class den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = parse_integer(body.substr(0, slash));
    std::string_view den_text = trim(body.substr(slash + 1));
    if (!all_digits(den_text)) {
      throw Error(ErrorKind::SyntaxError, "bad denominator in '" + std::string(body) + "'");
    }
    den = mpz_class(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorKind::SyntaxError, "zero denominator in '" + std::string(body) + "'");
  } else {
    num = parse_integer(body);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return FieldElement(spec, q);
}

bool FieldElement::is_zero() const noexcept {
  return spec_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool FieldElement::is_one() const noexcept {
  return spec_.is_rational() ? q_ == 1 : r_ == 1;
}

void FieldElement::require_same(const FieldElement& rhs) const {
  if (spec_ != rhs.spec_) {
    throw Error(ErrorKind::MixedFieldSpec,
                "operands from " + spec_.to_string() + " and " + rhs.spec_.to_string());
  }
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorKind::InversionOfZero, "inverse of zero");
  FieldElement out(*this);
  if (spec_.is_rational()) {
    mpq_inv(out.q_.get_mpq_t(), q_.get_mpq_t());
  } else {
    out.r_ = pow_mod(r_, spec_.modulus() - 2, spec_.modulus());
  }
  return out;
}

int FieldElement::sign() const {
  if (!spec_.is_rational()) {
    throw Error(ErrorKind::UnorderedField, "sign is undefined over " + spec_.to_string());
  }
  return sgn(q_);
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  if (spec_.is_rational()) {
    mpq_neg(out.q_.get_mpq_t(), q_.get_mpq_t());
  } else if (r_ != 0) {
    out.r_ = spec_.modulus() - r_;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same(rhs);
  if (spec_.is_rational()) {
    q_ += rhs.q_;
  } else {
    const std::uint64_t p = spec_.modulus();
    r_ = r_ >= p - rhs.r_ ? r_ - (p - rhs.r_) : r_ + rhs.r_;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same(rhs);
  if (spec_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    r_ = r_ >= rhs.r_ ? r_ - rhs.r_ : r_ + (spec_.modulus() - rhs.r_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same(rhs);
  if (spec_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mul_mod(r_, rhs.r_, spec_.modulus());
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same(rhs);
  return *this *= rhs.inv();
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  lhs.require_same(rhs);
  return lhs.spec_.is_rational() ? lhs.q_ == rhs.q_ : lhs.r_ == rhs.r_;
}

std::string FieldElement::to_plain_string() const {
  return spec_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::string FieldElement::to_string() const {
  if (spec_.is_rational()) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(spec_.modulus());
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace cliff
