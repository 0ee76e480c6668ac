#include "cliff/quaternion.hpp"

#include <array>
#include <cctype>
#include <ostream>

#include "cliff/error.hpp"

namespace cliff {
namespace {

void require_quaternion_form(const QuadraticForm& form) {
  const bool ok = form.field().is_rational() && form.dim() == 2 && form.q(1).is_one() &&
                  form.q(2).is_one();
  if (!ok) {
    throw Error(ErrorKind::WrongForm, "the quaternion isomorphism needs diag:1,1 over the rationals, got " +
                                          form.to_string() + " over " + form.field().to_string());
  }
}

// Real coordinates of a quaternion vector: component t of entry r at 4 r + t.
void write_coords(const Quaternion& q, std::size_t offset, std::vector<FieldElement>& out) {
  out[offset] = q.a();
  out[offset + 1] = q.b();
  out[offset + 2] = q.c();
  out[offset + 3] = q.d();
}

}  // namespace

Quaternion::Quaternion(FieldSpec spec)
    : a_(FieldElement::zero(spec)), b_(a_), c_(a_), d_(a_) {}

Quaternion::Quaternion(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const FieldSpec spec = a_.spec();
  if (b_.spec() != spec || c_.spec() != spec || d_.spec() != spec) {
    throw Error(ErrorKind::MixedFieldSpec, "quaternion components over different fields");
  }
}

Quaternion Quaternion::scalar(FieldElement a) {
  const FieldElement z = FieldElement::zero(a.spec());
  return Quaternion(std::move(a), z, z, z);
}

Quaternion Quaternion::one(FieldSpec spec) { return scalar(FieldElement::one(spec)); }

Quaternion Quaternion::i(FieldSpec spec) {
  Quaternion q(spec);
  q.b_ = FieldElement::one(spec);
  return q;
}

Quaternion Quaternion::j(FieldSpec spec) {
  Quaternion q(spec);
  q.c_ = FieldElement::one(spec);
  return q;
}

Quaternion Quaternion::k(FieldSpec spec) {
  Quaternion q(spec);
  q.d_ = FieldElement::one(spec);
  return q;
}

Quaternion Quaternion::parse(std::string_view text, FieldSpec spec) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(ErrorKind::SyntaxError, "empty quaternion");
  Quaternion out(spec);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') negative = !negative;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw Error(ErrorKind::SyntaxError, "missing quaternion term in '" + std::string(text) + "'");
    pos = end;

    char unit = '1';
    const char last = term.back();
    if (last == 'i' || last == 'j' || last == 'k') {
      unit = last;
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
    }
    FieldElement coef = term.empty() ? FieldElement::one(spec) : FieldElement::parse(term, spec);
    if (negative) coef = -coef;
    switch (unit) {
      case 'i': out.b_ += coef; break;
      case 'j': out.c_ += coef; break;
      case 'k': out.d_ += coef; break;
      default: out.a_ += coef; break;
    }
  }
  return out;
}

bool Quaternion::is_zero() const {
  return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
}

FieldElement Quaternion::norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

Quaternion Quaternion::conj() const { return Quaternion(a_, -b_, -c_, -d_); }

Quaternion Quaternion::inverse() const {
  const FieldElement n = norm();
  if (n.is_zero()) throw Error(ErrorKind::InversionOfZero, "quaternion of norm zero");
  return n.inv() * conj();
}

Quaternion Quaternion::operator-() const { return Quaternion(-a_, -b_, -c_, -d_); }

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  c_ += rhs.c_;
  d_ += rhs.d_;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  c_ -= rhs.c_;
  d_ -= rhs.d_;
  return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return Quaternion(x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_,
                    x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_,
                    x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_,
                    x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_);
}

Quaternion operator*(const FieldElement& s, const Quaternion& q) {
  return Quaternion(s * q.a_, s * q.b_, s * q.c_, s * q.d_);
}

bool operator==(const Quaternion& lhs, const Quaternion& rhs) {
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
}

std::string Quaternion::to_string() const {
  std::string out = a_.to_plain_string();
  const std::array<std::pair<const FieldElement*, char>, 3> parts{{{&b_, 'i'}, {&c_, 'j'}, {&d_, 'k'}}};
  for (const auto& [value, unit] : parts) {
    std::string digits = value->to_plain_string();
    if (digits.front() != '-') out.push_back('+');
    out += digits;
    out.push_back(unit);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

QuatMatrix::QuatMatrix(std::size_t size, FieldSpec spec)
    : size_(size), spec_(spec), entries_(size * size, Quaternion(spec)) {}

QuatMatrix QuatMatrix::identity(std::size_t size, FieldSpec spec) {
  QuatMatrix m(size, spec);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = Quaternion::one(spec);
  return m;
}

QuatVector quat_action(const QuatMatrix& a, const QuatVector& x) {
  if (x.size() != a.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(x.size()) +
                                                  " for a " + std::to_string(a.size()) + "x" +
                                                  std::to_string(a.size()) + " matrix");
  }
  QuatVector y(a.size(), Quaternion(a.spec()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) y[i] += x[k] * a(i, k);
  }
  return y;
}

QuatMatrix quat_mat_product(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  const std::size_t m = a.size();
  QuatMatrix out(m, a.spec());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) out(i, j) += b(k, j) * a(i, k);
    }
  }
  return out;
}

QuatMatrix quat_adjoint(const QuatMatrix& a) {
  QuatMatrix out(a.size(), a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(j, i).conj();
  }
  return out;
}

QuatMatrix basis_change(const QuatMatrix& a, const std::vector<QuatVector>& basis) {
  const std::size_t m = a.size();
  if (basis.size() != m) throw Error(ErrorKind::DimensionMismatch, "basis size differs from matrix size");
  for (const QuatVector& u : basis) {
    if (u.size() != m) throw Error(ErrorKind::DimensionMismatch, "basis vector of wrong length");
  }
  // Column 4 r + s holds the coordinates of (unit s) u_r, so that coordinates of
  // sum_r b_r u_r are M times the real coordinates of (b_1, ..., b_m).
  const FieldSpec spec = a.spec();
  const std::array<Quaternion, 4> units{Quaternion::one(spec), Quaternion::i(spec), Quaternion::j(spec),
                                        Quaternion::k(spec)};
  Matrix coords(4 * m, 4 * m, spec);
  std::vector<FieldElement> column(4 * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < 4; ++s) {
      for (std::size_t t = 0; t < m; ++t) write_coords(units[s] * basis[r][t], 4 * t, column);
      for (std::size_t row = 0; row < 4 * m; ++row) coords(row, 4 * r + s) = column[row];
    }
  }
  const std::optional<Matrix> solver = inverse(coords);
  if (!solver) throw Error(ErrorKind::SingularBasis, "vectors do not form a basis");

  QuatMatrix out(m, spec);
  std::vector<FieldElement> image(4 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const QuatVector v = quat_action(a, basis[i]);
    for (std::size_t t = 0; t < m; ++t) write_coords(v[t], 4 * t, image);
    for (std::size_t r = 0; r < m; ++r) {
      std::array<FieldElement, 4> part;
      for (std::size_t s = 0; s < 4; ++s) {
        FieldElement sum = FieldElement::zero(spec);
        for (std::size_t col = 0; col < 4 * m; ++col) sum += (*solver)(4 * r + s, col) * image[col];
        part[s] = sum;
      }
      out(r, i) = Quaternion(part[0], part[1], part[2], part[3]);
    }
  }
  return out;
}

Quaternion cl2_iso(const Multivector& x) {
  require_quaternion_form(x.form());
  return Quaternion(x[BladeIndex(0)], x[BladeIndex(1)], x[BladeIndex(2)], x[BladeIndex(3)]);
}

Multivector cl2_iso_inverse(const Quaternion& q, const FormPtr& form) {
  require_quaternion_form(*form);
  Multivector x(form);
  x.set(BladeIndex(0), q.a());
  x.set(BladeIndex(1), q.b());
  x.set(BladeIndex(2), q.c());
  x.set(BladeIndex(3), q.d());
  return x;
}

Matrix cl2_iso_matrix(const FormPtr& form) {
  Matrix out(4, 4, form->field());
  for (std::uint32_t col = 0; col < 4; ++col) {
    const Quaternion q = cl2_iso(Multivector::blade(form, BladeIndex(col)));
    std::vector<FieldElement> coords(4);
    write_coords(q, 0, coords);
    for (std::size_t row = 0; row < 4; ++row) out(row, col) = coords[row];
  }
  return out;
}

}  // namespace cliff
