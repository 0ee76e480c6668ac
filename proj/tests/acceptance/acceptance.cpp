// Acceptance driver: one PASS/FAIL line per criterion, exact arithmetic, pinned time limits.
// Usage: cliff_acceptance [--criterion N]   (N in 1..10; all criteria when omitted)

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cliff/classify.hpp"
#include "cliff/clifford.hpp"
#include "cliff/error.hpp"
#include "cliff/operators.hpp"
#include "cliff/quaternion.hpp"
#include "cliff/sampling.hpp"
#include "cliff/structure.hpp"
#include "oracles.hpp"

namespace {

using namespace cliff;

struct Outcome {
  bool ok = true;
  std::string detail;

  // The message is only formatted on the first failure.
  template <typename... Parts>
  void require(bool condition, Parts&&... what) {
    if (!condition && ok) {
      ok = false;
      std::ostringstream os;
      (os << ... << what);
      detail = os.str();
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

FormPtr form_of(std::vector<FieldElement> diag, FieldSpec spec) {
  return make_form(QuadraticForm(spec, std::move(diag)));
}

// Independent vector form: Q(x, y) = sum_i q_i x_i y_i.
FieldElement q_of(const Multivector& x, const Multivector& y) {
  const QuadraticForm& f = x.form();
  FieldElement sum = FieldElement::zero(f.field());
  for (int i = 1; i <= f.dim(); ++i) {
    const BladeIndex e = BladeIndex::of({i});
    sum += f.q(i) * x[e] * y[e];
  }
  return sum;
}

Outcome dimension_law() {
  Outcome out;
  Sampler s(1001);
  for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(5)}) {
    for (int n = 1; n <= 10; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const FormPtr f = form_of(s.diagonal(n, spec, spec.is_rational()), spec);
        const std::size_t expected = std::size_t{1} << n;
        out.require(f->blade_count() == expected, "blade count at n=", n);
        const std::vector<FieldElement> gram = gram_matrix(*f);
        out.require(gram.size() == expected, "gram size at n=", n);
        for (std::uint32_t i = 0; i < expected && out.ok; ++i) {
          // Diagonal entry through the word oracle: p(e_I c(e_I)).
          const auto [coef, mask] = oracle::blade_product(i, i, *f);
          const int c_sign = involution_sign(Involution::Conjugation, std::popcount(i));
          out.require(mask == 0 && gram[i] == coef * FieldElement(spec, c_sign), "gram entry ", i, " at n=", n);
          out.require(!gram[i].is_zero(), "zero gram entry at n=", n);
          for (std::uint32_t j = 0; j < expected && out.ok; ++j) {
            if (i == j) continue;
            out.require(!blade_product(BladeIndex(i), BladeIndex(j), *f).result.is_scalar(),
                        "off-diagonal gram entry (", i, ",", j, ") at n=", n);
          }
        }
      }
    }
  }
  return out;
}

Outcome anticommutation_and_involutions() {
  Outcome out;
  Sampler s(2002);
  const FieldSpec q = FieldSpec::rational();
  for (int n = 1; n <= 6; ++n) {
    const FormPtr f = form_of(s.diagonal(n, q, true), q);
    for (int trial = 0; trial < 500 && out.ok; ++trial) {
      const Multivector v = s.vector(f), w = s.vector(f);
      out.require(v * w + w * v == Multivector::scalar(f, FieldElement(q, -2) * q_of(v, w)),
                  "anticommutation at n=", n);

      const Multivector x = s.multivector(f), y = s.multivector(f), z = s.multivector(f);
      const auto a = [](const Multivector& m) { return involution(Involution::Alpha, m); };
      const auto t = [](const Multivector& m) { return involution(Involution::Tau, m); };
      const auto c = [](const Multivector& m) { return involution(Involution::Conjugation, m); };
      out.require(a(a(x)) == x && t(t(x)) == x && c(c(x)) == x, "involution squares at n=", n);
      out.require(c(x) == a(t(x)), "c = alpha tau at n=", n);
      out.require(qbar(x * y, z) == qbar(y, c(x) * z), "left adjointness at n=", n);
      out.require(qbar(y * x, z) == qbar(y, z * c(x)), "right adjointness at n=", n);
    }
  }
  return out;
}

Outcome qbar_uniqueness() {
  Outcome out;
  for (const char* text : {"diag:1", "diag:1,-1", "diag:1,1,-1"}) {
    const FormPtr f = make_form(text);
    const QbarUniquenessReport r = qbar_uniqueness_solve(f);
    out.require(r.consistent, text, ": inconsistent system");
    out.require(r.unique && r.matches_qbar,
                text, ": solution space has dimension ", r.nullity, " (rank ", r.rank, " of ", r.unknowns,
                    " unknowns)");
  }
  return out;
}

Outcome zero_divisors() {
  Outcome out;
  const FormPtr ex = make_form("sig:2,1");
  try {
    inverse(parse_multivector("e1 + e3", ex));
    out.require(false, "e1 + e3 inverted over sig:2,1");
  } catch (const Error& e) {
    out.require(e.kind() == ErrorKind::NotInvertible, "unexpected error ", e.what());
  }
  out.require(is_zero_divisor(parse_multivector("e1 + e3", ex)), "e1 + e3 not flagged");

  Sampler s(4004);
  const FieldSpec q = FieldSpec::rational();
  for (int n = 1; n <= 5; ++n) {
    const FormPtr f = form_of(s.diagonal(n, q, true), q);
    const Multivector one = Multivector::scalar(f, 1);
    int found = 0;
    for (int attempt = 0; found < 50 && attempt < 1000; ++attempt) {
      const Multivector a = s.nonzero_multivector(f, 60);
      if (!is_invertible(a)) continue;
      const Multivector b = inverse(a);
      out.require(a * b == one && b * a == one, "two-sided inverse at n=", n);
      ++found;
    }
    out.require(found == 50, "only ", found, " invertible samples at n=", n);
  }
  return out;
}

Outcome centers() {
  Outcome out;
  Sampler s(5005);
  for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (int n = 1; n <= 8; ++n) {
      const FormPtr f = form_of(s.diagonal(n, spec, spec.is_rational()), spec);
      out.require(center(f, Method::Solve).basis == center(f, Method::ClosedForm).basis,
                  "center at n=", n, " over ", spec.to_string());
      out.require(lie_center(f, Method::Solve).blades == lie_center(f, Method::ClosedForm).blades,
                  "Lie center at n=", n, " over ", spec.to_string());
    }
  }
  return out;
}

Outcome killing() {
  Outcome out;
  Sampler s(6006);
  const FieldSpec q = FieldSpec::rational();
  for (int n = 1; n <= 8; ++n) {
    for (const FormPtr& f : {make_form(QuadraticForm::signature(n, 0)), form_of(s.diagonal(n, q, true), q)}) {
      const LieSubspace lie = lie_algebra(*f);
      const KillingDiagonal trace = killing_form(f, KillingMethod::TraceOracle);
      out.require(trace.entries.size() == lie.dim(), "entry count at n=", n);
      const BladeIndex omega = f->omega();
      for (std::size_t k = 0; k < trace.entries.size() && out.ok; ++k) {
        const KillingEntry& e = trace.entries[k];
        // m_I through the word oracle: Lie blades whose two products with e_I differ in sign.
        std::size_t m = 0;
        for (BladeIndex j : lie.blades) {
          const auto ij = oracle::blade_product(e.blade.mask, j.mask, *f);
          const auto ji = oracle::blade_product(j.mask, e.blade.mask, *f);
          if (ij.first == -ji.first) ++m;
        }
        const FieldElement square = oracle::blade_product(e.blade.mask, e.blade.mask, *f).first;
        out.require(e.blade == lie.blades[k], "blade order at n=", n);
        out.require(e.value == FieldElement(q, static_cast<long long>(4 * m)) * square,
                    "B(e_I,e_I) != 4 m e_I^2 for ", format_blade(e.blade, n), " at n=", n);
        const bool zero_expected = n % 4 == 1 && e.blade == omega;
        out.require(e.value.is_zero() == zero_expected, "zero pattern at ", format_blade(e.blade, n));
      }
      if (n <= 6 && out.ok) {
        const Matrix b = killing_matrix(f);
        for (std::size_t r = 0; r < b.rows(); ++r) {
          for (std::size_t c = 0; c < b.cols(); ++c) {
            out.require(r == c ? b(r, c) == trace.entries[r].value : b(r, c).is_zero(),
                        "Killing matrix entry (", r, ",", c, ") at n=", n);
          }
        }
      }
    }
  }
  return out;
}

Outcome decomposition() {
  Outcome out;
  Sampler s(7007);
  const FieldSpec q = FieldSpec::rational();
  for (int n = 1; n <= 7; ++n) {
    for (const FormPtr& f : {make_form(QuadraticForm::signature(n, 0)), form_of(s.diagonal(n, q, true), q)}) {
      const Decomposition d = decompose(f);
      const std::size_t lie_dim = lie_algebra(*f).dim();
      out.require(d.ideal_closed, "ideal not bracket-closed at n=", n);
      out.require(d.killing_nondegenerate, "Killing degenerate on ideal at n=", n);
      out.require(d.center_part.dim() + d.ideal_part.dim() == lie_dim, "dimension split at n=", n);
      out.require((d.center_part.dim() == 1) == (n % 4 == 1) && d.center_part.dim() <= 1,
                  "codimension ", d.center_part.dim(), " at n=", n);
    }
  }
  return out;
}

Outcome definiteness() {
  Outcome out;
  Sampler s(8008);
  const FieldSpec q = FieldSpec::rational();
  for (int n = 1; n <= 8; ++n) {
    std::vector<FieldElement> diag;
    for (int i = 0; i < n; ++i) diag.push_back(FieldElement(q, mpq_class(static_cast<long>(s.uniform(1, 5)), static_cast<long>(s.uniform(1, 3)))));
    for (const FormPtr& f : {make_form(QuadraticForm::signature(n, 0)), form_of(diag, q)}) {
      const DefinitenessReport r = definiteness_report(f);
      const std::size_t expected = lie_algebra(*f).dim() - (n % 4 == 1 ? 1 : 0);
      out.require(r.ideal_dim == expected, "ideal dimension at n=", n);
      out.require(r.killing_negative_definite(), "B not negative on ideal at n=", n);
      out.require(r.qbar_positive_definite(), "Qbar not positive on ideal at n=", n);
    }
  }
  return out;
}

Outcome classification() {
  Outcome out;
  const std::uint64_t dims[] = {1, 3, 6, 10, 16, 28, 56, 120, 256, 528};
  for (int n = 1; n <= 10; ++n) {
    const ClassificationReport r = verify_classification(n);
    out.require(r.dim.got == dims[n - 1] && r.dim.expected == dims[n - 1], "Lie dimension at n=", n);
    out.require(isometry_group_of(n).dimension() == dims[n - 1], "group dimension at n=", n);
    out.require(r.center.ok(), "center dimension at n=", n);
    out.require(r.killing_definite, "Killing definiteness at n=", n);
    out.require(r.pass(), "classification at n=", n);
  }
  return out;
}

Outcome quaternion_bridge() {
  Outcome out;
  const FormPtr f = make_form("diag:1,1");
  const auto e = [&](std::uint32_t m) { return Multivector::blade(f, BladeIndex(m)); };
  const Quaternion units[] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (std::uint32_t a = 0; a < 4; ++a) {
    out.require(cl2_iso(e(a)) == units[a], "basis image of ", format_blade(BladeIndex(a), 2));
    out.require(cl2_iso(involution(Involution::Conjugation, e(a))) == cl2_iso(e(a)).conj(), "c vs conjugation");
    for (std::uint32_t b = 0; b < 4; ++b) {
      out.require(cl2_iso(e(a) * e(b)) == cl2_iso(e(a)) * cl2_iso(e(b)), "product of basis pair ", a, ",", b);
    }
  }
  Sampler s(10010);
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector x = s.multivector(f);
    out.require(cl2_iso(involution(Involution::Conjugation, x)) == cl2_iso(x).conj(), "c vs conjugation");
    const Multivector g = s.isometry(f);
    out.require(is_isometry(g).is_isometry(), "sampled element is not an isometry");
    out.require(cl2_iso(g).norm().is_one(), "isometry image is not a unit quaternion");
  }

  const FieldSpec q = FieldSpec::rational();
  const auto quat = [&] { return Quaternion(s.scalar(q), s.scalar(q), s.scalar(q), s.scalar(q)); };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + trial % 3;
    QuatMatrix a(m), b(m);
    QuatVector x;
    for (std::size_t r = 0; r < m; ++r) {
      x.push_back(quat());
      for (std::size_t c = 0; c < m; ++c) {
        a(r, c) = quat();
        b(r, c) = quat();
      }
    }
    const Quaternion scalar = quat();
    out.require(quat_action(quat_mat_product(a, b), x) == quat_action(a, quat_action(b, x)), "(AB)x = A(Bx)");
    out.require(quat_adjoint(quat_mat_product(a, b)) == quat_mat_product(quat_adjoint(b), quat_adjoint(a)),
                "(AB)* = B*A*");
    QuatVector qx = x, q_ax = quat_action(a, x);
    for (auto& v : qx) v = scalar * v;
    for (auto& v : q_ax) v = scalar * v;
    out.require(quat_action(a, qx) == q_ax, "A(qx) = qA(x)");
    std::vector<QuatVector> basis;
    for (std::size_t r = 0; r < m; ++r) {
      QuatVector u(m);
      for (std::size_t c = 0; c < m; ++c) u[c] = quat();
      basis.push_back(u);
    }
    try {
      out.require(basis_change(quat_mat_product(a, b), basis) ==
                      quat_mat_product(basis_change(a, basis), basis_change(b, basis)),
                  "basis change is not multiplicative");
    } catch (const Error& err) {
      out.require(err.kind() == ErrorKind::SingularBasis, "unexpected error ", err.what());
    }
  }
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {1, "dimension law and diagonal Qbar Gram matrix", 5.0, dimension_law},
      {2, "anticommutation, involutions and adjointness", 10.0, anticommutation_and_involutions},
      {3, "Qbar uniqueness from its axioms", 5.0, qbar_uniqueness},
      {4, "zero divisors and inverses", 20.0, zero_divisors},
      {5, "center and Lie center closed forms", 30.0, centers},
      {6, "Killing form diagonal", 60.0, killing},
      {7, "Lie algebra decomposition", 20.0, decomposition},
      {8, "definiteness for positive definite forms", 10.0, definiteness},
      {9, "classification fingerprint", 60.0, classification},
      {10, "quaternion bridge", 10.0, quaternion_bridge},
  };
  return table;
}

bool run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && seconds > c.limit_seconds) {
    out.ok = false;
    out.detail = "time limit exceeded";
  }
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << seconds
            << " s, limit " << c.limit_seconds << " s)";
  if (!out.ok) std::cout << " - " << out.detail;
  std::cout << '\n';
  return out.ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliff acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const Criterion& c : criteria()) {
    if (only == 0 || c.id == only) all_ok = run(c) && all_ok;
  }
  return all_ok ? 0 : 1;
}
