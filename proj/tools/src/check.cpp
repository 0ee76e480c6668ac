#include "cliff_tools/check.hpp"

#include <functional>
#include <optional>

#include "cliff/error.hpp"
#include "cliff/operators.hpp"
#include "cliff/quaternion.hpp"
#include "cliff/sampling.hpp"
#include "cliff/structure.hpp"

namespace cliff::tools {
namespace {

constexpr int kDenseOperatorMaxDim = 6;
constexpr int kKillingTraceMaxDim = 8;

Multivector one_of(const FormPtr& form) { return Multivector::scalar(form, 1); }

// Span equality through ranks: rank(a) = rank(b) = rank(a u b).
bool spans_equal(const std::vector<Multivector>& a, const std::vector<Multivector>& b, const QuadraticForm& form) {
  auto rank_of = [&](std::initializer_list<const std::vector<Multivector>*> parts) {
    SparseEchelon echelon(form.blade_count(), form.field());
    for (const auto* part : parts) {
      for (const Multivector& x : *part) {
        SparseRow row;
        for (BladeIndex blade : x.support()) row.emplace_back(blade.mask, x[blade]);
        echelon.insert(std::move(row));
      }
    }
    return echelon.rank();
  };
  const std::size_t ra = rank_of({&a});
  return ra == rank_of({&b}) && ra == rank_of({&a, &b});
}

std::vector<Multivector> as_elements(const LieSubspace& space, const FormPtr& form) {
  std::vector<Multivector> out;
  for (BladeIndex b : space.blades) out.push_back(Multivector::blade(form, b));
  return out;
}

Quaternion random_quaternion(Sampler& s) {
  const FieldSpec q = FieldSpec::rational();
  return Quaternion(s.scalar(q), s.scalar(q), s.scalar(q), s.scalar(q));
}

QuatMatrix random_quat_matrix(Sampler& s, std::size_t m) {
  QuatMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = random_quaternion(s);
  }
  return a;
}

QuatVector random_quat_vector(Sampler& s, std::size_t m) {
  QuatVector x;
  for (std::size_t i = 0; i < m; ++i) x.push_back(random_quaternion(s));
  return x;
}

class Suite {
 public:
  explicit Suite(const CheckConfig& config) : config_(config), form_(config.form), sampler_(config.seed) {}

  void run(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult result;
    result.name = name;
    try {
      body(result);
    } catch (const Error& e) {
      result.total = std::max(result.total, result.passed + 1);
      result.note = std::string(e.name()) + ": " + e.what();
    }
    results_.push_back(std::move(result));
  }

  void skip(const std::string& name, const std::string& why) {
    CheckResult result;
    result.name = name;
    result.skipped = true;
    result.note = why;
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> all();

 private:
  static void tally(CheckResult& r, bool ok) {
    ++r.total;
    if (ok) ++r.passed;
  }

  int n() const { return form_->dim(); }
  bool rational() const { return form_->field().is_rational(); }

  const CheckConfig& config_;
  FormPtr form_;
  Sampler sampler_;
  std::vector<CheckResult> results_;
};

std::vector<CheckResult> Suite::all() {
  const FieldSpec spec = form_->field();
  const std::size_t samples = config_.samples;

  run("field axioms", [&](CheckResult& r) {
    for (std::size_t s = 0; s < samples; ++s) {
      const FieldElement a = sampler_.scalar(spec), b = sampler_.scalar(spec), c = sampler_.scalar(spec);
      bool ok = (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c && a * b == b * a &&
                (a + (-a)).is_zero();
      if (!a.is_zero()) ok = ok && (a * a.inv()).is_one();
      if (spec.is_rational()) ok = ok && sign_of(a * a) >= 0 && sign_of(-a) == -sign_of(a);
      tally(r, ok);
    }
  });

  run("anticommutation on vectors", [&](CheckResult& r) {
    for (std::size_t s = 0; s < samples; ++s) {
      const Multivector x = sampler_.vector(form_), y = sampler_.vector(form_);
      FieldElement q = FieldElement::zero(spec);
      for (int i = 1; i <= n(); ++i) {
        const BladeIndex e(1U << (i - 1));
        q += x[e] * y[e] * form_->q(i);
      }
      tally(r, x * y + y * x == Multivector::scalar(form_, FieldElement(spec, -2) * q));
    }
  });

  run("involution laws", [&](CheckResult& r) {
    for (std::size_t s = 0; s < samples; ++s) {
      const Multivector x = sampler_.multivector(form_, 60), y = sampler_.multivector(form_, 60);
      const auto a = [](const Multivector& v) { return involution(Involution::Alpha, v); };
      const auto t = [](const Multivector& v) { return involution(Involution::Tau, v); };
      const auto c = [](const Multivector& v) { return involution(Involution::Conjugation, v); };
      const Multivector xy = x * y;
      tally(r, a(a(x)) == x && t(t(x)) == x && c(c(x)) == x && c(x) == a(t(x)) && a(xy) == a(x) * a(y) &&
                   t(xy) == t(y) * t(x) && c(xy) == c(y) * c(x));
    }
  });

  run("qbar adjointness and symmetry", [&](CheckResult& r) {
    for (std::size_t s = 0; s < samples; ++s) {
      const Multivector x = sampler_.multivector(form_, 60), y = sampler_.multivector(form_, 60),
                        z = sampler_.multivector(form_, 60);
      const Multivector cx = involution(Involution::Conjugation, x);
      tally(r, qbar(x * y, z) == qbar(y, cx * z) && qbar(y * x, z) == qbar(y, z * cx) && qbar(x, y) == qbar(y, x));
    }
  });

  if (n() <= kDenseOperatorMaxDim) {
    run("qbar gram diagonal", [&](CheckResult& r) {
      const std::vector<FieldElement> gram = gram_matrix(*form_);
      for (std::uint32_t i = 0; i < form_->blade_count(); ++i) {
        const Multivector ei = Multivector::blade(form_, BladeIndex(i));
        bool ok = !gram[i].is_zero() && qbar(ei, ei) == gram[i];
        for (std::uint32_t j = 0; j < form_->blade_count() && ok; ++j) {
          if (j != i) ok = qbar(ei, Multivector::blade(form_, BladeIndex(j))).is_zero();
        }
        tally(r, ok);
      }
    });
    run("inverse", [&](CheckResult& r) {
      for (std::size_t s = 0; s < samples / 2 + 1; ++s) {
        const Multivector x = sampler_.nonzero_multivector(form_, 50);
        if (is_invertible(x)) {
          const Multivector inv = inverse(x);
          tally(r, x * inv == one_of(form_) && inv * x == one_of(form_));
        } else {
          try {
            inverse(x);
            tally(r, false);
          } catch (const Error& e) {
            tally(r, e.kind() == ErrorKind::NotInvertible);
          }
        }
      }
    });
    run("equivalence isomorphism", [&](CheckResult& r) {
      for (std::size_t s = 0; s < 3; ++s) {
        Matrix t(n(), n(), spec);
        std::vector<FieldElement> diag2;
        for (int i = 0; i < n(); ++i) {
          const FieldElement d = sampler_.nonzero_scalar(spec);
          t(i, i) = d;
          diag2.push_back(form_->q(i + 1) * d * d);
        }
        const FormPtr q2 = make_form(QuadraticForm(spec, diag2));
        tally(r, equivalence_isomorphism(t, form_, q2).is_multiplicative());
      }
    });
    run("isometry sampling", [&](CheckResult& r) {
      for (std::size_t s = 0; s < samples / 2 + 1; ++s) {
        const IsometryEvidence e = is_isometry(sampler_.isometry(form_));
        tally(r, e.is_isometry() && e.consistent());
      }
    });
  } else {
    const std::string why = "dense operator checks run for n <= " + std::to_string(kDenseOperatorMaxDim);
    skip("qbar gram diagonal", why);
    skip("inverse", why);
    skip("equivalence isomorphism", why);
    skip("isometry sampling", why);
  }

  if (n() <= kQbarUniquenessMaxDim) {
    run("qbar uniqueness", [&](CheckResult& r) {
      const QbarUniquenessReport rep = qbar_uniqueness_solve(form_);
      if (n() % 4 == 3) {
        // One free direction, proportional to Qbar(omega x, y).
        bool ok = rep.consistent && rep.nullity == 1 && rep.matches_qbar;
        if (ok) {
          const Multivector omega = Multivector::blade(form_, form_->omega());
          const Matrix& d = rep.free_directions.front();
          std::optional<FieldElement> ratio;
          for (std::uint32_t i = 0; i < form_->blade_count() && ok; ++i) {
            const Multivector ei = Multivector::blade(form_, BladeIndex(i));
            for (std::uint32_t j = 0; j < form_->blade_count() && ok; ++j) {
              const FieldElement expected = qbar(omega * ei, Multivector::blade(form_, BladeIndex(j)));
              if (expected.is_zero()) {
                ok = d(i, j).is_zero();
              } else if (!ratio) {
                ratio = d(i, j) / expected;
                ok = !ratio->is_zero();
              } else {
                ok = d(i, j) == *ratio * expected;
              }
            }
          }
        }
        tally(r, ok);
      } else {
        tally(r, rep.consistent && rep.unique && rep.matches_qbar);
      }
      const QbarUniquenessReport strict = qbar_uniqueness_solve(form_, true);
      tally(r, strict.consistent && strict.unique && strict.matches_qbar);
    });
  } else {
    skip("qbar uniqueness", "axiom system is solved for n <= " + std::to_string(kQbarUniquenessMaxDim));
  }

  if (n() <= std::min(config_.max_n, kSolveMaxDim)) {
    run("center solve = closed form", [&](CheckResult& r) {
      tally(r, spans_equal(center(form_, Method::Solve).basis, center(form_, Method::ClosedForm).basis, *form_));
    });
    run("lie center solve = closed form", [&](CheckResult& r) {
      tally(r, lie_center(form_, Method::Solve).blades == lie_center(form_, Method::ClosedForm).blades);
    });
    run("center meets lie algebra", [&](CheckResult& r) {
      tally(r, spans_equal(center_lie_intersection(form_), as_elements(lie_center(form_, Method::ClosedForm), form_),
                           *form_));
    });
  } else {
    const std::string why = "solve method runs for n <= " + std::to_string(std::min(config_.max_n, kSolveMaxDim));
    skip("center solve = closed form", why);
    skip("lie center solve = closed form", why);
    skip("center meets lie algebra", why);
  }

  if (n() % 2 == 0) {
    run("omega commutation", [&](CheckResult& r) {
      const OmegaCommutationReport rep = omega_commutation_check(form_, config_.seed, samples);
      r.total = rep.samples;
      r.passed = rep.passed;
    });
  } else {
    skip("omega commutation", "omega is central for odd n");
  }

  if (n() <= kKillingTraceMaxDim) {
    run("killing trace = 4 m e^2", [&](CheckResult& r) {
      const KillingDiagonal trace = killing_form(form_, KillingMethod::TraceOracle);
      const KillingDiagonal count = killing_form(form_, KillingMethod::MCount);
      for (std::size_t i = 0; i < trace.entries.size(); ++i) {
        tally(r, trace.entries[i].blade == count.entries[i].blade && trace.entries[i].value == count.entries[i].value);
      }
    });
  } else {
    skip("killing trace = 4 m e^2", "trace oracle runs for n <= " + std::to_string(kKillingTraceMaxDim));
  }
  if (n() <= kKillingMatrixMaxDim) {
    run("killing off-diagonal", [&](CheckResult& r) {
      const Matrix b = killing_matrix(form_);
      for (std::size_t i = 0; i < b.rows(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < b.cols(); ++j) ok = ok && (i == j || b(i, j).is_zero());
        tally(r, ok);
      }
    });
  } else {
    skip("killing off-diagonal", "full matrix runs for n <= " + std::to_string(kKillingMatrixMaxDim));
  }

  run("decomposition", [&](CheckResult& r) {
    const Decomposition parts = decompose(form_);
    const std::size_t codim = parts.center_part.dim();
    tally(r, parts.ideal_closed);
    tally(r, codim == (n() % 4 == 1 ? 1U : 0U));
    if (rational()) tally(r, parts.killing_nondegenerate);
  });

  if (rational() && form_->is_positive_definite()) {
    run("definiteness", [&](CheckResult& r) {
      const DefinitenessReport rep = definiteness_report(form_);
      tally(r, rep.killing_negative_definite());
      tally(r, rep.qbar_positive_definite());
    });
  } else {
    skip("definiteness", "needs a positive definite form over the rationals");
  }

  run("quaternion matrix laws", [&](CheckResult& r) {
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t m = 1 + s % 3;
      const QuatMatrix a = random_quat_matrix(sampler_, m), b = random_quat_matrix(sampler_, m);
      const QuatVector x = random_quat_vector(sampler_, m);
      const Quaternion q = random_quaternion(sampler_);
      QuatVector qx = x;
      for (Quaternion& v : qx) v = q * v;
      QuatVector q_ax = quat_action(a, x);
      for (Quaternion& v : q_ax) v = q * v;
      const QuatMatrix ab = quat_mat_product(a, b);
      bool ok = quat_action(ab, x) == quat_action(a, quat_action(b, x)) && quat_action(a, qx) == q_ax &&
                quat_adjoint(ab) == quat_mat_product(quat_adjoint(b), quat_adjoint(a)) &&
                quat_adjoint(quat_adjoint(a)) == a;
      std::vector<QuatVector> basis;
      for (std::size_t i = 0; i < m; ++i) basis.push_back(random_quat_vector(sampler_, m));
      try {
        ok = ok && basis_change(ab, basis) == quat_mat_product(basis_change(a, basis), basis_change(b, basis));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularBasis) throw;
      }
      tally(r, ok);
    }
  });

  const bool quaternion_form = rational() && n() == 2 && form_->q(1).is_one() && form_->q(2).is_one();
  if (quaternion_form) {
    run("quaternion isomorphism", [&](CheckResult& r) {
      for (std::uint32_t i = 0; i < 4; ++i) {
        const Multivector ei = Multivector::blade(form_, BladeIndex(i));
        tally(r, cl2_iso(involution(Involution::Conjugation, ei)) == cl2_iso(ei).conj());
        for (std::uint32_t j = 0; j < 4; ++j) {
          const Multivector ej = Multivector::blade(form_, BladeIndex(j));
          tally(r, cl2_iso(ei * ej) == cl2_iso(ei) * cl2_iso(ej));
        }
      }
      for (std::size_t s = 0; s < samples; ++s) {
        tally(r, cl2_iso(sampler_.isometry(form_)).norm().is_one());
      }
    });
  } else {
    skip("quaternion isomorphism", "needs diag:1,1 over the rationals");
  }
  return std::move(results_);
}

}  // namespace

std::vector<CheckResult> run_check_suite(const CheckConfig& config) { return Suite(config).all(); }

}  // namespace cliff::tools
