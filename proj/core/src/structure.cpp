#include "cliff/structure.hpp"

#include <algorithm>
#include <map>

#include "cliff/error.hpp"
#include "cliff/operators.hpp"
#include "cliff/sampling.hpp"

namespace cliff {
namespace {

void require_solve_cap(const QuadraticForm& form) {
  if (form.dim() > kSolveMaxDim) {
    throw Error(ErrorKind::CapExceeded, "solve method supports n <= " + std::to_string(kSolveMaxDim) +
                                            ", got n = " + std::to_string(form.dim()));
  }
}

// Coefficient of e_{I xor K} in [e_I, e_K]; zero when the blades commute.
FieldElement bracket_coef(BladeIndex i, BladeIndex k, const QuadraticForm& form) {
  const auto left = blade_product(i, k, form);
  const auto right = blade_product(k, i, form);
  return left.coef - right.coef;
}

// Adds the rows of x -> [x, e_k], k = 1..n, where x ranges over `variables`
// (column c stands for blade variables[c]).
void add_generator_commutators(SparseEchelon& system, const QuadraticForm& form,
                               const std::vector<BladeIndex>& variables) {
  for (int k = 0; k < form.dim(); ++k) {
    const BladeIndex generator(1U << k);
    std::map<std::uint32_t, SparseRow> rows;
    for (std::size_t c = 0; c < variables.size(); ++c) {
      FieldElement coef = bracket_coef(variables[c], generator, form);
      if (coef.is_zero()) continue;
      rows[variables[c].mask ^ generator.mask].emplace_back(c, std::move(coef));
    }
    for (auto& [target, row] : rows) system.insert(std::move(row));
  }
}

std::vector<BladeIndex> all_blades(const QuadraticForm& form) {
  std::vector<BladeIndex> out;
  out.reserve(form.blade_count());
  for (std::uint32_t i = 0; i < form.blade_count(); ++i) out.emplace_back(i);
  return out;
}

Multivector to_multivector(const FormPtr& form, const std::vector<BladeIndex>& variables,
                           const std::vector<FieldElement>& coords) {
  Multivector x(form);
  for (std::size_t c = 0; c < variables.size(); ++c) {
    if (!coords[c].is_zero()) x.set(variables[c], coords[c]);
  }
  return x;
}

bool preserves_gram(const Matrix& m, const std::vector<FieldElement>& gram) {
  const std::size_t dim = gram.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      FieldElement sum = FieldElement::zero(m.spec());
      for (std::size_t k = 0; k < dim; ++k) {
        if (m(k, i).is_zero() || m(k, j).is_zero()) continue;
        sum += m(k, i) * gram[k] * m(k, j);
      }
      const bool ok = i == j ? sum == gram[i] : sum.is_zero();
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

FieldElement omega_square(const QuadraticForm& form) {
  const long long n = form.dim();
  FieldElement value = form.square_product(form.omega().mask);
  return ((n * (n - 1) / 2) & 1) ? -value : value;
}

CenterDescription center(const FormPtr& form, Method method) {
  CenterDescription out;
  out.closed_form_kind = (form->dim() % 2 == 0) ? CenterKind::ScalarsOnly : CenterKind::ScalarsAndOmega;
  out.omega_square = omega_square(*form);
  if (method == Method::ClosedForm) {
    out.basis.push_back(Multivector::scalar(form, 1));
    if (out.closed_form_kind == CenterKind::ScalarsAndOmega) {
      out.basis.push_back(Multivector::blade(form, form->omega()));
    }
    return out;
  }
  require_solve_cap(*form);
  const std::vector<BladeIndex> variables = all_blades(*form);
  SparseEchelon system(variables.size(), form->field());
  add_generator_commutators(system, *form, variables);
  for (const auto& v : system.kernel()) out.basis.push_back(to_multivector(form, variables, v));
  return out;
}

OmegaCommutationReport omega_commutation_check(const FormPtr& form, std::uint64_t seed,
                                               std::size_t samples) {
  if (form->dim() % 2 != 0) {
    throw Error(ErrorKind::OddDimension, "x omega = omega alpha(x) needs even n");
  }
  const Multivector omega = Multivector::blade(form, form->omega());
  OmegaCommutationReport report;
  auto check = [&](const Multivector& x) {
    ++report.samples;
    if (multiply(x, omega) == multiply(omega, involution(Involution::Alpha, x))) ++report.passed;
  };
  check(Multivector::scalar(form, 1));
  for (int k = 0; k < form->dim(); ++k) check(Multivector::blade(form, BladeIndex(1U << k)));
  Sampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) check(sampler.multivector(form));
  return report;
}

std::optional<std::size_t> LieSubspace::index_of(BladeIndex b) const {
  auto it = std::lower_bound(blades.begin(), blades.end(), b);
  if (it == blades.end() || *it != b) return std::nullopt;
  return static_cast<std::size_t>(it - blades.begin());
}

bool in_lie_algebra(const Multivector& xi) {
  return involution(Involution::Conjugation, xi) == -xi;
}

LieSubspace lie_algebra(const QuadraticForm& form) {
  LieSubspace out;
  for (std::uint32_t i = 0; i < form.blade_count(); ++i) {
    const BladeIndex b(i);
    const int g = b.grade() % 4;
    const bool by_grade = g == 1 || g == 2;
    if (by_grade != (involution_sign(Involution::Conjugation, b.grade()) < 0)) {
      throw Error(ErrorKind::InternalInconsistency, "grade rule and c disagree on " + format_blade(b, form.dim()));
    }
    if (by_grade) out.blades.push_back(b);
  }
  return out;
}

std::vector<Multivector> lie_center_kernel(const FormPtr& form) {
  require_solve_cap(*form);
  const LieSubspace lie = lie_algebra(*form);
  SparseEchelon system(lie.dim(), form->field());
  add_generator_commutators(system, *form, lie.blades);
  std::vector<Multivector> out;
  for (const auto& v : system.kernel()) out.push_back(to_multivector(form, lie.blades, v));
  return out;
}

LieSubspace lie_center(const FormPtr& form, Method method) {
  LieSubspace out;
  if (method == Method::ClosedForm) {
    if (form->dim() % 4 == 1) out.blades.push_back(form->omega());
    return out;
  }
  for (const Multivector& v : lie_center_kernel(form)) {
    const auto support = v.support();
    if (support.size() != 1) {
      throw Error(ErrorKind::InternalInconsistency, "Lie center kernel vector is not a single blade");
    }
    out.blades.push_back(support.front());
  }
  std::sort(out.blades.begin(), out.blades.end());
  return out;
}

std::vector<Multivector> center_lie_intersection(const FormPtr& form) {
  require_solve_cap(*form);
  const std::vector<BladeIndex> variables = all_blades(*form);
  SparseEchelon system(variables.size(), form->field());
  add_generator_commutators(system, *form, variables);
  const FieldElement one = FieldElement::one(form->field());
  for (std::size_t c = 0; c < variables.size(); ++c) {
    if (involution_sign(Involution::Conjugation, variables[c].grade()) > 0) system.insert({{c, one}});
  }
  std::vector<Multivector> out;
  for (const auto& v : system.kernel()) out.push_back(to_multivector(form, variables, v));
  return out;
}

Matrix ad_matrix(const Multivector& xi, const LieSubspace& space) {
  if (!in_lie_algebra(xi)) throw Error(ErrorKind::NotInLieAlgebra, "c(xi) != -xi");
  const QuadraticForm& form = xi.form();
  const std::vector<BladeIndex> support = xi.support();
  Matrix m(space.dim(), space.dim(), form.field());
  for (std::size_t col = 0; col < space.dim(); ++col) {
    const BladeIndex k = space.blades[col];
    for (BladeIndex i : support) {
      const FieldElement coef = bracket_coef(i, k, form);
      if (coef.is_zero()) continue;
      const auto row = space.index_of(BladeIndex(i.mask ^ k.mask));
      if (!row) throw Error(ErrorKind::NotInvariant, "ad xi leaves the subspace");
      m(*row, col) += xi[i] * coef;
    }
  }
  return m;
}

KillingDiagonal killing_form(const FormPtr& form, KillingMethod method) {
  const LieSubspace lie = lie_algebra(*form);
  const FieldSpec spec = form->field();
  KillingDiagonal out;
  out.entries.reserve(lie.dim());
  for (BladeIndex i : lie.blades) {
    KillingEntry entry;
    entry.blade = i;
    entry.square = blade_square(i, *form);
    if (method == KillingMethod::MCount) {
      entry.multiplicity = static_cast<std::size_t>(std::count_if(
          lie.blades.begin(), lie.blades.end(), [&](BladeIndex k) { return blades_anticommute(i, k); }));
      entry.value = FieldElement(spec, 4 * static_cast<long long>(entry.multiplicity)) * entry.square;
    } else {
      const Matrix ad = ad_matrix(Multivector::blade(form, i), lie);
      const Matrix square = ad * ad;
      entry.value = FieldElement::zero(spec);
      for (std::size_t d = 0; d < square.rows(); ++d) {
        if (square(d, d).is_zero()) continue;
        entry.value += square(d, d);
        ++entry.multiplicity;
      }
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

FieldElement killing_value(const Multivector& xi, const Multivector& eta) {
  require_same_form(xi, eta);
  const LieSubspace lie = lie_algebra(xi.form());
  return trace_of_product(ad_matrix(xi, lie), ad_matrix(eta, lie));
}

Matrix killing_matrix(const FormPtr& form) {
  if (form->dim() > kKillingMatrixMaxDim) {
    throw Error(ErrorKind::CapExceeded, "full Killing matrix supports n <= " +
                                            std::to_string(kKillingMatrixMaxDim));
  }
  const LieSubspace lie = lie_algebra(*form);
  std::vector<Matrix> ads;
  ads.reserve(lie.dim());
  for (BladeIndex b : lie.blades) ads.push_back(ad_matrix(Multivector::blade(form, b), lie));
  Matrix out(lie.dim(), lie.dim(), form->field());
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    for (std::size_t j = i; j < lie.dim(); ++j) {
      out(i, j) = trace_of_product(ads[i], ads[j]);
      out(j, i) = out(i, j);
    }
  }
  return out;
}

Decomposition decompose(const FormPtr& form) {
  const LieSubspace lie = lie_algebra(*form);
  Decomposition out;
  out.center_part = form->dim() <= kSolveMaxDim ? lie_center(form, Method::Solve)
                                                : lie_center(form, Method::ClosedForm);
  for (BladeIndex b : lie.blades) {
    if (!out.center_part.contains(b)) out.ideal_part.blades.push_back(b);
  }

  out.ideal_closed = true;
  for (BladeIndex j : lie.blades) {
    for (BladeIndex i : out.ideal_part.blades) {
      ++out.bracket_checks;
      if (!blades_anticommute(j, i)) continue;  // bracket vanishes
      if (!out.ideal_part.contains(BladeIndex(i.mask ^ j.mask))) out.ideal_closed = false;
    }
  }

  const KillingDiagonal killing = killing_form(form, KillingMethod::MCount);
  out.killing_nondegenerate = true;
  for (const KillingEntry& e : killing.entries) {
    if (out.ideal_part.contains(e.blade) && e.value.is_zero()) out.killing_nondegenerate = false;
  }
  return out;
}

DefinitenessReport definiteness_report(const FormPtr& form) {
  if (!form->field().is_rational()) {
    throw Error(ErrorKind::UnorderedField, "definiteness needs an ordered field");
  }
  if (!form->is_positive_definite()) {
    throw Error(ErrorKind::NotDefiniteForm, form->to_string() + " is not positive definite");
  }
  const Decomposition parts = decompose(form);
  const KillingDiagonal killing = killing_form(form, KillingMethod::MCount);
  const std::vector<FieldElement> gram = gram_matrix(*form);
  DefinitenessReport report;
  report.ideal_dim = parts.ideal_part.dim();
  for (const KillingEntry& e : killing.entries) {
    if (!parts.ideal_part.contains(e.blade)) continue;
    if (e.value.sign() < 0) ++report.killing_negative;
    if (gram[e.blade.mask].sign() > 0) ++report.qbar_positive;
  }
  return report;
}

IsometryEvidence is_isometry(const Multivector& g) {
  const Multivector one = Multivector::scalar(g.form_ptr(), 1);
  const Multivector cg = involution(Involution::Conjugation, g);
  IsometryEvidence evidence;
  evidence.algebraic = multiply(g, cg) == one && multiply(cg, g) == one;
  const std::vector<FieldElement> gram = gram_matrix(g.form());
  evidence.left_preserves = preserves_gram(left_matrix(g), gram);
  evidence.right_preserves = preserves_gram(right_matrix(g), gram);
  return evidence;
}

}  // namespace cliff
