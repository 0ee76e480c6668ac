#include "cliff/sampling.hpp"

#include "cliff/error.hpp"

namespace cliff {

long long Sampler::uniform(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(engine_() % span);
}

bool Sampler::coin(int percent_true) { return uniform(0, 99) < percent_true; }

FieldElement Sampler::scalar(FieldSpec spec, int bound) {
  if (!spec.is_rational()) {
    return FieldElement(spec, mpq_class(mpz_class(std::to_string(engine_() % spec.modulus()))));
  }
  const long long num = uniform(-bound, bound);
  const long long den = uniform(1, bound);
  return FieldElement(spec, mpq_class(static_cast<signed long>(num), static_cast<unsigned long>(den)));
}

FieldElement Sampler::nonzero_scalar(FieldSpec spec, int bound) {
  for (;;) {
    FieldElement x = scalar(spec, bound);
    if (!x.is_zero()) return x;
  }
}

Multivector Sampler::multivector(const FormPtr& form, int density_percent, int bound) {
  Multivector x(form);
  for (std::uint32_t i = 0; i < form->blade_count(); ++i) {
    if (coin(density_percent)) x.set(BladeIndex(i), scalar(form->field(), bound));
  }
  return x;
}

Multivector Sampler::nonzero_multivector(const FormPtr& form, int density_percent, int bound) {
  for (;;) {
    Multivector x = multivector(form, density_percent, bound);
    if (!x.is_zero()) return x;
  }
}

Multivector Sampler::vector(const FormPtr& form, int bound) {
  Multivector x(form);
  for (int i = 0; i < form->dim(); ++i) x.set(BladeIndex(1U << i), scalar(form->field(), bound));
  return x;
}

Multivector Sampler::lie_element(const FormPtr& form, int bound) {
  Multivector x(form);
  for (std::uint32_t i = 0; i < form->blade_count(); ++i) {
    const BladeIndex b(i);
    if (involution_sign(Involution::Conjugation, b.grade()) < 0) x.set(b, scalar(form->field(), bound));
  }
  return x;
}

Multivector Sampler::isometry(const FormPtr& form, int factors) {
  const FieldSpec spec = form->field();
  const std::vector<FieldElement> gram = gram_matrix(*form);
  std::vector<BladeIndex> unit_blades;
  std::vector<BladeIndex> lie_blades;
  for (std::uint32_t i = 0; i < form->blade_count(); ++i) {
    const BladeIndex b(i);
    if (gram[i].is_one()) unit_blades.push_back(b);
    if (involution_sign(Involution::Conjugation, b.grade()) < 0) lie_blades.push_back(b);
  }

  Multivector g = Multivector::scalar(form, 1);
  const FieldElement one = FieldElement::one(spec);
  for (int f = 0; f < factors; ++f) {
    if (coin(25) && !unit_blades.empty()) {
      const BladeIndex b = unit_blades[static_cast<std::size_t>(uniform(0, static_cast<long long>(unit_blades.size()) - 1))];
      g = multiply(g, Multivector::blade(form, b));
      continue;
    }
    // a = (1 + d t^2) / (1 - d t^2), b = 2t / (1 - d t^2) satisfies a^2 - d b^2 = 1.
    const BladeIndex b = lie_blades[static_cast<std::size_t>(uniform(0, static_cast<long long>(lie_blades.size()) - 1))];
    const FieldElement d = blade_square(b, *form);
    for (;;) {
      const FieldElement t = nonzero_scalar(spec, 5);
      const FieldElement denom = one - d * t * t;
      if (denom.is_zero()) continue;
      const FieldElement inv = denom.inv();
      Multivector factor = Multivector::scalar(form, (one + d * t * t) * inv);
      factor.set(b, FieldElement(spec, 2) * t * inv);
      g = multiply(g, factor);
      break;
    }
  }
  return g;
}

std::vector<FieldElement> Sampler::diagonal(int n, FieldSpec spec, bool mixed, int bound) {
  std::vector<FieldElement> diag;
  diag.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (spec.is_rational()) {
      FieldElement q(spec, uniform(1, bound));
      if (coin(30)) q /= FieldElement(spec, uniform(1, bound));
      if (mixed && coin(50)) q = -q;
      diag.push_back(std::move(q));
    } else {
      diag.push_back(nonzero_scalar(spec));
    }
  }
  return diag;
}

}  // namespace cliff
