#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cliff/clifford.hpp"

namespace cliff {

/// Seeded generator for randomized property runs. The engine sequence is fixed by
/// the standard and range reduction is done here, so a seed reproduces across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long long uniform(long long lo, long long hi);
  bool coin(int percent_true);

  /// Small rational num/den with |num| <= bound, 1 <= den <= bound; uniform residue over F_p.
  FieldElement scalar(FieldSpec spec, int bound = 4);
  FieldElement nonzero_scalar(FieldSpec spec, int bound = 4);

  /// Each blade is nonzero with probability density_percent.
  Multivector multivector(const FormPtr& form, int density_percent = 100, int bound = 4);
  Multivector nonzero_multivector(const FormPtr& form, int density_percent = 100, int bound = 4);
  Multivector vector(const FormPtr& form, int bound = 4);
  /// Random element of the (-1)-eigenspace of c.
  Multivector lie_element(const FormPtr& form, int bound = 4);

  /// Product of Cayley-parametrised factors a + b e_I (c(e_I) = -e_I, a^2 - b^2 e_I^2 = 1)
  /// and blades with e_I c(e_I) = 1; always satisfies g c(g) = c(g) g = 1.
  Multivector isometry(const FormPtr& form, int factors = 3);

  /// n nonzero diagonal entries; mixed signs when mixed is set (rationals only).
  std::vector<FieldElement> diagonal(int n, FieldSpec spec, bool mixed, int bound = 3);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliff
