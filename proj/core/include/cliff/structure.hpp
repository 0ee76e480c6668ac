#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliff/clifford.hpp"
#include "cliff/matrix.hpp"

namespace cliff {

/// Computation route: exact kernel computation, or the closed-form answer.
enum class Method { Solve, ClosedForm };
enum class KillingMethod { TraceOracle, MCount };

inline constexpr int kSolveMaxDim = 10;
inline constexpr int kKillingMatrixMaxDim = 7;

enum class CenterKind { ScalarsOnly, ScalarsAndOmega };

struct CenterDescription {
  std::vector<Multivector> basis;
  CenterKind closed_form_kind = CenterKind::ScalarsOnly;
  FieldElement omega_square;
};

/// Center of the algebra. Solve: kernel of x -> ([x, e_1], ..., [x, e_n]); capped at n <= 10.
CenterDescription center(const FormPtr& form, Method method);

/// omega^2 = (-1)^{n(n-1)/2} e_1^2 ... e_n^2.
FieldElement omega_square(const QuadraticForm& form);

struct OmegaCommutationReport {
  std::size_t samples = 0;
  std::size_t passed = 0;
  bool ok() const noexcept { return samples == passed; }
};

/// Checks x omega = omega alpha(x) on the generators, the scalar 1 and random samples.
/// Throws OddDimension.
OmegaCommutationReport omega_commutation_check(const FormPtr& form, std::uint64_t seed,
                                               std::size_t samples = 100);

/// Ordered list of blades spanning a subspace.
struct LieSubspace {
  std::vector<BladeIndex> blades;

  std::size_t dim() const noexcept { return blades.size(); }
  std::optional<std::size_t> index_of(BladeIndex b) const;
  bool contains(BladeIndex b) const { return index_of(b).has_value(); }
};

bool in_lie_algebra(const Multivector& xi);

/// Blades with c(e_I) = -e_I, i.e. |I| = 1, 2 mod 4; cross-checked against c applied blade by blade.
LieSubspace lie_algebra(const QuadraticForm& form);

/// Center of the Lie algebra. Solve: kernel of the generators' ad-action restricted to
/// the Lie algebra; capped at n <= 10.
LieSubspace lie_center(const FormPtr& form, Method method);

/// Kernel basis of the Lie-center system, as elements.
std::vector<Multivector> lie_center_kernel(const FormPtr& form);

/// Kernel basis of {x : [x, e_k] = 0 for all k, c(x) = -x}; the intersection of the
/// algebra center with the Lie algebra computed as one system.
std::vector<Multivector> center_lie_intersection(const FormPtr& form);

/// Matrix of eta -> xi eta - eta xi on the subspace basis.
/// Throws NotInLieAlgebra (c(xi) != -xi) and NotInvariant.
Matrix ad_matrix(const Multivector& xi, const LieSubspace& space);

struct KillingEntry {
  BladeIndex blade;
  FieldElement value;
  std::size_t multiplicity = 0;
  FieldElement square;
};

struct KillingDiagonal {
  std::vector<KillingEntry> entries;
};

/// Diagonal of B on the blade basis of the Lie algebra.
/// MCount: B(e_I, e_I) = 4 m_I e_I^2 with m_I the number of anticommuting Lie blades.
/// TraceOracle: trace((ad e_I)^2) from explicit ad matrices.
KillingDiagonal killing_form(const FormPtr& form, KillingMethod method);

/// B(xi, eta) = trace(ad xi o ad eta) on the full Lie algebra.
FieldElement killing_value(const Multivector& xi, const Multivector& eta);

/// Full Gram matrix of B on the Lie blades via the trace oracle; capped at n <= 7.
Matrix killing_matrix(const FormPtr& form);

struct Decomposition {
  LieSubspace center_part;
  LieSubspace ideal_part;
  std::size_t bracket_checks = 0;
  bool ideal_closed = false;
  bool killing_nondegenerate = false;
};

/// Lie algebra = center (+) ideal; ideal = Lie blades other than a central omega.
Decomposition decompose(const FormPtr& form);

struct DefinitenessReport {
  std::size_t ideal_dim = 0;
  std::size_t killing_negative = 0;
  std::size_t qbar_positive = 0;
  bool killing_negative_definite() const noexcept { return killing_negative == ideal_dim; }
  bool qbar_positive_definite() const noexcept { return qbar_positive == ideal_dim; }
};

/// Signs of B and Qbar on the ideal for a positive definite rational form.
/// Throws UnorderedField and NotDefiniteForm.
DefinitenessReport definiteness_report(const FormPtr& form);

struct IsometryEvidence {
  bool algebraic = false;        // g c(g) = c(g) g = 1
  bool left_preserves = false;   // L_g^t Gram L_g = Gram
  bool right_preserves = false;  // R_g^t Gram R_g = Gram
  bool is_isometry() const noexcept { return algebraic; }
  bool consistent() const noexcept { return algebraic == (left_preserves && right_preserves); }
};

IsometryEvidence is_isometry(const Multivector& g);

}  // namespace cliff
