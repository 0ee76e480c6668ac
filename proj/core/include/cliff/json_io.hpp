#pragma once

#include <nlohmann/json.hpp>

#include "cliff/classify.hpp"
#include "cliff/clifford.hpp"
#include "cliff/matrix.hpp"
#include "cliff/operators.hpp"
#include "cliff/structure.hpp"

namespace cliff {

using Json = nlohmann::ordered_json;

/// Scalars are serialized as their text form so exact values survive round trips.
Json to_json(const FieldElement& x);
Json to_json(const Matrix& m);
Json to_json(const QuadraticForm& form);
Json to_json(const Multivector& x);
Json to_json(const LieSubspace& space, int n);
Json to_json(const CenterDescription& center);
Json to_json(const KillingDiagonal& killing, int n);
Json to_json(const Decomposition& parts);
Json to_json(const ZeroDivisorReport& report);
Json to_json(const IsometryEvidence& evidence);
Json to_json(const ClassificationReport& report);

/// {"n", "diag", "lie_dim", "center", "lie_center", "killing", "decomposition"} for one form.
/// Uses the solve method for centers when n <= 10 and the closed form above that.
Json structure_report(const FormPtr& form);

Matrix matrix_from_json(const Json& j);

}  // namespace cliff
