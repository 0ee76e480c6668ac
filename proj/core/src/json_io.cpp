#include "cliff/json_io.hpp"

#include "cliff/error.hpp"

namespace cliff {

Json to_json(const FieldElement& x) { return x.to_plain_string(); }

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"dim", Json::array({m.rows(), m.cols()})},
              {"entries", std::move(entries)},
              {"field", m.spec().to_string()}};
}

Matrix matrix_from_json(const Json& j) {
  try {
    const FieldSpec spec = FieldSpec::parse(j.at("field").get<std::string>());
    const auto rows = j.at("dim").at(0).get<std::size_t>();
    const auto cols = j.at("dim").at(1).get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw Error(ErrorKind::DimensionMismatch, "row count differs from dim");
    Matrix m(rows, cols, spec);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "column count differs from dim");
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = FieldElement::parse(entries[r][c].get<std::string>(), spec);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("matrix JSON: ") + e.what());
  }
}

Json to_json(const QuadraticForm& form) {
  Json diag = Json::array();
  for (const FieldElement& q : form.diag()) diag.push_back(to_json(q));
  return Json{{"n", form.dim()}, {"diag", std::move(diag)}, {"field", form.field().to_string()}};
}

Json to_json(const Multivector& x) { return format_multivector(x); }

Json to_json(const LieSubspace& space, int n) {
  Json blades = Json::array();
  for (BladeIndex b : space.blades) blades.push_back(format_blade(b, n));
  return Json{{"dim", space.dim()}, {"blades", std::move(blades)}};
}

Json to_json(const CenterDescription& center) {
  Json basis = Json::array();
  for (const Multivector& x : center.basis) basis.push_back(to_json(x));
  return Json{{"dim", center.basis.size()},
              {"basis", std::move(basis)},
              {"closed_form", center.closed_form_kind == CenterKind::ScalarsOnly ? "scalars" : "scalars+omega"},
              {"omega_square", to_json(center.omega_square)}};
}

Json to_json(const KillingDiagonal& killing, int n) {
  Json out = Json::array();
  for (const KillingEntry& e : killing.entries) {
    out.push_back(Json{{"blade", format_blade(e.blade, n)},
                       {"m", e.multiplicity},
                       {"square", to_json(e.square)},
                       {"B", to_json(e.value)}});
  }
  return out;
}

Json to_json(const Decomposition& parts) {
  return Json{{"ideal_dim", parts.ideal_part.dim()},
              {"center_dim", parts.center_part.dim()},
              {"bracket_checks", parts.bracket_checks},
              {"ideal_closed", parts.ideal_closed},
              {"killing_nondegenerate", parts.killing_nondegenerate}};
}

Json to_json(const ZeroDivisorReport& report) {
  return Json{{"det_left", to_json(report.det_left)},
              {"det_right", to_json(report.det_right)},
              {"zero_divisor", report.zero_divisor}};
}

Json to_json(const IsometryEvidence& evidence) {
  return Json{{"isometry", evidence.is_isometry()},
              {"algebraic", evidence.algebraic},
              {"left_preserves", evidence.left_preserves},
              {"right_preserves", evidence.right_preserves},
              {"consistent", evidence.consistent()}};
}

Json to_json(const ClassificationReport& report) {
  const auto check = [](const CountCheck& c) { return Json{{"expected", c.expected}, {"got", c.got}}; };
  return Json{{"n", report.record.n},
              {"algebra", report.record.algebra.to_string()},
              {"group", report.record.group.to_string()},
              {"checks",
               Json{{"dim", check(report.dim)},
                    {"center", check(report.center)},
                    {"killing_definite", report.killing_definite}}},
              {"pass", report.pass()},
              {"limitation", ClassificationReport::limitation()}};
}

Json structure_report(const FormPtr& form) {
  const int n = form->dim();
  const Method method = n <= kSolveMaxDim ? Method::Solve : Method::ClosedForm;
  const Decomposition parts = decompose(form);
  Json diag = Json::array();
  for (const FieldElement& q : form->diag()) diag.push_back(to_json(q));
  return Json{{"n", n},
              {"diag", std::move(diag)},
              {"field", form->field().to_string()},
              {"lie_dim", lie_algebra(*form).dim()},
              {"center", to_json(center(form, method))},
              {"lie_center", to_json(lie_center(form, method), n)},
              {"killing", to_json(killing_form(form, KillingMethod::MCount), n)},
              {"decomposition", to_json(parts)}};
}

}  // namespace cliff
