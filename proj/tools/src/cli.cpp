#include "cliff_tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "cliff/classify.hpp"
#include "cliff/error.hpp"
#include "cliff/json_io.hpp"
#include "cliff/quaternion.hpp"
#include "cliff_tools/check.hpp"

namespace cliff::tools {
namespace {

constexpr std::string_view kGrammar = R"(forms:        diag:q1,...,qn | sig:r,s            (1 <= n <= 16)
fields:       rational | prime:p                  (p an odd prime)
multivectors: terms "[coef*]blade" joined by + and -, e.g. "2*e13 - 1/2*e2 + 3"
              blade "1", "e13" (digits, n <= 9) or "e{1,12}"
              a literal starting with '-' must follow "--")";

struct Options {
  std::string form = "diag:1,1";
  std::string field = "rational";
  std::string format = "text";
  std::uint64_t seed = 1;
  int max_n = kSolveMaxDim;

  std::vector<std::string> literals;
  std::string involution_kind;
  std::string method;
  std::string element;
  std::string ad;
  bool matrices = false;
  bool matrix = false;
  std::optional<int> n;
  std::size_t samples = 50;
};

bool json_output(const Options& o) { return o.format == "json"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

FormPtr load_form(const Options& o) {
  return make_form(o.form, FieldSpec::parse(o.field));
}

void require_cap(const FormPtr& form, const Options& o) {
  if (form->dim() > o.max_n) {
    throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(form->dim()) + " exceeds --max-n " +
                                            std::to_string(o.max_n));
  }
}

Method parse_method(const std::string& s) {
  if (s.empty() || s == "solve") return Method::Solve;
  if (s == "closed" || s == "closed_form") return Method::ClosedForm;
  throw CLI::ValidationError("--method", "expected solve or closed, got '" + s + "'");
}

int cmd_info(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  const std::vector<FieldElement> gram = gram_matrix(*form);
  const FieldElement w2 = omega_square(*form);
  if (json_output(o)) {
    Json j = to_json(*form);
    j["blades"] = form->blade_count();
    Json g = Json::array();
    for (const auto& x : gram) g.push_back(to_json(x));
    j["gram"] = std::move(g);
    j["omega"] = format_blade(form->omega(), form->dim());
    j["omega_square"] = to_json(w2);
    emit(out, j);
    return 0;
  }
  out << "form " << form->to_string() << " over " << form->field().to_string() << '\n'
      << "n = " << form->dim() << ", " << form->blade_count() << " blades\n"
      << "omega = " << format_blade(form->omega(), form->dim()) << ", omega^2 = " << w2.to_plain_string() << '\n'
      << "gram:";
  for (const auto& x : gram) out << ' ' << x.to_plain_string();
  out << '\n';
  return 0;
}

int cmd_product(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  const Multivector x = parse_multivector(o.literals.at(0), form);
  const Multivector y = parse_multivector(o.literals.at(1), form);
  const Multivector xy = multiply(x, y);
  if (!json_output(o)) {
    out << format_multivector(xy) << '\n';
    return 0;
  }
  Json j{{"product", to_json(xy)}, {"scalar_part", to_json(scalar_part(xy))}, {"qbar", to_json(qbar(x, y))}};
  const auto sx = x.support(), sy = y.support();
  if (sx.size() == 1 && sy.size() == 1) {
    const BladeProductResult r = blade_product(sx[0], sy[0], *form);
    j["blade_product"] = Json{{"coef", to_json(r.coef)}, {"blade", format_blade(r.result, form->dim())}};
  }
  emit(out, j);
  return 0;
}

int cmd_involute(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  const Involution kind = parse_involution(o.involution_kind);
  const Multivector x = parse_multivector(o.literals.at(0), form);
  const Multivector y = involution(kind, x);
  if (json_output(o)) {
    emit(out, Json{{"involution", involution_name(kind)}, {"input", to_json(x)}, {"result", to_json(y)}});
  } else {
    out << format_multivector(y) << '\n';
  }
  return 0;
}

int cmd_invert(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  const Multivector a = parse_multivector(o.literals.at(0), form);
  const ZeroDivisorReport report = zero_divisor_report(a);
  if (report.zero_divisor) throw Error(ErrorKind::NotInvertible, "zero divisor");
  const Multivector inv = inverse(a);
  if (!json_output(o)) {
    out << format_multivector(inv) << '\n';
    return 0;
  }
  Json j{{"inverse", to_json(inv)}, {"determinants", to_json(report)}};
  if (o.matrices) {
    j["left"] = to_json(left_matrix(a));
    j["right"] = to_json(right_matrix(a));
  }
  emit(out, j);
  return 0;
}

int cmd_center(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  const Method method = parse_method(o.method);
  if (method == Method::Solve) require_cap(form, o);
  const CenterDescription c = center(form, method);
  std::optional<OmegaCommutationReport> commutation;
  if (form->dim() % 2 == 0) commutation = omega_commutation_check(form, o.seed, o.samples);
  if (json_output(o)) {
    Json j = to_json(c);
    if (commutation) {
      j["omega_commutation"] = Json{{"samples", commutation->samples}, {"passed", commutation->passed}};
    }
    emit(out, j);
    return 0;
  }
  out << "center (dim " << c.basis.size() << "):";
  for (const auto& x : c.basis) out << ' ' << format_multivector(x);
  out << "\nomega^2 = " << c.omega_square.to_plain_string() << '\n';
  if (commutation) {
    out << "x omega = omega alpha(x): " << commutation->passed << '/' << commutation->samples << '\n';
  }
  return 0;
}

int cmd_lie(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  const Method method = parse_method(o.method);
  if (method == Method::Solve) require_cap(form, o);
  const LieSubspace lie = lie_algebra(*form);
  const LieSubspace z = lie_center(form, method);
  const int n = form->dim();
  Json j{{"lie", to_json(lie, n)}, {"lie_center", to_json(z, n)}};
  if (!o.element.empty()) {
    j["in_lie_algebra"] = in_lie_algebra(parse_multivector(o.element, form));
  }
  if (!o.ad.empty()) j["ad"] = to_json(ad_matrix(parse_multivector(o.ad, form), lie));
  if (json_output(o)) {
    emit(out, j);
    return 0;
  }
  out << "lie algebra dim " << lie.dim() << '\n' << "lie center dim " << z.dim();
  for (BladeIndex b : z.blades) out << ' ' << format_blade(b, n);
  out << '\n';
  if (j.contains("in_lie_algebra")) out << "in lie algebra: " << (j["in_lie_algebra"].get<bool>() ? "yes" : "no") << '\n';
  if (j.contains("ad")) {
    for (const auto& row : j["ad"]["entries"]) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c].get<std::string>();
      out << '\n';
    }
  }
  return 0;
}

int cmd_killing(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  KillingMethod method = KillingMethod::MCount;
  if (o.method == "trace") {
    method = KillingMethod::TraceOracle;
  } else if (!o.method.empty() && o.method != "mcount") {
    throw CLI::ValidationError("--method", "expected trace or mcount, got '" + o.method + "'");
  }
  const KillingDiagonal diag = killing_form(form, method);
  if (json_output(o)) {
    Json j{{"n", form->dim()}, {"killing", to_json(diag, form->dim())}};
    if (o.matrix) j["matrix"] = to_json(killing_matrix(form));
    emit(out, j);
    return 0;
  }
  for (const KillingEntry& e : diag.entries) {
    out << format_blade(e.blade, form->dim()) << "  m=" << e.multiplicity << "  e^2=" << e.square.to_plain_string()
        << "  B=" << e.value.to_plain_string() << '\n';
  }
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  require_cap(form, o);
  const Decomposition parts = decompose(form);
  std::optional<DefinitenessReport> definiteness;
  if (form->field().is_rational() && form->is_positive_definite()) definiteness = definiteness_report(form);
  if (json_output(o)) {
    Json j = structure_report(form);
    if (definiteness) {
      j["definiteness"] = Json{{"ideal_dim", definiteness->ideal_dim},
                               {"killing_negative_definite", definiteness->killing_negative_definite()},
                               {"qbar_positive_definite", definiteness->qbar_positive_definite()}};
    }
    emit(out, j);
    return 0;
  }
  out << "center dim " << parts.center_part.dim() << ", ideal dim " << parts.ideal_part.dim() << '\n'
      << "ideal closed: " << (parts.ideal_closed ? "yes" : "no") << " (" << parts.bracket_checks << " brackets)\n"
      << "killing nondegenerate on ideal: " << (parts.killing_nondegenerate ? "yes" : "no") << '\n';
  if (definiteness) {
    out << "B negative definite: " << (definiteness->killing_negative_definite() ? "yes" : "no") << '\n'
        << "Qbar positive definite: " << (definiteness->qbar_positive_definite() ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  std::vector<int> ns;
  if (o.n) {
    ns.push_back(*o.n);
  } else {
    for (int n = 1; n <= std::min(o.max_n, kClassifyMaxDim); ++n) ns.push_back(n);
  }
  bool all_pass = true;
  Json reports = Json::array();
  for (int n : ns) {
    if (n > o.max_n) throw Error(ErrorKind::CapExceeded, "n exceeds --max-n");
    const ClassificationReport r = verify_classification(n);
    all_pass = all_pass && r.pass();
    if (json_output(o)) {
      reports.push_back(to_json(r));
      continue;
    }
    out << "n=" << n << "  " << r.record.algebra.to_string() << "  " << r.record.group.to_string() << "  dim "
        << r.dim.got << '/' << r.dim.expected << "  center " << r.center.got << '/' << r.center.expected
        << "  B<0 on ideal " << (r.killing_definite ? "yes" : "no") << "  " << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
  if (json_output(o)) emit(out, reports.size() == 1 ? reports[0] : reports);
  return all_pass ? 0 : 1;
}

int cmd_isometry(const Options& o, std::ostream& out) {
  const FormPtr form = load_form(o);
  const Multivector g = parse_multivector(o.literals.at(0), form);
  const IsometryEvidence e = is_isometry(g);
  const bool quaternion_form = form->field().is_rational() && form->dim() == 2 && form->q(1).is_one() &&
                               form->q(2).is_one();
  if (json_output(o)) {
    Json j = to_json(e);
    if (quaternion_form) {
      const Quaternion q = cl2_iso(g);
      j["quaternion"] = q.to_string();
      j["quaternion_norm"] = to_json(q.norm());
    }
    emit(out, j);
    return 0;
  }
  out << (e.is_isometry() ? "isometry" : "not an isometry") << '\n';
  if (quaternion_form) out << "quaternion " << cl2_iso(g).to_string() << '\n';
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  CheckConfig config;
  config.form = load_form(o);
  config.seed = o.seed;
  config.samples = o.samples;
  config.max_n = o.max_n;
  const std::vector<CheckResult> results = run_check_suite(config);
  std::size_t failed = 0, skipped = 0;
  for (const auto& r : results) {
    if (r.skipped) ++skipped;
    else if (!r.ok()) ++failed;
  }
  const std::size_t passed = results.size() - failed - skipped;
  if (json_output(o)) {
    Json checks = Json::array();
    for (const auto& r : results) {
      Json c{{"name", r.name}, {"passed", r.passed}, {"total", r.total},
             {"status", r.skipped ? "skipped" : r.ok() ? "pass" : "fail"}};
      if (!r.note.empty()) c["note"] = r.note;
      checks.push_back(std::move(c));
    }
    emit(out, Json{{"form", config.form->to_string()}, {"field", config.form->field().to_string()},
                   {"seed", o.seed}, {"checks", std::move(checks)}, {"passed", passed}, {"failed", failed},
                   {"skipped", skipped}});
  } else {
    for (const auto& r : results) {
      out << (r.skipped ? "SKIP " : r.ok() ? "PASS " : "FAIL ") << r.name;
      if (!r.skipped) out << "  " << r.passed << '/' << r.total;
      if (!r.note.empty()) out << "  (" << r.note << ')';
      out << '\n';
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table{
      {"info", "form summary: blades, Qbar gram diagonal, omega^2",
       {"clifford-core.gram_matrix", "structure.omega_square"}},
      {"product", "x y in the algebra",
       {"clifford-core.multiply", "clifford-core.blade_product", "clifford-core.scalar_part", "clifford-core.qbar",
        "clifford-core.parse_multivector"}},
      {"involute", "alpha, tau or c applied to x", {"clifford-core.involution"}},
      {"invert", "two-sided inverse, or NotInvertible for a zero divisor",
       {"operators.left_matrix", "operators.determinant", "operators.is_zero_divisor", "operators.inverse"}},
      {"center", "center of the algebra and the omega commutation law",
       {"structure.center", "structure.omega_commutation_check"}},
      {"lie", "Lie algebra of infinitesimal isometries and its center",
       {"structure.lie_algebra", "structure.lie_center", "structure.in_lie_algebra", "structure.ad_matrix"}},
      {"killing", "diagonal of the Killing form", {"structure.killing_form"}},
      {"decompose", "center + ideal split and definiteness",
       {"structure.decompose", "structure.definiteness_report"}},
      {"classify", "matrix algebra and isometry group tables with their structural check",
       {"classify.matrix_algebra_of", "classify.isometry_group_of", "classify.verify_classification"}},
      {"isometry", "whether g c(g) = c(g) g = 1; quaternion image on diag:1,1",
       {"structure.is_isometry", "quaternions.cl2_iso"}},
      {"check", "randomized invariant suite for the form",
       {"field.field_arith", "field.sign_of", "operators.equivalence_isomorphism",
        "operators.qbar_uniqueness_solve", "quaternions.quat_arith", "quaternions.quat_action",
        "quaternions.quat_mat_product", "quaternions.basis_change"}},
  };
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Clifford algebra computations"};
  app.footer(std::string(kGrammar));
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--form", o.form, "quadratic form")->capture_default_str();
  app.add_option("--field", o.field, "coefficient field")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--max-n", o.max_n, "largest n for solve-based computations")->capture_default_str();

  std::map<std::string, std::function<int(const Options&, std::ostream&)>> handlers;
  auto add = [&](const char* name, auto handler) {
    const auto& table = command_table();
    const auto it = std::find_if(table.begin(), table.end(), [&](const CommandInfo& c) { return c.name == name; });
    handlers[name] = handler;
    return app.add_subcommand(name, std::string(it->summary));
  };
  add("info", cmd_info);
  add("product", cmd_product)->add_option("operands", o.literals, "two multivectors x y")->expected(2)->required();
  auto* inv = add("involute", cmd_involute);
  inv->add_option("kind", o.involution_kind, "alpha | tau | c")->required();
  inv->add_option("x", o.literals, "multivector")->expected(1)->required();
  auto* invert = add("invert", cmd_invert);
  invert->add_option("x", o.literals, "multivector")->expected(1)->required();
  invert->add_flag("--matrices", o.matrices, "include L_a and R_a in JSON output");
  auto* ctr = add("center", cmd_center);
  ctr->add_option("--method", o.method, "solve | closed");
  ctr->add_option("--samples", o.samples, "random samples for the omega law");
  auto* lie = add("lie", cmd_lie);
  lie->add_option("--method", o.method, "solve | closed");
  lie->add_option("--element", o.element, "report whether this element lies in the Lie algebra");
  lie->add_option("--ad", o.ad, "print the matrix of ad on the Lie algebra");
  auto* kil = add("killing", cmd_killing);
  kil->add_option("--method", o.method, "mcount | trace");
  kil->add_flag("--matrix", o.matrix, "include the full matrix in JSON output (n <= 7)");
  add("decompose", cmd_decompose);
  add("classify", cmd_classify)->add_option("--n", o.n, "single dimension (default: 1..max-n)");
  add("isometry", cmd_isometry)->add_option("g", o.literals, "multivector")->expected(1)->required();
  add("check", cmd_check)->add_option("--samples", o.samples, "random samples per check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    const CLI::App* chosen = app.get_subcommands().front();
    return handlers.at(chosen->get_name())(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::Error& e) {
    err << e.get_name() << ": " << e.what() << "\n\n" << kGrammar << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cliff::tools
