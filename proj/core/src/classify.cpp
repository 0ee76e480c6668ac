#include "cliff/classify.hpp"

#include "cliff/error.hpp"
#include "cliff/structure.hpp"

namespace cliff {
namespace {

void require_positive(int n) {
  if (n < 1) throw Error(ErrorKind::DimensionOutOfRange, "n must be at least 1, got " + std::to_string(n));
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

}  // namespace

std::string AlgebraDescriptor::to_string() const {
  const char k = scalars == Scalars::R ? 'R' : scalars == Scalars::C ? 'C' : 'H';
  std::string one = "M(" + std::to_string(size) + "," + k + ")";
  return doubled ? one + "+" + one : one;
}

std::uint64_t AlgebraDescriptor::real_dimension() const {
  const std::uint64_t k = scalars == Scalars::R ? 1 : scalars == Scalars::C ? 2 : 4;
  return (doubled ? 2 : 1) * k * size * size;
}

std::string GroupDescriptor::to_string() const {
  const char* name = family == GroupFamily::O ? "O" : family == GroupFamily::U ? "U" : "Sp";
  std::string one = std::string(name) + "(" + std::to_string(rank) + ")";
  return doubled ? one + "x" + one : one;
}

std::uint64_t GroupDescriptor::dimension() const {
  const std::uint64_t m = rank;
  std::uint64_t one = 0;
  switch (family) {
    case GroupFamily::O: one = m * (m - 1) / 2; break;
    case GroupFamily::U: one = m * m; break;
    case GroupFamily::Sp: one = m * (2 * m + 1); break;
  }
  return doubled ? 2 * one : one;
}

AlgebraDescriptor matrix_algebra_of(int n) {
  require_positive(n);
  const int k4 = 4 * (n / 8);
  switch (n % 8) {
    case 0: return {Scalars::R, pow2(k4), false};
    case 1: return {Scalars::C, pow2(k4), false};
    case 2: return {Scalars::H, pow2(k4), false};
    case 3: return {Scalars::H, pow2(k4), true};
    case 4: return {Scalars::H, pow2(k4 + 1), false};
    case 5: return {Scalars::C, pow2(k4 + 2), false};
    case 6: return {Scalars::R, pow2(k4 + 3), false};
    default: return {Scalars::R, pow2(k4 + 3), true};
  }
}

GroupDescriptor isometry_group_of(int n) {
  require_positive(n);
  const int k4 = 4 * (n / 8);
  switch (n % 8) {
    case 0: return {GroupFamily::O, pow2(k4), false};
    case 1: return {GroupFamily::U, pow2(k4), false};
    case 2: return {GroupFamily::Sp, pow2(k4), false};
    case 3: return {GroupFamily::Sp, pow2(k4), true};
    case 4: return {GroupFamily::Sp, pow2(k4 + 1), false};
    case 5: return {GroupFamily::U, pow2(k4 + 2), false};
    case 6: return {GroupFamily::O, pow2(k4 + 3), false};
    default: return {GroupFamily::O, pow2(k4 + 3), true};
  }
}

ClassificationRecord classification_record(int n) {
  ClassificationRecord record;
  record.n = n;
  record.algebra = matrix_algebra_of(n);
  record.group = isometry_group_of(n);
  record.expected_group_dim = record.group.dimension();
  record.expected_center_dim = n % 4 == 1 ? 1 : 0;
  return record;
}

std::string ClassificationReport::limitation() {
  return "fingerprint = (dimension, center dimension, compactness); it cannot separate groups that "
         "agree on all three, which no two rows do for n <= 10";
}

ClassificationReport verify_classification(int n) {
  if (n < 1 || n > kClassifyMaxDim) {
    throw Error(ErrorKind::CapExceeded, "classification check supports 1 <= n <= " +
                                            std::to_string(kClassifyMaxDim) + ", got " + std::to_string(n));
  }
  ClassificationReport report;
  report.record = classification_record(n);
  const FormPtr form = make_form(QuadraticForm::signature(n, 0, FieldSpec::rational()));
  report.dim = {report.record.expected_group_dim, lie_algebra(*form).dim()};
  report.center = {report.record.expected_center_dim, lie_center(form, Method::Solve).dim()};
  report.killing_definite = definiteness_report(form).killing_negative_definite();
  return report;
}

}  // namespace cliff
