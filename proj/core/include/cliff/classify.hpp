#pragma once

#include <cstdint>
#include <string>

namespace cliff {

enum class Scalars { R, C, H };
enum class GroupFamily { O, U, Sp };

/// M(size, K), or M(size, K) + M(size, K) when doubled.
struct AlgebraDescriptor {
  Scalars scalars = Scalars::R;
  std::uint64_t size = 1;
  bool doubled = false;

  std::string to_string() const;
  /// Dimension over the reals, with dim C = 2 and dim H = 4.
  std::uint64_t real_dimension() const;
  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

struct GroupDescriptor {
  GroupFamily family = GroupFamily::O;
  std::uint64_t rank = 1;
  bool doubled = false;

  std::string to_string() const;
  /// O(m): m(m-1)/2, U(m): m^2, Sp(m): m(2m+1); a doubled group counts twice.
  std::uint64_t dimension() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct ClassificationRecord {
  int n = 0;
  AlgebraDescriptor algebra;
  GroupDescriptor group;
  std::uint64_t expected_group_dim = 0;
  std::uint64_t expected_center_dim = 0;
};

/// Clifford algebra of the positive definite form of dimension n as a matrix algebra.
AlgebraDescriptor matrix_algebra_of(int n);
/// Isometry group of the positive definite form of dimension n.
GroupDescriptor isometry_group_of(int n);
ClassificationRecord classification_record(int n);

inline constexpr int kClassifyMaxDim = 10;

struct CountCheck {
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
  bool ok() const noexcept { return expected == got; }
};

struct ClassificationReport {
  ClassificationRecord record;
  CountCheck dim;
  CountCheck center;
  bool killing_definite = false;
  bool pass() const noexcept { return dim.ok() && center.ok() && killing_definite; }
  /// What the fingerprint can and cannot tell apart.
  static std::string limitation();
};

/// Compares the table entry with the computed Lie algebra of diag(1, ..., 1) over Q:
/// its dimension, the dimension of its center, and negative definiteness of B on the ideal.
/// Throws CapExceeded outside 1 <= n <= 10.
ClassificationReport verify_classification(int n);

}  // namespace cliff
