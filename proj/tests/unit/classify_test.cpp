#include <gtest/gtest.h>

#include "cliff/classify.hpp"
#include "cliff/error.hpp"
#include "oracles.hpp"

namespace {

using namespace cliff;

TEST(Classify, Examples) {
  EXPECT_EQ(matrix_algebra_of(2).to_string(), "M(1,H)");
  EXPECT_EQ(matrix_algebra_of(7).to_string(), "M(8,R)+M(8,R)");
  EXPECT_EQ(isometry_group_of(3).to_string(), "Sp(1)xSp(1)");
  EXPECT_EQ(isometry_group_of(3).dimension(), 6U);
  EXPECT_EQ(isometry_group_of(5).to_string(), "U(4)");
  EXPECT_EQ(isometry_group_of(5).dimension(), 16U);
  EXPECT_EQ(isometry_group_of(8).to_string(), "O(16)");
  EXPECT_EQ(isometry_group_of(8).dimension(), 120U);
}

TEST(Classify, AlgebraDimensionIsTwoToTheN) {
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(matrix_algebra_of(n).real_dimension(), std::uint64_t{1} << n) << n;
}

TEST(Classify, GroupDimensionMatchesLieDimension) {
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(isometry_group_of(n).dimension(), oracle::lie_dimension(n)) << n;
}

TEST(Classify, Periodicity) {
  for (int n = 1; n <= 8; ++n) {
    const AlgebraDescriptor a = matrix_algebra_of(n), b = matrix_algebra_of(n + 8);
    EXPECT_EQ(a.scalars, b.scalars);
    EXPECT_EQ(a.doubled, b.doubled);
    EXPECT_EQ(b.size, 16 * a.size);
    EXPECT_EQ(isometry_group_of(n).family, isometry_group_of(n + 8).family);
    EXPECT_EQ(isometry_group_of(n + 8).rank, 16 * isometry_group_of(n).rank);
  }
}

TEST(Classify, RecordCenter) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(classification_record(n).expected_center_dim, n % 4 == 1 ? 1U : 0U);
}

TEST(Classify, VerifySmall) {
  const std::uint64_t dims[] = {1, 3, 6, 10, 16, 28, 56};
  for (int n = 1; n <= 7; ++n) {
    const ClassificationReport r = verify_classification(n);
    EXPECT_TRUE(r.pass()) << n;
    EXPECT_EQ(r.dim.got, dims[n - 1]);
  }
  EXPECT_THROW(verify_classification(0), Error);
  EXPECT_THROW(verify_classification(11), Error);
}

}  // namespace
