#include <gtest/gtest.h>

#include "cliff/error.hpp"
#include "cliff/operators.hpp"
#include "cliff/sampling.hpp"
#include "cliff/structure.hpp"
#include "oracles.hpp"

namespace {

using namespace cliff;

const FieldSpec Q = FieldSpec::rational();

FieldElement rat(long num, long den = 1) { return FieldElement(Q, mpq_class(mpz_class(num), mpz_class(den))); }
Multivector mv(const FormPtr& f, const char* text) { return parse_multivector(text, f); }

// Brute-force commutant: x commutes with every blade, checked through the word oracle.
std::vector<std::uint32_t> central_blades_by_oracle(const FormPtr& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < f->blade_count(); ++i) {
    bool central = true;
    for (std::uint32_t j = 0; j < f->blade_count() && central; ++j) {
      central = oracle::blade_product(i, j, *f).first == oracle::blade_product(j, i, *f).first;
    }
    if (central) out.push_back(i);
  }
  return out;
}

TEST(Center, Examples) {
  const FormPtr f2 = make_form("diag:3,-5");
  const CenterDescription c2 = center(f2, Method::Solve);
  ASSERT_EQ(c2.basis.size(), 1U);
  EXPECT_EQ(c2.basis[0], Multivector::scalar(f2, 1));
  EXPECT_EQ(c2.closed_form_kind, CenterKind::ScalarsOnly);

  const FormPtr f3 = make_form("diag:2,1,-7");
  const CenterDescription c3 = center(f3, Method::Solve);
  ASSERT_EQ(c3.basis.size(), 2U);
  EXPECT_EQ(c3.basis[0], Multivector::scalar(f3, 1));
  EXPECT_EQ(c3.basis[1], mv(f3, "e123"));
  EXPECT_EQ(c3.closed_form_kind, CenterKind::ScalarsAndOmega);
}

TEST(Center, SolveMatchesBlades) {
  for (const char* text : {"diag:1", "sig:1,1", "diag:2,-1,3", "sig:2,2", "diag:1,-1,2,-2,3", "sig:3,3"}) {
    const FormPtr f = make_form(text);
    const std::vector<std::uint32_t> expected = central_blades_by_oracle(f);
    const CenterDescription c = center(f, Method::Solve);
    ASSERT_EQ(c.basis.size(), expected.size()) << text;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      EXPECT_EQ(c.basis[k], Multivector::blade(f, BladeIndex(expected[k])));
    }
  }
  EXPECT_THROW(center(make_form(QuadraticForm::signature(11, 0)), Method::Solve), Error);
  EXPECT_EQ(center(make_form(QuadraticForm::signature(16, 0)), Method::ClosedForm).basis.size(), 1U);
}

TEST(OmegaSquare, Examples) {
  EXPECT_EQ(omega_square(*make_form("diag:1,1")), rat(-1));
  EXPECT_EQ(omega_square(*make_form("diag:1,1,1")), rat(1));
}

TEST(OmegaSquare, MatchesDirectProduct) {
  Sampler s(41);
  for (int n = 1; n <= 10; ++n) {
    const FormPtr f = make_form(QuadraticForm(Q, s.diagonal(n, Q, true)));
    const Multivector omega = Multivector::blade(f, f->omega());
    EXPECT_EQ(omega * omega, Multivector::scalar(f, omega_square(*f))) << n;
  }
}

TEST(OmegaCommutation, Examples) {
  const FormPtr f = make_form("diag:3,5");
  EXPECT_EQ(mv(f, "e1") * mv(f, "e12"), mv(f, "e12") * involution(Involution::Alpha, mv(f, "e1")));
  EXPECT_EQ(mv(f, "e1") * mv(f, "e12"), mv(f, "-3*e2"));
  const OmegaCommutationReport r = omega_commutation_check(make_form("diag:1,-2,3,-4"), 5, 100);
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.samples, 100U);
  EXPECT_THROW(omega_commutation_check(make_form("diag:1,1,1"), 5), Error);
}

TEST(LieAlgebra, Examples) {
  EXPECT_EQ(lie_algebra(*make_form("diag:1")).blades, (std::vector<BladeIndex>{BladeIndex::of({1})}));
  EXPECT_EQ(lie_algebra(*make_form("diag:1,1")).blades,
            (std::vector<BladeIndex>{BladeIndex::of({1}), BladeIndex::of({2}), BladeIndex::of({1, 2})}));
  const std::vector<std::size_t> dims{1, 3, 6, 10, 16, 28, 56};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(lie_algebra(*make_form(QuadraticForm::signature(n, 0))).dim(), dims[n - 1]);
    EXPECT_EQ(lie_algebra(*make_form(QuadraticForm::signature(n, 0))).dim(), oracle::lie_dimension(n));
  }
}

TEST(LieAlgebra, IsTheMinusOneEigenspace) {
  const FormPtr f = make_form("diag:1,-1,2,3,5");
  const LieSubspace lie = lie_algebra(*f);
  for (std::uint32_t i = 0; i < f->blade_count(); ++i) {
    const Multivector e = Multivector::blade(f, BladeIndex(i));
    EXPECT_EQ(lie.contains(BladeIndex(i)), involution(Involution::Conjugation, e) == -e);
    EXPECT_EQ(lie.contains(BladeIndex(i)), in_lie_algebra(e));
  }
}

TEST(LieAlgebra, Membership) {
  const FormPtr f3 = make_form("diag:1,1,1");
  EXPECT_TRUE(in_lie_algebra(mv(f3, "e1 - 2*e3")));
  EXPECT_FALSE(in_lie_algebra(Multivector::scalar(f3, 1)));
  EXPECT_FALSE(in_lie_algebra(mv(f3, "e123")));
  const FormPtr f5 = make_form(QuadraticForm::signature(5, 0));
  EXPECT_TRUE(in_lie_algebra(Multivector::blade(f5, f5->omega())));
}

TEST(LieAlgebra, BracketClosed) {
  const FormPtr f = make_form("diag:1,-1,2,3");
  Sampler s(43);
  for (int trial = 0; trial < 50; ++trial) {
    ASSERT_TRUE(in_lie_algebra(commutator(s.lie_element(f), s.lie_element(f))));
  }
}

TEST(LieCenter, Examples) {
  const FormPtr f5 = make_form(QuadraticForm::signature(5, 0));
  EXPECT_EQ(lie_center(f5, Method::Solve).blades, (std::vector<BladeIndex>{f5->omega()}));
  EXPECT_EQ(lie_center(f5, Method::ClosedForm).blades, (std::vector<BladeIndex>{f5->omega()}));
  EXPECT_TRUE(lie_center(make_form("diag:1,1,1"), Method::Solve).blades.empty());
  EXPECT_TRUE(lie_center(make_form("diag:1,1,1,1"), Method::Solve).blades.empty());
}

TEST(LieCenter, IsCenterIntersectedWithLie) {
  for (int n = 1; n <= 7; ++n) {
    const FormPtr f = make_form(QuadraticForm::signature((n + 1) / 2, n / 2));
    const LieSubspace z = lie_center(f, Method::Solve);
    const std::vector<Multivector> both = center_lie_intersection(f);
    ASSERT_EQ(both.size(), z.dim()) << n;
    for (std::size_t k = 0; k < both.size(); ++k) EXPECT_EQ(both[k], Multivector::blade(f, z.blades[k]));
    // Intersection of the solve-method center with the Lie algebra, blade by blade.
    std::size_t count = 0;
    for (const Multivector& x : center(f, Method::Solve).basis) count += in_lie_algebra(x) ? 1 : 0;
    EXPECT_EQ(count, z.dim());
  }
}

TEST(AdMatrix, HandExpansion) {
  const FormPtr f = make_form("diag:1,1");
  const LieSubspace lie = lie_algebra(*f);  // e1, e2, e12
  const Matrix ad = ad_matrix(mv(f, "e1"), lie);
  Matrix expected(3, 3, Q);
  expected(2, 1) = rat(2);   // e2 -> 2 e12
  expected(1, 2) = rat(-2);  // e12 -> -2 e2
  EXPECT_EQ(ad, expected);
}

TEST(AdMatrix, Errors) {
  const FormPtr f = make_form("diag:1,1,1");
  const LieSubspace lie = lie_algebra(*f);
  EXPECT_THROW(ad_matrix(Multivector::scalar(f, 1), lie), Error);
  LieSubspace partial;
  partial.blades = {BladeIndex::of({2})};
  try {
    ad_matrix(mv(f, "e1"), partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
  }
}

TEST(AdMatrix, SkewForQbar) {
  const FormPtr f = make_form("diag:2,-1,3,1/2");
  Sampler s(47);
  for (int trial = 0; trial < 40; ++trial) {
    const Multivector xi = s.lie_element(f);
    const Multivector x = s.multivector(f, 60), y = s.multivector(f, 60);
    ASSERT_TRUE((qbar(commutator(xi, x), y) + qbar(x, commutator(xi, y))).is_zero());
  }
}

TEST(AdMatrix, SquareEigenvalues) {
  const FormPtr f = make_form("diag:2,-1,3,1/2,-5,7");
  const LieSubspace lie = lie_algebra(*f);
  for (BladeIndex i : lie.blades) {
    const Multivector ei = Multivector::blade(f, i);
    const FieldElement four_sq = rat(4) * blade_square(i, *f);
    for (BladeIndex k : lie.blades) {
      const Multivector ek = Multivector::blade(f, k);
      const Multivector twice = commutator(ei, commutator(ei, ek));
      ASSERT_TRUE(twice.is_zero() || twice == four_sq * ek);
    }
  }
}

TEST(Killing, HandValue) {
  const FormPtr f = make_form("diag:1,1");
  for (KillingMethod m : {KillingMethod::MCount, KillingMethod::TraceOracle}) {
    const KillingDiagonal k = killing_form(f, m);
    ASSERT_EQ(k.entries.size(), 3U);
    EXPECT_EQ(k.entries[0].blade, BladeIndex::of({1}));
    EXPECT_EQ(k.entries[0].value, rat(-8));
    EXPECT_EQ(k.entries[0].multiplicity, 2U);
  }
  EXPECT_EQ(killing_value(mv(f, "e1"), mv(f, "e1")), rat(-8));
  EXPECT_TRUE(killing_value(mv(f, "e1"), mv(f, "e2")).is_zero());
}

TEST(Killing, MethodsAgreeAndOmegaVanishes) {
  for (int n = 1; n <= 7; ++n) {
    for (const FormPtr& f : {make_form(QuadraticForm::signature(n, 0)),
                             make_form(QuadraticForm::signature((n + 1) / 2, n / 2))}) {
      const KillingDiagonal a = killing_form(f, KillingMethod::MCount);
      const KillingDiagonal b = killing_form(f, KillingMethod::TraceOracle);
      ASSERT_EQ(a.entries.size(), b.entries.size());
      for (std::size_t k = 0; k < a.entries.size(); ++k) {
        ASSERT_EQ(a.entries[k].value, b.entries[k].value);
        ASSERT_EQ(a.entries[k].multiplicity, b.entries[k].multiplicity);
        const bool omega_central = a.entries[k].blade == f->omega() && n % 2 == 1;
        ASSERT_EQ(a.entries[k].value.is_zero(), omega_central) << n;
      }
    }
  }
}

TEST(Killing, OffDiagonalVanishes) {
  const FormPtr f = make_form("diag:1,-2,3,-1");
  const Matrix b = killing_matrix(f);
  const KillingDiagonal d = killing_form(f, KillingMethod::MCount);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == j) {
        EXPECT_EQ(b(i, i), d.entries[i].value);
      } else {
        EXPECT_TRUE(b(i, j).is_zero());
      }
    }
  }
  EXPECT_THROW(killing_matrix(make_form(QuadraticForm::signature(8, 0))), Error);
}

TEST(Killing, GeneralElementsViaTrace) {
  const FormPtr f = make_form("diag:1,2,3");
  Sampler s(53);
  const LieSubspace lie = lie_algebra(*f);
  const KillingDiagonal d = killing_form(f, KillingMethod::MCount);
  for (int trial = 0; trial < 10; ++trial) {
    const Multivector x = s.lie_element(f), y = s.lie_element(f);
    FieldElement expected = rat(0);
    for (std::size_t k = 0; k < lie.dim(); ++k) expected += x[lie.blades[k]] * y[lie.blades[k]] * d.entries[k].value;
    ASSERT_EQ(killing_value(x, y), expected);
  }
}

TEST(Decompose, Examples) {
  const Decomposition d5 = decompose(make_form(QuadraticForm::signature(5, 0)));
  EXPECT_EQ(d5.ideal_part.dim(), 15U);
  EXPECT_EQ(d5.center_part.dim(), 1U);
  const Decomposition d4 = decompose(make_form("diag:1,1,1,1"));
  EXPECT_EQ(d4.ideal_part.dim(), 10U);
  EXPECT_EQ(d4.center_part.dim(), 0U);
  for (int n = 1; n <= 7; ++n) {
    const Decomposition d = decompose(make_form(QuadraticForm::signature(n / 2, n - n / 2)));
    EXPECT_TRUE(d.ideal_closed);
    EXPECT_TRUE(d.killing_nondegenerate);
    EXPECT_EQ(d.center_part.dim() + d.ideal_part.dim(), oracle::lie_dimension(n));
  }
}

TEST(Definiteness, Examples) {
  const DefinitenessReport r = definiteness_report(make_form("diag:1,1,1"));
  EXPECT_EQ(r.ideal_dim, 6U);
  EXPECT_EQ(r.killing_negative, 6U);
  EXPECT_EQ(r.qbar_positive, 6U);
  const FormPtr f = make_form("diag:1,1,1");
  for (BladeIndex b : lie_algebra(*f).blades) EXPECT_EQ(gram_matrix(*f)[b.mask], rat(1));
  EXPECT_EQ(definiteness_report(make_form("diag:2,1/3,5,7")).killing_negative, 10U);
  try {
    definiteness_report(make_form("diag:1,-1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDefiniteForm);
  }
  try {
    definiteness_report(make_form("diag:1,1", FieldSpec::prime(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnorderedField);
  }
}

TEST(Isometry, Examples) {
  const FormPtr f = make_form("diag:1,1");
  EXPECT_TRUE(is_isometry(Multivector::scalar(f, 1)).is_isometry());
  const IsometryEvidence rot = is_isometry(mv(f, "3/5 + 4/5*e12"));
  EXPECT_TRUE(rot.is_isometry());
  EXPECT_TRUE(rot.consistent());
  EXPECT_TRUE(is_isometry(mv(f, "e1")).is_isometry());
  const IsometryEvidence no = is_isometry(mv(f, "1 + e1"));
  EXPECT_FALSE(no.is_isometry());
  EXPECT_TRUE(no.consistent());
}

TEST(Isometry, SampledProductsAreConsistent) {
  for (const char* text : {"diag:1,1,1", "sig:2,1", "diag:2,-3,5,1/2"}) {
    const FormPtr f = make_form(text);
    Sampler s(59);
    for (int trial = 0; trial < 50; ++trial) {
      const Multivector g = s.isometry(f);
      const IsometryEvidence e = is_isometry(g);
      ASSERT_TRUE(e.is_isometry()) << text;
      ASSERT_TRUE(e.consistent()) << text;
      // Gram preservation through the oracle: Qbar(g x, g y) = Qbar(x, y).
      const Multivector x = s.multivector(f, 50), y = s.multivector(f, 50);
      ASSERT_EQ(qbar(oracle::multiply(g, x), oracle::multiply(g, y)), qbar(x, y));
    }
    const IsometryEvidence e = is_isometry(mv(f, "2 + e1"));
    EXPECT_FALSE(e.is_isometry());
    EXPECT_TRUE(e.consistent());
  }
}

TEST(PrimeField, StructureHolds) {
  const FormPtr f = make_form("diag:1,2,3,4,5", FieldSpec::prime(7));
  EXPECT_EQ(lie_center(f, Method::Solve).blades, lie_center(f, Method::ClosedForm).blades);
  EXPECT_EQ(center(f, Method::Solve).basis.size(), 2U);
  const KillingDiagonal a = killing_form(f, KillingMethod::MCount);
  const KillingDiagonal b = killing_form(f, KillingMethod::TraceOracle);
  for (std::size_t k = 0; k < a.entries.size(); ++k) EXPECT_EQ(a.entries[k].value, b.entries[k].value);
  EXPECT_TRUE(decompose(f).ideal_closed);
}

}  // namespace
