#include "asreg/geopair.hpp"
#include "asreg/superpot.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace asreg;

namespace {

Tensor T(const char* text) { return parse_tensor(text); }
const Mat2 kId = Mat2::identity();

Tensor slot4(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d, const Tensor& w) {
  return apply_slotwise({a, b, c, d}, w);
}

}  // namespace

TEST(Superpotential, Predicate) {
  EXPECT_TRUE(is_superpotential(T("x^4+y^4")));
  EXPECT_TRUE(is_superpotential(T("xyxy+yxyx")));
  EXPECT_TRUE(is_superpotential(w_double_prime()));
  EXPECT_FALSE(is_superpotential(T("x^3y")));
  EXPECT_FALSE(is_superpotential(w_t1(Scalar(1))));
  EXPECT_TRUE(is_superpotential(w_t1(Scalar::rational(1, 2))));
}

TEST(TwistWitness, T1Family) {
  oracle::Gen gen(2);
  for (int k = 0; k < 20; ++k) {
    const Scalar beta = gen.rational();
    const Tensor w = w_t1(beta);
    const auto theta = solve_twist_witness(w);
    ASSERT_TRUE(theta.has_value());
    EXPECT_TRUE(theta->proportional_to(Mat2(1, Scalar(2) * (Scalar(2) * beta - Scalar(1)), 0, 1)));
    EXPECT_EQ(slot4(*theta, kId, kId, kId, cyclic_phi(w)), w);
  }
}

TEST(TwistWitness, SuperpotentialAndNone) {
  EXPECT_EQ(solve_twist_witness(T("x^4+y^4")), kId);
  EXPECT_FALSE(solve_twist_witness(T("x^3y")).has_value());
}

TEST(AutW, Examples) {
  EXPECT_EQ(in_aut_w(T("x^4"), Mat2::diag(2, 1)), Scalar(16));
  EXPECT_EQ(in_aut_w(w_t1(Scalar(3)), kId), Scalar(1));
  EXPECT_TRUE(in_aut_w(w_double_prime(), Mat2::diag(Scalar::i(), -Scalar::i())).has_value());
  EXPECT_FALSE(in_aut_w(T("x^3y"), Mat2(1, 1, 0, 1)).has_value());
}

TEST(MsTwist, DiagonalFourthRootTwist) {
  const Mat2 theta = Mat2::diag(Scalar::i(), -Scalar::i());
  EXPECT_EQ(ms_twist(w_double_prime(), theta), w_prime());
  EXPECT_EQ(ms_twist(w_t1(Scalar(2)), kId), w_t1(Scalar(2)));
}

TEST(DerivationQuotient, T1MatchesTable) {
  oracle::Gen gen(5);
  for (int k = 0; k < 20; ++k) {
    const Scalar beta = gen.rational();
    const auto pres = derivation_quotient(w_t1(beta));
    EXPECT_EQ(pres.f1, T("xy^2-2yxy+y^2x"));
    EXPECT_TRUE(span_equal(pres.space, table_relations(Kind::T1, {{"beta", beta}})));
  }
  EXPECT_THROW(derivation_quotient(T("x^4+xyxy")), Error);
}

TEST(DerivationQuotient, TwistCorrespondence) {
  // D(w^theta) = (theta^2)^{⊗3} applied to twist_relations(D(w), theta).
  const Mat2 theta4 = Mat2::diag(Scalar::i(), -Scalar::i());
  EXPECT_TRUE(span_equal(derivation_quotient(ms_twist(w_double_prime(), theta4)).space,
                         twist_relations(derivation_quotient(w_double_prime()).space, theta4)));
  oracle::Gen gen(8);
  const Tensor w = T("x^4+y^4");
  for (int k = 0; k < 20; ++k) {
    // Aut(x^4 + y^4) contains diagonal fourth roots of unity and the swap.
    const Scalar u = k % 2 == 0 ? Scalar::i() : Scalar(-1);
    const Mat2 theta = k % 3 == 0 ? Mat2(0, u, 1, 0) : Mat2::diag(u, Scalar(1));
    ASSERT_TRUE(in_aut_w(w, theta).has_value());
    const Mat2 sq = theta * theta;
    const RelationSpace twisted = twist_relations(derivation_quotient(w).space, theta);
    const RelationSpace expected(apply_slotwise({sq, sq, sq}, twisted.basis()[0]),
                                 apply_slotwise({sq, sq, sq}, twisted.basis()[1]));
    EXPECT_TRUE(span_equal(derivation_quotient(ms_twist(w, theta)).space, expected));
  }
}

TEST(MMatrix, T1AtBetaOne) {
  const auto rel = table_polynomials(Kind::T1, {{"beta", Scalar(1)}});
  const MMatrix m = m_matrix(rel[0], rel[1]);
  EXPECT_EQ(m(0, 0), T("-2xy+yx"));
  EXPECT_EQ(m(0, 1), T("x^2+2xy-2yx"));
  EXPECT_EQ(m(1, 0), T("y^2"));
  EXPECT_EQ(m(1, 1), T("xy-2yx"));
}

TEST(MMatrix, DiagonalAndReconstruction) {
  const MMatrix m = m_matrix(T("x^3"), T("y^3"));
  EXPECT_EQ(m(0, 0), T("x^2"));
  EXPECT_TRUE(m(0, 1).is_zero());
  EXPECT_TRUE(m(1, 0).is_zero());
  EXPECT_EQ(m(1, 1), T("y^2"));
  oracle::Gen gen(10);
  for (int k = 0; k < 50; ++k) {
    const Tensor f1 = gen.tensor(3);
    const Tensor f2 = gen.tensor(3);
    const auto back = m_matrix(f1, f2).reconstruct();
    EXPECT_EQ(back[0], f1);
    EXPECT_EQ(back[1], f2);
  }
}

TEST(IsStandard, T1AtBetaOne) {
  const auto q = is_standard(derivation_quotient(w_t1(Scalar(1))));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->Q, Mat2(1, 0, -2, 1));
  EXPECT_EQ(q->basis, "given");
}

TEST(IsStandard, Degenerate) {
  EXPECT_FALSE(is_standard(CubicPresentation(T("x^3"), T("x^2y"))).has_value());
}

TEST(CommonZero, Examples) {
  EXPECT_TRUE(common_zero_empty(m_matrix(derivation_quotient(w_t1(Scalar(1))))));
  MMatrix flat;
  for (auto& row : flat.m)
    for (auto& e : row) e = T("xy");
  EXPECT_FALSE(common_zero_empty(flat));
  EXPECT_FALSE(common_zero_empty(m_matrix(T("x^3"), T("y^3"))));
}

TEST(CommonZero, AgreesWithPointSearch) {
  // A planted common zero at rational points is always detected.
  oracle::Gen gen(14);
  for (int k = 0; k < 30; ++k) {
    const ProjPoint p = gen.point();
    const ProjPoint q = gen.point();
    MMatrix m;
    for (auto& row : m.m) {
      for (auto& e : row) {
        Tensor t = gen.tensor(2);
        const Scalar v = evaluate(t, std::vector<ProjPoint>{p, q});
        // Subtract v * (monomial with nonzero value at (p, q)).
        const std::string word = std::string(1, p.a().is_zero() ? 'y' : 'x') + (q.a().is_zero() ? 'y' : 'x');
        const Scalar mv = evaluate(Tensor::monomial(word), std::vector<ProjPoint>{p, q});
        e = t - (v / mv) * Tensor::monomial(word);
      }
    }
    EXPECT_FALSE(common_zero_empty(m));
  }
}

TEST(AsRegular, EveryTableKind) {
  oracle::Gen gen(20);
  for (Kind kind : kAllKinds) {
    for (int k = 0; k < 5; ++k) {
      const auto cert = check_as_regular(CubicPresentation::from_space(table_relations(kind, gen.params(kind))));
      EXPECT_TRUE(cert.as_regular) << to_string(kind);
      EXPECT_TRUE(cert.standard.has_value());
      EXPECT_TRUE(cert.common_zero_empty);
    }
  }
  EXPECT_FALSE(check_as_regular(CubicPresentation(T("x^3"), T("y^3"))).as_regular);
}

TEST(AsRegular, StandardWitnessSolvesSystem) {
  const auto pres = CubicPresentation::from_space(table_relations(Kind::S1, {{"alpha", Scalar(2)}, {"beta", Scalar(5)}}));
  const auto w = is_standard(pres);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->Q.invertible());
  EXPECT_TRUE(w->P.invertible());
  const Tensor g1 = w->P(0, 0) * pres.f1 + w->P(0, 1) * pres.f2;
  const Tensor g2 = w->P(1, 0) * pres.f1 + w->P(1, 1) * pres.f2;
  const RelationSpace basis_change(g1, g2);
  EXPECT_TRUE(span_equal(basis_change, pres.space));
}
