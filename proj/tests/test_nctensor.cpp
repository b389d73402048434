#include "asreg/nctensor.hpp"
#include "asreg/superpot.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace asreg;

namespace {

Tensor T(const char* text) { return parse_tensor(text); }

const Mat2 kId = Mat2::identity();

}  // namespace

TEST(Tensor, WordIndexIsLexicographic) {
  EXPECT_EQ(Tensor::index_of("xxx"), 0U);
  EXPECT_EQ(Tensor::index_of("xyy"), 3U);
  EXPECT_EQ(Tensor::index_of("yxx"), 4U);
  EXPECT_EQ(Tensor::word_of(6, 3), "yyx");
}

TEST(CyclicPhi, Monomials) {
  EXPECT_EQ(cyclic_phi(T("xyxy")), T("yxyx"));
  EXPECT_EQ(cyclic_phi(T("x^4")), T("x^4"));
  EXPECT_EQ(cyclic_phi(T("xyyy")), T("yxyy"));
  EXPECT_THROW(cyclic_phi(T("xyx")), Error);
}

TEST(CyclicPhi, TwistedSuperpotentialOfT1) {
  // (theta ⊗ id^3)(phi(w)) = w with theta = [[1,2],[0,1]], so phi(w) = (theta^{-1} ⊗ id^3)(w).
  const Tensor w = w_t1(Scalar(1));
  EXPECT_EQ(cyclic_phi(w), apply_slotwise({Mat2(1, 2, 0, 1).inverse(), kId, kId, kId}, w));
}

TEST(CyclicPhi, MatchesWordRotation) {
  oracle::Gen gen(41);
  for (int k = 0; k < 30; ++k) {
    const Tensor w = gen.tensor(4);
    EXPECT_EQ(oracle::to_words(cyclic_phi(w)), oracle::rotate(oracle::to_words(w)));
  }
}

TEST(Partial, Examples) {
  EXPECT_EQ(partial(T("xyyx"), Letter::X), T("y^2x"));
  EXPECT_TRUE(partial(T("xyyx"), Letter::Y).is_zero());
  EXPECT_EQ(partial(w_t1(Scalar::rational(3, 5)), Letter::X), T("xy^2-2yxy+y^2x"));
}

TEST(ApplySlotwise, Examples) {
  oracle::Gen gen(2);
  const Tensor t = gen.tensor(3);
  EXPECT_EQ(apply_slotwise({kId, kId, kId}, t), t);
  EXPECT_EQ(apply_slotwise({Mat2::diag(2, 1), kId, kId}, T("xyx")), T("2xyx"));
  EXPECT_EQ(apply_slotwise({Mat2(1, 3, 0, 1)}, T("x")), T("x+3y"));
  EXPECT_THROW(apply_slotwise({kId, kId}, t), Error);
}

TEST(ApplySlotwise, MatchesWordExpansion) {
  oracle::Gen gen(7);
  for (int k = 0; k < 40; ++k) {
    const Tensor t = gen.tensor(3);
    const std::vector<Mat2> maps{gen.matrix(), gen.matrix(), gen.matrix()};
    EXPECT_EQ(oracle::to_words(apply_slotwise(maps, t)), oracle::substitute(maps, oracle::to_words(t)));
  }
}

TEST(ApplySlotwise, Functorial) {
  oracle::Gen gen(19);
  for (int k = 0; k < 30; ++k) {
    const Tensor t = gen.tensor(3);
    const std::vector<Mat2> a{gen.matrix(), gen.matrix(), gen.matrix()};
    const std::vector<Mat2> b{gen.matrix(), gen.matrix(), gen.matrix()};
    // Substitution composes in reading order: first a, then b gives a*b.
    const std::vector<Mat2> ab{a[0] * b[0], a[1] * b[1], a[2] * b[2]};
    EXPECT_EQ(apply_slotwise(b, apply_slotwise(a, t)), apply_slotwise(ab, t));
  }
}

TEST(Evaluate, Examples) {
  EXPECT_TRUE(evaluate(T("x^2y-2yx^2"), PointTriple{ProjPoint(1, 1), ProjPoint(1, 0), ProjPoint(1, 2)}).is_zero());
  EXPECT_EQ(evaluate(T("x^2y"), PointTriple{ProjPoint(1, 0), ProjPoint(1, 0), ProjPoint(0, 1)}), Scalar(1));
}

TEST(Evaluate, MatchesOracleAndIsMultilinear) {
  oracle::Gen gen(33);
  for (int k = 0; k < 40; ++k) {
    const Tensor f = gen.tensor(3);
    const PointTriple p{gen.point(), gen.point(), gen.point()};
    const std::vector<ProjPoint> pv(p.begin(), p.end());
    EXPECT_EQ(evaluate(f, p), oracle::evaluate(oracle::to_words(f), pv));
    // Scaling the second representative by c scales the value by c.
    const Scalar c = gen.nonzero_gaussian();
    const Tensor scaled = apply_slotwise({kId, Mat2::diag(c, c), kId}, f);
    EXPECT_EQ(evaluate(scaled, p), c * evaluate(f, p));
  }
}

TEST(Evaluate, T1RelationVanishesOnFirstComponent) {
  oracle::Gen gen(5);
  const Scalar beta = Scalar::rational(2, 7);
  const Mat2 tau1(1, beta, 0, 1);
  const Tensor f1 = T("x^2y-2xyx+yx^2") +
                    Scalar(2) * (Scalar(2) * beta - Scalar(1)) * (T("xy^2") - T("yxy")) +
                    Scalar(2) * beta * (beta - Scalar(1)) * T("y^3");
  for (int k = 0; k < 20; ++k) {
    const ProjPoint p = gen.point();
    EXPECT_TRUE(evaluate(f1, PointTriple{p, act(tau1, p), act(tau1 * tau1, p)}).is_zero());
  }
}

TEST(Evaluate, DualMapTransport) {
  oracle::Gen gen(77);
  for (int k = 0; k < 50; ++k) {
    const Tensor f = gen.tensor(3);
    const std::vector<Mat2> maps{gen.invertible(), gen.invertible(), gen.invertible()};
    const PointTriple p{gen.point(), gen.point(), gen.point()};
    const PointTriple moved{act(maps[0], p[0]), act(maps[1], p[1]), act(maps[2], p[2])};
    // Up to the nonzero factor from canonical representatives, the two values agree.
    EXPECT_EQ(evaluate(apply_slotwise(maps, f), p).is_zero(), evaluate(f, moved).is_zero());
  }
}

TEST(RelationSpace, SpanEquality) {
  const Tensor f = T("x^2y");
  const Tensor g = T("xy^2");
  EXPECT_TRUE(span_equal(RelationSpace(f, g), RelationSpace(f + g, g)));
  EXPECT_FALSE(span_equal(RelationSpace(f, g), RelationSpace(f, T("yx^2"))));
  EXPECT_THROW(RelationSpace(f, Scalar(2) * f), Error);
}

TEST(KernelOfEvaluations, EmptyRowsFail) {
  try {
    kernel_of_evaluations({});
    FAIL() << "expected failure";
  } catch (const KernelDimensionError& e) {
    EXPECT_EQ(e.kernel_dim(), 8U);
    EXPECT_EQ(e.rank(), 0U);
  }
}

TEST(KernelOfEvaluations, TypeP1AtTwo) {
  // Triples (p, q, tau p) with tau = diag(1, 2).
  oracle::Gen gen(1);
  std::vector<PointTriple> rows;
  for (int k = 0; k < 12; ++k) {
    const ProjPoint p = gen.point();
    rows.push_back({p, gen.point(), act(Mat2::diag(1, 2), p)});
  }
  EXPECT_TRUE(span_equal(kernel_of_evaluations(rows), RelationSpace(T("x^2y-2yx^2"), T("xy^2-2y^2x"))));
}

TEST(TensorText, RenderAndParse) {
  EXPECT_EQ(render_tensor(T("x^2y-yx^2+yxy")), "x^2y-yx^2+yxy");
  EXPECT_EQ(render_tensor(T("2*xyx-1/2*y^3")), "2*xyx-1/2*y^3");
  EXPECT_EQ(render_tensor(Tensor(3)), "0");
  EXPECT_EQ(T("xxy"), T("x^2y"));
  EXPECT_EQ(T("(1+2*i)*xy"), Tensor::monomial("xy", Scalar(1, 2)));
  EXPECT_EQ(parse_tensor("0", 3), Tensor(3));
  EXPECT_THROW(parse_tensor("x^2+y"), ParseError);
  EXPECT_THROW(parse_tensor("3"), ParseError);
  EXPECT_THROW(parse_tensor("xz"), ParseError);
  oracle::Gen gen(3);
  for (int k = 0; k < 100; ++k) {
    const Tensor t = gen.tensor(1 + static_cast<int>(k % 4));
    EXPECT_EQ(parse_tensor(render_tensor(t), t.degree()), t) << render_tensor(t);
  }
}
