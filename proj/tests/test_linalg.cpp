#include "asreg/linalg.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using asreg::Mat;
using asreg::Mat2;
using asreg::Scalar;

TEST(Rref, CanonicalForSameRowSpace) {
  Mat a(0, 3);
  a.append_row(asreg::Vec{1, 2, 3});
  a.append_row(asreg::Vec{2, 4, 7});
  Mat b(0, 3);
  b.append_row(asreg::Vec{3, 6, 10});
  b.append_row(asreg::Vec{0, 0, 5});
  EXPECT_EQ(asreg::rref(a).form, asreg::rref(b).form);
  EXPECT_EQ(asreg::rref(a).pivots, (std::vector<std::size_t>{0, 2}));
}

TEST(Nullspace, VectorsAreInKernel) {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m(3, 5);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = gen.gaussian();
    const auto ker = asreg::nullspace(m);
    EXPECT_EQ(ker.size() + asreg::rank(m), 5U);
    for (const auto& v : ker) {
      for (std::size_t r = 0; r < 3; ++r) {
        Scalar s;
        for (std::size_t c = 0; c < 5; ++c) s += m(r, c) * v[c];
        EXPECT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(Solve, ConsistentAndInconsistent) {
  Mat m(0, 2);
  m.append_row(asreg::Vec{1, 1});
  m.append_row(asreg::Vec{2, 2});
  EXPECT_FALSE(asreg::solve(m, {1, 3}).has_value());
  const auto x = asreg::solve(m, {1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], Scalar(1));
}

TEST(Mat2, ProductInverseAndProportionality) {
  oracle::Gen gen(4);
  for (int k = 0; k < 50; ++k) {
    const Mat2 a = gen.invertible();
    const Mat2 b = gen.matrix();
    EXPECT_EQ(a * b, oracle::mul(a, b));
    EXPECT_EQ(a * a.inverse(), Mat2::identity());
    EXPECT_TRUE((gen.nonzero_gaussian() * a).proportional_to(a));
  }
  EXPECT_FALSE(Mat2::diag(2, 1).proportional_to(Mat2::identity()));
  EXPECT_EQ(Mat2(1, 1, 0, 1).pow(3), Mat2(1, 3, 0, 1));
  EXPECT_EQ(Mat2(1, 1, 0, 1).pow(-2), Mat2(1, -2, 0, 1));
}

TEST(IntegerGrid, EnumeratesProduct) {
  EXPECT_EQ(asreg::integer_grid(2, 3).size(), 9U);
  EXPECT_EQ(asreg::integer_grid(0, 3).size(), 1U);
}
