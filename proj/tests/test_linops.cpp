// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "linhull/error.hpp"
#include "linhull/frob.hpp"
#include "linhull/linops.hpp"
#include "support.hpp"

using namespace linhull;
using linhull::testutil::random_elem;
using linhull::testutil::random_qpoly;

TEST(QPoly, EvaluationExamples) {
  const auto T = FieldTower::build(2, 1, 2);
  const auto a = T->generator();
  EXPECT_EQ(QPoly::frobenius(T, 1).eval(a), T->add(a, T->one()));
  EXPECT_EQ(QPoly::identity(T).eval(a), a);
  for (auto x : T->elements()) EXPECT_EQ(QPoly::zero(T).eval(x), T->zero());
  const auto T64 = FieldTower::build(2, 2, 3);
  for (auto x : T64->elements()) EXPECT_EQ(qpoly_eval(QPoly::frobenius(T64, 1), x), T64->pow(x, 4));
}

TEST(QPoly, FoldsHighIndices) {
  const auto T = FieldTower::build(3, 1, 2);
  const auto c = T->from_int(2);
  EXPECT_EQ(QPoly(T, {T->zero(), T->zero(), c}), QPoly::monomial(T, 0, c));
  EXPECT_EQ(QPoly::frobenius(T, 2), QPoly::identity(T));
}

TEST(QPoly, CompositionMatchesPointwise) {
  std::mt19937_64 rng(10);
  const auto T = FieldTower::build(3, 1, 3);
  for (int it = 0; it < 20; ++it) {
    const QPoly a = random_qpoly(T, rng), b = random_qpoly(T, rng);
    const QPoly ab = qpoly_compose(a, b);
    for (auto x : T->elements()) ASSERT_EQ(ab.eval(x), a.eval(b.eval(x)));
  }
}

TEST(QPoly, ComposeRejectsForeignTowers) {
  const auto A = FieldTower::build(2, 1, 3), B = FieldTower::build(2, 1, 3);
  try {
    qpoly_compose(QPoly::identity(A), QPoly::identity(B));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TowerMismatch);
  }
}

TEST(Adjoint, Examples) {
  const auto T = FieldTower::build(2, 2, 3);
  EXPECT_EQ(qpoly_adjoint(QPoly::identity(T)), QPoly::identity(T));
  EXPECT_EQ(qpoly_adjoint(QPoly::frobenius(T, 1)), QPoly::frobenius(T, 2));
  const auto c = T->generator();
  EXPECT_EQ(qpoly_adjoint(QPoly::monomial(T, 0, c)), QPoly::monomial(T, 0, c));
}

TEST(Adjoint, InvolutionAndReversal) {
  std::mt19937_64 rng(11);
  for (auto [p, r, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {5u, 1u, 2u}}) {
    const auto T = FieldTower::build(p, r, m);
    for (int it = 0; it < 20; ++it) {
      const QPoly a = random_qpoly(T, rng), b = random_qpoly(T, rng);
      ASSERT_EQ(qpoly_adjoint(qpoly_adjoint(a)), a);
      ASSERT_EQ(qpoly_adjoint(qpoly_compose(a, b)), qpoly_compose(qpoly_adjoint(b), qpoly_adjoint(a)));
    }
  }
}

TEST(Adjoint, TracePairingExhaustive) {
  std::mt19937_64 rng(12);
  const auto T = FieldTower::build(2, 1, 4);
  for (int it = 0; it < 5; ++it) {
    const QPoly L = random_qpoly(T, rng), Ld = qpoly_adjoint(L);
    for (auto x : T->elements())
      for (auto y : T->elements())
        ASSERT_EQ(T->trace(T->mul(L.eval(x), y)), T->trace(T->mul(x, Ld.eval(y))));
  }
}

TEST(Frobenius, IsATraceIsometry) {
  const auto T = FieldTower::build(3, 1, 3);
  for (std::uint32_t k = 0; k < 3; ++k) {
    const QPoly F = QPoly::frobenius(T, k);
    for (auto x : T->elements())
      for (auto y : T->elements()) ASSERT_EQ(T->trace(T->mul(F.eval(x), F.eval(y))), T->trace(T->mul(x, y)));
  }
}

TEST(OpMatrix, ColumnsAreCoordinatesOfImages) {
  std::mt19937_64 rng(13);
  const auto T = FieldTower::build(3, 2, 2);
  const Basis b = find_normal_element(T);
  const QPoly L = random_qpoly(T, rng);
  const Matrix A = op_matrix(L, b);
  EXPECT_TRUE(A.entries_in_base_field());
  for (std::size_t j = 0; j < b.size(); ++j) EXPECT_EQ(A.col(j), b.coords(L.eval(b[j])));
  for (int it = 0; it < 20; ++it) {
    const auto x = random_elem(*T, rng);
    EXPECT_EQ(A.apply(b.coords(x)), b.coords(L.eval(x)));
  }
}

TEST(OpRank, MatchesImageCount) {
  std::mt19937_64 rng(14);
  const auto T = FieldTower::build(2, 1, 4);
  for (int it = 0; it < 20; ++it) {
    QPoly L = random_qpoly(T, rng);
    if (it % 4 == 0) L = pencil_member(T->one(), T->one(), QPoly::frobenius(T, 2));
    std::set<FieldElem> image;
    for (auto x : T->elements()) image.insert(L.eval(x));
    std::size_t dim = 0;
    while ((std::size_t{1} << dim) < image.size()) ++dim;
    EXPECT_EQ(op_rank(L), dim);
    EXPECT_EQ(op_kernel_basis(L).size(), 4 - dim);
    EXPECT_EQ(op_image_basis(L).size(), dim);
    for (auto k : op_kernel_basis(L)) EXPECT_EQ(L.eval(k), T->zero());
    for (auto y : op_image_basis(L)) EXPECT_TRUE(image.count(y));
  }
}

TEST(OpKernel, PrimeFieldKernelOfXPlusXsq) {
  const auto T = FieldTower::build(2, 1, 2);
  const auto ker = op_kernel_basis(pencil_member(T->one(), T->one(), QPoly::frobenius(T, 1)));
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0], T->one());
}

TEST(OpRank, SpecialRhoOverGf64) {
  const auto T = FieldTower::build(2, 2, 3);
  for (const char* s : {"a^3+a^2+a", "a^3+a^2+a+1", "a^4+a^2+a+1", "a^5+a", "a^5+a^4+a^2+1"})
    EXPECT_EQ(op_rank(pencil_member(T->parse(s), T->one(), QPoly::frobenius(T, 1))), 2u) << s;
}

TEST(Linearity, RandomOperatorsAreLinear) {
  std::mt19937_64 rng(15);
  const auto T = FieldTower::build(5, 1, 3);
  for (int it = 0; it < 10; ++it) EXPECT_TRUE(check_linearity(random_qpoly(T, rng), 50, it));
}

TEST(Pencil, MemberIsLambdaXPlusMuL) {
  std::mt19937_64 rng(16);
  const auto T = FieldTower::build(3, 1, 3);
  const QPoly L = random_qpoly(T, rng);
  const auto l = random_elem(*T, rng), mu = random_elem(*T, rng);
  const QPoly phi = pencil_member(l, mu, L);
  for (auto x : T->elements()) ASSERT_EQ(phi.eval(x), T->add(T->mul(l, x), T->mul(mu, L.eval(x))));
}
