// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "linhull/error.hpp"
#include "linhull/oracle.hpp"
#include "linhull/rdhull.hpp"
#include "support.hpp"

using namespace linhull;
using linhull::testutil::random_elem;

namespace {

QPoly random_generator(const TowerPtr& T, std::mt19937_64& rng) {
  std::vector<FieldElem> c{T->zero()};
  for (std::uint32_t i = 1; i < T->m(); ++i) c.push_back(random_elem(*T, rng));
  return QPoly(T, c);
}

QPoly sum_of_frobenius(const TowerPtr& T, std::initializer_list<std::uint32_t> exps) {
  QPoly out = QPoly::zero(T);
  for (auto e : exps) out = out + QPoly::frobenius(T, e);
  return out;
}

}  // namespace

TEST(Pairing, Examples) {
  std::mt19937_64 rng(40);
  const auto T = FieldTower::build(3, 1, 3);
  EXPECT_EQ(delsarte_pair(QPoly::identity(T), QPoly::identity(T)), T->one());
  for (int it = 0; it < 20; ++it) {
    const QPoly f = random_generator(T, rng), g = testutil::random_qpoly(T, rng), h = testutil::random_qpoly(T, rng);
    EXPECT_EQ(delsarte_pair(QPoly::identity(T), f), T->zero());
    EXPECT_EQ(delsarte_pair(g, h), delsarte_pair(h, g));
    const auto c = random_elem(*T, rng);
    EXPECT_EQ(delsarte_pair(g.scaled(c) + f, h), T->add(T->mul(c, delsarte_pair(g, h)), delsarte_pair(f, h)));
    FieldElem direct = T->zero();
    for (std::size_t l = 0; l < 3; ++l) direct = T->add(direct, T->mul(g[l], h[l]));
    EXPECT_EQ(delsarte_pair(g, h), direct);
  }
}

TEST(GeneratorGram, OneGenerator) {
  std::mt19937_64 rng(41);
  const auto T = FieldTower::build(2, 2, 4);
  const QPoly f = random_generator(T, rng);
  FieldElem sigma = T->zero();
  for (std::size_t i = 1; i < 4; ++i) sigma = T->add(sigma, T->mul(f[i], f[i]));
  const Matrix M = generator_gram(make_rd_code(T, {f}));
  ASSERT_EQ(M.rows(), 1u);
  EXPECT_EQ(M(0, 0), sigma);
  const auto rep = rd_hull(make_rd_code(T, {f}));
  EXPECT_EQ(rep.hull_dim, sigma.packed ? 0u : 1u);
}

TEST(GeneratorGram, DisjointSupportsAreDiagonal) {
  const auto T = FieldTower::build(3, 1, 4);
  const Matrix M = generator_gram(make_rd_code(T, {QPoly::frobenius(T, 1), QPoly::monomial(T, 3, T->generator())}));
  EXPECT_EQ(M(0, 1), T->zero());
  EXPECT_EQ(M(1, 0), T->zero());
  EXPECT_EQ(M(0, 0), T->one());
}

TEST(RdHull, TwoGeneratorsInvertible) {
  const auto T = FieldTower::build(2, 2, 4);
  const auto rep = rd_hull(make_rd_code(T, {QPoly::frobenius(T, 1), QPoly::frobenius(T, 2)}));
  EXPECT_EQ(rep.rank_M, 2u);
  EXPECT_EQ(rep.hull_dim, 0u);
  EXPECT_TRUE(rep.is_lcd);
  EXPECT_TRUE(rep.hull_basis.empty());
}

TEST(RdHull, TwoGeneratorsRankOne) {
  const auto T = FieldTower::build(2, 1, 4);
  const QPoly f = QPoly::frobenius(T, 1), g = sum_of_frobenius(T, {1, 2, 3});
  const auto code = make_rd_code(T, {f, g});
  const auto rep = rd_hull(code);
  EXPECT_EQ(rep.rank_M, 1u);
  EXPECT_EQ(rep.hull_dim, 1u);
  ASSERT_EQ(rep.hull_basis.size(), 1u);
  EXPECT_EQ(rep.hull_basis[0], sum_of_frobenius(T, {2, 3}));
  EXPECT_EQ(rep.hull_dim, rd_hull_by_definition(code.all_generators()));
}

TEST(RdHull, TwoGeneratorsSelfOrthogonal) {
  const auto T = FieldTower::build(2, 1, 5);
  const QPoly f = sum_of_frobenius(T, {1, 2}), g = sum_of_frobenius(T, {3, 4});
  const auto code = make_rd_code(T, {f, g});
  const auto rep = rd_hull(code);
  EXPECT_TRUE(rep.M.is_zero());
  EXPECT_TRUE(rep.generators_self_orthogonal);
  EXPECT_TRUE(rep.ambient_dimension_warning);
  EXPECT_EQ(rep.hull_dim, 2u);
  EXPECT_EQ(rep.hull_basis.size(), 2u);
  EXPECT_EQ(rd_hull_by_definition(code.all_generators()), 2u);
}

TEST(RdHull, RandomCodesAgreeWithSystemSolve) {
  std::mt19937_64 rng(42);
  for (auto [p, r, m] : {std::tuple{2u, 2u, 4u}, {3u, 2u, 3u}, {2u, 1u, 5u}}) {
    const auto T = FieldTower::build(p, r, m);
    for (int it = 0; it < 25; ++it) {
      const std::size_t k = 1 + rng() % (m - 1);
      std::vector<QPoly> gens;
      for (std::size_t i = 0; i < k; ++i) gens.push_back(random_generator(T, rng));
      const RdCode code = make_rd_code(T, gens);
      if (!code.independent) {
        EXPECT_THROW(rd_hull(code), Error);
        continue;
      }
      const auto rep = rd_hull(code);
      ASSERT_EQ(rep.hull_dim, k - rep.rank_M);
      ASSERT_EQ(rep.hull_dim, rd_hull_by_definition(code.all_generators()));
      ASSERT_EQ(rep.is_lcd, rep.M.det() != T->zero());
      ASSERT_EQ(rep.generators_self_orthogonal, rep.M.is_zero());
      for (const auto& h : rep.hull_basis)
        for (const auto& g : code.all_generators()) ASSERT_EQ(delsarte_pair(h, g), T->zero());
      bool x_in_dual = true;
      for (const auto& g : code.all_generators()) x_in_dual = x_in_dual && delsarte_pair(QPoly::identity(T), g).packed == 0;
      ASSERT_FALSE(x_in_dual);
    }
  }
}

TEST(RdHull, Errors) {
  const auto T = FieldTower::build(2, 1, 3);
  try {
    make_rd_code(T, {QPoly::identity(T)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  const RdCode dup = make_rd_code(T, {QPoly::frobenius(T, 1), QPoly::frobenius(T, 1)});
  EXPECT_FALSE(dup.independent);
  try {
    generator_gram(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentGenerators);
  }
  EXPECT_THROW(rd_hull_by_definition(dup.all_generators()), Error);
}

TEST(Degeneracy, Examples) {
  std::mt19937_64 rng(43);
  const auto T2 = FieldTower::build(2, 1, 2);
  const QPoly xq_minus_x = pencil_member(T2->one(), T2->one(), QPoly::frobenius(T2, 1));
  const auto rep = is_degenerate(T2, {xq_minus_x, xq_minus_x.scaled(T2->generator())});
  EXPECT_TRUE(rep.degenerate);
  std::size_t common = 0;
  for (auto x : T2->elements()) common += xq_minus_x.eval(x) == T2->zero();
  EXPECT_EQ(std::size_t{1} << rep.common_kernel.size(), common);

  const auto T = FieldTower::build(2, 2, 3);
  EXPECT_FALSE(is_degenerate(make_rd_code(T, {random_generator(T, rng)})).degenerate);
  for (int it = 0; it < 10; ++it) {
    std::vector<QPoly> gens{random_generator(T, rng), random_generator(T, rng)};
    const auto d = is_degenerate(T, gens);
    std::size_t n = 0;
    for (auto x : T->elements()) n += gens[0].eval(x) == T->zero() && gens[1].eval(x) == T->zero();
    std::size_t size = 1;
    for (std::size_t i = 0; i < d.common_kernel.size(); ++i) size *= 4;
    EXPECT_EQ(size, n);
  }
}
