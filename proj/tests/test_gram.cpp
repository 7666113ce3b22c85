// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "linhull/error.hpp"
#include "linhull/gram.hpp"
#include "linhull/oracle.hpp"
#include "linhull/pencil.hpp"
#include "support.hpp"

using namespace linhull;
using linhull::testutil::random_base;
using linhull::testutil::random_elem;
using linhull::testutil::random_qpoly;

namespace {

Matrix pairwise_traces(const QPoly& phi, const Basis& b) {
  const auto& t = *b.tower();
  Matrix g(b.tower(), b.size(), b.size());
  for (std::size_t s = 0; s < b.size(); ++s)
    for (std::size_t u = 0; u < b.size(); ++u) g(s, u) = t.trace(t.mul(phi.eval(b[s]), phi.eval(b[u])));
  return g;
}

std::vector<FieldElem> base_vector(const FieldTower& t, std::uint64_t idx, std::size_t len) {
  std::vector<FieldElem> v;
  for (std::size_t i = 0; i < len; ++i, idx /= t.q()) v.push_back(t.base_elements()[idx % t.q()]);
  return v;
}

}  // namespace

TEST(Gram, IdentityInBasisOneAlpha) {
  const auto T = FieldTower::build(2, 1, 2);
  const Basis b = Basis::from_elements(T, {T->one(), T->generator()});
  const auto o = T->one(), z = T->zero();
  EXPECT_EQ(gram_of_operator(QPoly::identity(T), b), Matrix::from_rows(T, {{z, o}, {o, o}}));
}

TEST(Gram, ZeroOperator) {
  const auto T = FieldTower::build(3, 1, 3);
  const Basis b = find_normal_element(T);
  EXPECT_TRUE(gram_of_operator(QPoly::zero(T), b).is_zero());
  try {
    hull_dim(QPoly::zero(T), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(Gram, SymmetricAndEqualsPairwiseTraces) {
  std::mt19937_64 rng(20);
  const auto T = FieldTower::build(3, 1, 2);
  const Basis b = find_normal_element(T);
  for (int it = 0; it < 30; ++it) {
    const QPoly phi = random_qpoly(T, rng);
    const Matrix g = gram_of_operator(phi, b);
    EXPECT_TRUE(g.is_symmetric());
    EXPECT_TRUE(g.entries_in_base_field());
    EXPECT_EQ(g, pairwise_traces(phi, b));
  }
}

TEST(Structure, SingleGenerator) {
  const auto T = FieldTower::build(2, 2, 3);
  const Basis b = find_normal_element(T);
  const auto gamma = structure_matrices({QPoly::identity(T)}, b);
  EXPECT_EQ(gamma[0][0], gram_of_operator(QPoly::identity(T), b));
}

TEST(Structure, PencilBlocks) {
  const auto T = FieldTower::build(2, 2, 3);
  const Basis b = find_normal_element(T);
  const QPoly L = QPoly::frobenius(T, 1);
  const auto gamma = structure_matrices({QPoly::identity(T), L}, b);
  const PencilData p = build_pencil(L, b);
  EXPECT_EQ(gamma[0][0], p.G0);
  EXPECT_EQ(gamma[0][1] + gamma[1][0], p.G1);
  EXPECT_EQ(gamma[1][1], p.G2);
  EXPECT_EQ(gamma[0][1].transpose(), gamma[1][0]);
}

TEST(Structure, DecompositionExhaustiveOverBaseField) {
  std::mt19937_64 rng(21);
  const auto T = FieldTower::build(2, 1, 3);
  const Basis b = find_normal_element(T);
  const std::vector<QPoly> F{random_qpoly(T, rng), random_qpoly(T, rng), random_qpoly(T, rng)};
  const auto gamma = structure_matrices(F, b);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    const auto alpha = base_vector(*T, idx, 3);
    EXPECT_EQ(combine_structure(gamma, alpha), gram_of_operator(combine_operators(F, alpha), b));
  }
}

TEST(HullDim, F4Pencil) {
  const auto T = FieldTower::build(2, 1, 2);
  const Basis b = Basis::from_elements(T, {T->one(), T->generator()});
  const QPoly L = QPoly::frobenius(T, 1);
  const auto o = T->one(), z = T->zero();
  for (auto [l, mu] : {std::pair{o, z}, {z, o}}) {
    const auto rep = hull_dim(pencil_member(l, mu, L), b);
    EXPECT_EQ(rep.hull_dim, 0u);
    EXPECT_EQ(rep.classification, HullClass::LCD);
  }
  const auto rep = hull_dim(pencil_member(o, o, L), b);
  EXPECT_EQ(rep.rank_operator, 1u);
  EXPECT_EQ(rep.rank_gram, 0u);
  EXPECT_EQ(rep.hull_dim, 1u);
  EXPECT_EQ(rep.classification, HullClass::SelfOrthogonal);
  EXPECT_EQ(rep.ebits, 1u);
}

TEST(HullDim, SpecialRhoOverGf64) {
  const auto T = FieldTower::build(2, 2, 3);
  const Basis b = find_normal_element(T);
  for (const char* s : {"a^3+a^2+a", "a^3+a^2+a+1", "a^4+a^2+a+1", "a^5+a", "a^5+a^4+a^2+1"}) {
    const auto rep = hull_dim(pencil_member(T->parse(s), T->one(), QPoly::frobenius(T, 1)), b);
    EXPECT_EQ(rep.rank_operator, 2u);
    EXPECT_EQ(rep.rank_gram, 1u);
    EXPECT_EQ(rep.hull_dim, 1u);
    EXPECT_EQ(rep.classification, HullClass::Intermediate);
  }
}

TEST(HullDim, PropertiesOnRandomOperators) {
  std::mt19937_64 rng(22);
  for (auto [p, r, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {5u, 1u, 2u}, {3u, 1u, 4u}}) {
    const auto T = FieldTower::build(p, r, m);
    const Basis b = find_normal_element(T);
    for (int it = 0; it < 30; ++it) {
      QPoly phi = random_qpoly(T, rng);
      if (it % 5 == 0) phi = pencil_member(random_elem(*T, rng), T->one(), QPoly::frobenius(T, 1));
      if (phi.is_zero()) continue;
      const auto rep = hull_dim(phi, b);
      const Matrix g = gram_of_operator(phi, b);
      ASSERT_EQ(rep.hull_dim, hull_by_definition(phi));
      ASSERT_EQ(rep.hull_dim, hull_via_adjoint(phi));
      ASSERT_EQ(rep.classification == HullClass::SelfOrthogonal, g.is_zero());
      if (!g.is_zero()) ASSERT_LE(rep.hull_dim, m / 2);
      for (auto t : T->base_elements()) {
        if (t.packed == 0) continue;
        const auto scaled = hull_dim(phi.scaled(t), b);
        ASSERT_EQ(scaled.rank_gram, rep.rank_gram);
        ASSERT_EQ(scaled.hull_dim, rep.hull_dim);
        ASSERT_EQ(gram_of_operator(phi.scaled(t), b), g.scaled(T->mul(t, t)));
      }
    }
  }
}

TEST(NullSpace, InvertibleG0GivesZero) {
  const auto T = FieldTower::build(2, 2, 3);
  const Basis b = find_normal_element(T);
  const auto gamma = structure_matrices({QPoly::identity(T), QPoly::frobenius(T, 1)}, b);
  EXPECT_TRUE(universal_null_space(gamma).empty());
}

TEST(NullSpace, ZeroGeneratorsGiveEverything) {
  const auto T = FieldTower::build(3, 1, 3);
  const Basis b = find_normal_element(T);
  EXPECT_EQ(universal_null_space(structure_matrices({QPoly::zero(T), QPoly::zero(T)}, b)).size(), 3u);
}

TEST(NullSpace, MatchesEnumeratedCommonKernel) {
  std::mt19937_64 rng(23);
  const auto T = FieldTower::build(2, 1, 4);
  const Basis b = find_normal_element(T);
  for (int it = 0; it < 20; ++it) {
    // Low-rank generators so the common kernel is often nontrivial.
    std::vector<QPoly> F;
    const QPoly proj = pencil_member(T->one(), T->one(), QPoly::frobenius(T, rng() % 3 + 1));
    for (int i = 0; i < 2; ++i) F.push_back(qpoly_compose(random_qpoly(T, rng), proj));
    const auto gamma = structure_matrices(F, b);
    std::size_t common = 0;
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
      const auto v = base_vector(*T, idx, 4);
      bool in_all = true;
      for (const auto& row : gamma)
        for (const auto& g : row)
          for (auto x : g.apply(v)) in_all = in_all && x.packed == 0;
      common += in_all;
    }
    const auto V = universal_null_space(gamma);
    EXPECT_EQ(std::size_t{1} << V.size(), common);
    for (std::uint64_t idx = 1; idx < 16; ++idx) {
      const auto alpha = base_vector(*T, idx, 2);
      const auto phi = combine_operators(F, alpha);
      const Matrix g = combine_structure(gamma, alpha);
      for (const auto& v : V)
        for (auto x : g.apply(v)) ASSERT_EQ(x.packed, 0u);
      if (phi.is_zero()) continue;
      const long bound = static_cast<long>(V.size()) - static_cast<long>(op_kernel_basis(phi).size());
      ASSERT_GE(static_cast<long>(hull_dim(phi, b).hull_dim), bound);
    }
  }
}

TEST(Orbits, RepresentativeIsCanonical) {
  std::mt19937_64 rng(24);
  const auto T = FieldTower::build(3, 2, 2);
  const Basis b = find_normal_element(T);
  for (int it = 0; it < 50; ++it) {
    std::vector<FieldElem> alpha{random_elem(*T, rng), testutil::random_nonzero(*T, rng)};
    const auto rep = canonical_orbit_rep(T, alpha, b);
    bool in_orbit = false;
    for (auto t : T->base_elements()) {
      if (t.packed == 0) continue;
      std::vector<FieldElem> s{T->mul(t, alpha[0]), T->mul(t, alpha[1])};
      ASSERT_EQ(canonical_orbit_rep(T, s, b), rep);
      in_orbit = in_orbit || s == rep;
    }
    ASSERT_TRUE(in_orbit);
  }
  EXPECT_THROW(canonical_orbit_rep(T, {T->zero(), T->zero()}, b), Error);
}

TEST(Orbits, StrataCoverTheOrbitSpace) {
  const auto T = FieldTower::build(3, 1, 2);
  const Basis b = find_normal_element(T);
  const auto counts = orbit_strata({QPoly::identity(T), QPoly::frobenius(T, 1)}, b, 1 << 12);
  std::uint64_t total = 0;
  for (auto [h, n] : counts) total += n;
  EXPECT_EQ(total, (81u - 1) / 2);
  try {
    orbit_strata({QPoly::identity(T), QPoly::frobenius(T, 1)}, b, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeCapExceeded);
  }
}

TEST(Classify, ByRanks) {
  EXPECT_EQ(classify(2, 2).classification, HullClass::LCD);
  EXPECT_EQ(classify(2, 0).classification, HullClass::SelfOrthogonal);
  EXPECT_EQ(classify(3, 2).classification, HullClass::Intermediate);
  EXPECT_EQ(classify(3, 2).hull_dim, 1u);
}
