// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "linhull/error.hpp"
#include "linhull/oracle.hpp"
#include "linhull/sweep.hpp"
#include "support.hpp"

using namespace linhull;

TEST(Sweep, Gf64TopField) {
  const auto T = FieldTower::build(2, 2, 3);
  const StrataTable t = sweep_p1(T, Family::frobenius(1), ParamField::Top);
  EXPECT_EQ(t.total, 65u);
  EXPECT_EQ(t.counts.at(0), 60u);
  EXPECT_EQ(t.counts.at(1), 5u);
  EXPECT_EQ(t.counts.size(), 2u);
  ASSERT_EQ(t.records.size(), 65u);
  EXPECT_EQ(t.records[0].key, "inf");
  EXPECT_EQ(t.records[1].key, "0");
  EXPECT_EQ(t.records[2].key, "1");
  EXPECT_DOUBLE_EQ(t.lcd_density, 60.0 / 65.0);
}

TEST(Sweep, F4GeneralFamilyBaseField) {
  const auto T = FieldTower::build(2, 1, 2);
  const StrataTable t = sweep_p1(T, Family::general(QPoly::frobenius(T, 1)), ParamField::Base);
  EXPECT_EQ(t.total, 3u);
  ASSERT_EQ(t.records.size(), 3u);
  EXPECT_EQ(t.records[0].hull_dim, 0u);
  EXPECT_EQ(t.records[1].hull_dim, 0u);
  EXPECT_EQ(t.records[2].key, "1");
  EXPECT_EQ(t.records[2].hull_dim, 1u);
  EXPECT_EQ(t.records[2].rank_gram, std::optional<std::size_t>(0));
}

TEST(Sweep, PointwiseOracle) {
  for (auto [p, r, m, k] : {std::tuple{3u, 1u, 2u, 1u}, {2u, 1u, 4u, 2u}, {3u, 1u, 3u, 1u}}) {
    const auto T = FieldTower::build(p, r, m);
    for (auto field : {ParamField::Base, ParamField::Top}) {
      const StrataTable t = sweep_p1(T, Family::frobenius(k), field);
      EXPECT_EQ(t.total, (field == ParamField::Base ? T->q() : T->size()) + 1);
      std::uint64_t sum = 0;
      for (auto [h, n] : t.counts) sum += n;
      EXPECT_EQ(sum, t.total);
      for (const auto& rec : t.records)
        ASSERT_EQ(rec.hull_dim, hull_by_definition(pencil_member(rec.lambda, rec.mu, QPoly::frobenius(T, k))));
    }
  }
}

TEST(Sweep, GeneralFamilyRoutesAgreeWithOracle) {
  std::mt19937_64 rng(70);
  const auto T = FieldTower::build(3, 1, 3);
  const QPoly L = testutil::random_qpoly(T, rng);
  for (auto field : {ParamField::Base, ParamField::Top}) {
    const StrataTable t = sweep_p1(T, Family::general(L), field);
    for (const auto& rec : t.records) {
      const QPoly phi = pencil_member(rec.lambda, rec.mu, L);
      if (phi.is_zero()) continue;
      ASSERT_EQ(rec.hull_dim, hull_by_definition(phi));
    }
  }
}

TEST(Sweep, CapEnforced) {
  const auto T = FieldTower::build(2, 2, 3);
  try {
    sweep_p1(T, Family::frobenius(1), ParamField::Top, 32);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeCapExceeded);
  }
  EXPECT_THROW(spectrum_affine(T, 1, ParamField::Top, 1000), Error);
}

TEST(Spectrum, AffineCountsScaleProjective) {
  for (auto [p, r, m, k] : {std::tuple{2u, 1u, 2u, 1u}, {3u, 1u, 2u, 1u}, {5u, 1u, 4u, 2u}, {2u, 2u, 3u, 1u}}) {
    const auto T = FieldTower::build(p, r, m);
    for (auto field : {ParamField::Base, ParamField::Top}) {
      if (field == ParamField::Top && T->size() > 64) continue;
      const StrataTable t = sweep_p1(T, Family::frobenius(k), field);
      const auto n = spectrum_affine(T, k, field);
      const std::uint64_t scale = (field == ParamField::Base ? T->q() : T->size()) - 1;
      ASSERT_EQ(n.size(), t.counts.size());
      for (auto [h, c] : t.counts) EXPECT_EQ(n.at(h), c * scale);
    }
  }
  const auto F4 = FieldTower::build(2, 1, 2);
  const auto n = spectrum_affine(F4, 1, ParamField::Base);
  EXPECT_EQ(n.at(0), 2u);
  EXPECT_EQ(n.at(1), 1u);
}

TEST(Ebits, Gf64Report) {
  const auto T = FieldTower::build(2, 2, 3);
  const EbitReport e = ebit_report(sweep_p1(T, Family::frobenius(1), ParamField::Top));
  ASSERT_EQ(e.strata.size(), 2u);
  EXPECT_EQ(e.strata[0].codes, 60u);
  EXPECT_EQ(e.strata[0].ebits, 0u);
  EXPECT_EQ(e.strata[1].codes, 5u);
  EXPECT_EQ(e.strata[1].ebits, 1u);
  EXPECT_EQ(e.strata[1].label, "d");
  EXPECT_EQ(e.strata[1].cases, std::set<std::string>{"(1,1)"});
}

TEST(Ebits, AllLcdIsFree) {
  const auto T = FieldTower::build(3, 1, 2);
  StrataTable t;
  t.counts[0] = 4;
  t.total = 4;
  t.lcd_density = 1.0;
  const EbitReport e = ebit_report(t);
  EXPECT_DOUBLE_EQ(e.zero_cost_fraction, 1.0);
  ASSERT_EQ(e.strata.size(), 1u);
  EXPECT_EQ(e.strata[0].ebits, 0u);
}

TEST(Ebits, StratumValuesOverF625) {
  const auto T = FieldTower::build(5, 1, 4);
  const StrataTable t = sweep_p1(T, Family::frobenius(2), ParamField::Base);
  for (const auto& rec : t.records)
    if (rec.bijective) EXPECT_TRUE(rec.hull_dim == 0 || rec.hull_dim == 2 || rec.hull_dim == 4) << rec.key;
  for (const auto& s : ebit_report(t).strata) EXPECT_NE(s.label, "other");
}
