// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <string>

#include "json.hpp"
#include "linhull/linhull.h"

namespace {

using json = nlohmann::json;

json take(char* s) {
  json j = json::parse(s);
  lh_string_free(s);
  return j;
}

struct Tower {
  lh_tower* h = nullptr;
  Tower(uint32_t p, uint32_t r, uint32_t m) { EXPECT_EQ(lh_tower_build(p, r, m, 0, &h), LH_OK); }
  ~Tower() { lh_tower_free(h); }
};

}  // namespace

TEST(CApi, VersionAndNames) {
  EXPECT_GE(lh_abi_version(), 1);
  EXPECT_STREQ(lh_status_name(LH_OK), "OK");
  EXPECT_NE(std::string(lh_status_name(LH_ERR_MISMATCH)), "");
}

TEST(CApi, TowerErrors) {
  lh_tower* t = nullptr;
  EXPECT_EQ(lh_tower_build(4, 1, 1, 0, &t), LH_ERR_NOT_PRIME);
  EXPECT_EQ(t, nullptr);
  EXPECT_NE(std::string(lh_last_error()), "");
  EXPECT_EQ(lh_tower_build(2, 1, 10, 100, &t), LH_ERR_SIZE_CAP);
  EXPECT_EQ(lh_tower_build(2, 1, 2, 0, nullptr), LH_ERR_INVALID_ARGUMENT);
  lh_tower_free(nullptr);
  lh_family_free(nullptr);
  lh_string_free(nullptr);
}

TEST(CApi, FieldInfo) {
  Tower t(2, 2, 3);
  char* out = nullptr;
  ASSERT_EQ(lh_field_info_json(t.h, &out), LH_OK);
  const json j = take(out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("order_factorization"), "63 = 3^2 * 7");
}

TEST(CApi, HullAndSweep) {
  Tower t(2, 2, 3);
  lh_family* f = nullptr;
  ASSERT_EQ(lh_family_frobenius(t.h, 1, &f), LH_OK);
  char* out = nullptr;
  ASSERT_EQ(lh_hull_json(f, "a^5+a^4+a^2+1", "1", &out), LH_OK);
  json j = take(out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("report").at("hull_dim"), 1);
  EXPECT_TRUE(j.at("routes_agree").get<bool>());
  EXPECT_EQ(lh_hull_json(f, "0", "0", &out), LH_ERR_DEGENERATE_INPUT);
  EXPECT_EQ(lh_hull_json(f, "b", "1", &out), LH_ERR_PARSE);
  ASSERT_EQ(lh_sweep_json(f, 1, 0, 0, &out), LH_OK);
  j = take(out);
  EXPECT_EQ(j.at("total"), 65);
  ASSERT_EQ(lh_spectrum_json(f, 0, 0, &out), LH_OK);
  j = take(out);
  EXPECT_EQ(j.at("schema"), 1);
  ASSERT_EQ(lh_discriminant_json(f, &out), LH_OK);
  j = take(out);
  EXPECT_EQ(j.at("schema"), 1);
  lh_family_free(f);
  EXPECT_EQ(lh_family_frobenius(t.h, 3, &f), LH_ERR_INVALID_ARGUMENT);
}

TEST(CApi, GeneralFamilyAndRdCode) {
  Tower t(2, 1, 4);
  lh_family* f = nullptr;
  ASSERT_EQ(lh_family_general(t.h, "0,0,1,0", &f), LH_OK);
  char* out = nullptr;
  ASSERT_EQ(lh_sweep_json(f, 0, 0, 1, &out), LH_OK);
  EXPECT_EQ(take(out).at("total"), 3);
  lh_family_free(f);
  EXPECT_EQ(lh_family_general(t.h, "0,x", &f), LH_ERR_PARSE);
  ASSERT_EQ(lh_rdcode_json(t.h, "0,1,0,0\n0,1,1,1\n", &out), LH_OK);
  const json j = take(out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("hull_dim"), 1);
  EXPECT_EQ(lh_rdcode_json(t.h, "1,0,0,0\n", &out), LH_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(lh_rdcode_json(t.h, "0,1,0,0\n0,1,0,0\n", &out), LH_ERR_DEPENDENT_GENERATORS);
}

TEST(CApi, VerifyGolden) {
  char* out = nullptr;
  ASSERT_EQ(lh_verify_golden_json(&out), LH_OK);
  const json j = take(out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_TRUE(j.at("all_pass").get<bool>());
}
