// SPDX-License-Identifier: Apache-2.0
//
// Fixed reference computations for GF(4)/GF(2) with L = x^2 and for
// GF(64)/GF(4) with L = x^4.
#pragma once

#include <string>
#include <vector>

namespace linhull {

struct GoldenCheck {
  std::string suite;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<GoldenCheck> verify_f4();
std::vector<GoldenCheck> verify_f64();

}  // namespace linhull
