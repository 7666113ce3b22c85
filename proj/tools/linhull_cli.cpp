// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C interface.
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linhull/linhull.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::optional<std::uint32_t> p, r, m, k;
  std::string format = "table";
  std::uint64_t cap = 0;
  std::string out;
  std::string L;
  std::string lambda, mu, rho;
  std::string field = "base";
  bool points = false;
  bool affine = false;
  std::string generator_file;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + scalar(e);
    return "[" + s + "]";
  }
  return v.dump();
}

bool is_record_array(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

bool is_matrix(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_array(); });
}

std::vector<std::string> columns(const json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

void render_records(std::ostream& os, const json& rows, const std::string& indent) {
  const auto cols = columns(rows);
  std::vector<std::size_t> w;
  for (const auto& c : cols) w.push_back(c.size());
  for (const auto& r : rows)
    for (std::size_t i = 0; i < cols.size(); ++i)
      w[i] = std::max(w[i], scalar(r.contains(cols[i]) ? r[cols[i]] : json()).size());
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "  " : indent + "  ") + cells[i] + std::string(w[i] - cells[i].size(), ' ');
    s.erase(s.find_last_not_of(' ') + 1);
    os << s << "\n";
  };
  line(cols);
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (const auto& c : cols) cells.push_back(scalar(r.contains(c) ? r[c] : json()));
    line(cells);
  }
}

void render_table(std::ostream& os, const json& doc, const std::string& indent = "") {
  std::size_t width = 0;
  for (const auto& [k, v] : doc.items())
    if (!v.is_object() && !is_record_array(v) && !is_matrix(v)) width = std::max(width, k.size());
  for (const auto& [k, v] : doc.items()) {
    if (v.is_object() || is_record_array(v) || is_matrix(v)) continue;
    os << indent << std::left << std::setw(static_cast<int>(width)) << k << "  " << scalar(v) << "\n";
  }
  for (const auto& [k, v] : doc.items()) {
    if (v.is_object()) {
      os << indent << k << ":\n";
      render_table(os, v, indent + "  ");
    } else if (is_matrix(v)) {
      os << indent << k << ":\n";
      for (const auto& row : v) os << indent << "  " << scalar(row) << "\n";
    } else if (is_record_array(v)) {
      os << indent << k << ":\n";
      render_records(os, v, indent);
    }
  }
}

std::string csv_cell(const json& v) {
  std::string s = scalar(v);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

void render_csv(std::ostream& os, const json& doc) {
  for (const char* key : {"points", "checks", "strata", "spectrum", "root_details"}) {
    if (!doc.contains(key) || !is_record_array(doc[key])) continue;
    const auto cols = columns(doc[key]);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : doc[key]) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(r.contains(cols[i]) ? r[cols[i]] : json());
      os << "\n";
    }
    return;
  }
  os << "key,value\n";
  for (const auto& [k, v] : doc.flatten().items()) os << csv_cell(json(k)) << "," << csv_cell(v) << "\n";
}

struct Handles {
  lh_tower* tower = nullptr;
  lh_family* family = nullptr;
  ~Handles() {
    lh_family_free(family);
    lh_tower_free(tower);
  }
};

[[noreturn]] void fail_status(lh_status s) {
  throw UsageError(std::string(lh_last_error()[0] ? lh_last_error() : lh_status_name(s)));
}

void build_tower(const Config& c, Handles& h) {
  if (!c.p || !c.r || !c.m) throw UsageError("--p, --r and --m are required");
  if (lh_status s = lh_tower_build(*c.p, *c.r, *c.m, c.cap, &h.tower); s != LH_OK) fail_status(s);
}

void build_family(const Config& c, Handles& h) {
  build_tower(c, h);
  lh_status s;
  if (!c.L.empty()) {
    if (c.k) throw UsageError("give either --k or --L, not both");
    s = lh_family_general(h.tower, c.L.c_str(), &h.family);
  } else {
    if (!c.k) throw UsageError("--k (or --L) is required");
    s = lh_family_frobenius(h.tower, *c.k, &h.family);
  }
  if (s != LH_OK) fail_status(s);
}

int finish(const Config& c, lh_status s, char* text) {
  if (s != LH_OK && s != LH_ERR_MISMATCH) {
    lh_string_free(text);
    fail_status(s);
  }
  const json doc = json::parse(text);
  lh_string_free(text);
  std::ostringstream os;
  if (c.format == "json")
    os << doc.dump(2) << "\n";
  else if (c.format == "csv")
    render_csv(os, doc);
  else
    render_table(os, doc);
  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write " + c.out);
    f << os.str();
  }
  if (s == LH_ERR_MISMATCH) {
    std::cerr << "mismatch: " << lh_last_error() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run(const std::string& cmd, const Config& c) {
  Handles h;
  char* text = nullptr;
  lh_status s = LH_OK;
  if (cmd == "field-info") {
    build_tower(c, h);
    s = lh_field_info_json(h.tower, &text);
  } else if (cmd == "hull") {
    build_family(c, h);
    std::string lambda = c.lambda, mu = c.mu;
    if (!c.rho.empty()) {
      if (!lambda.empty()) throw UsageError("give either --rho or --lambda/--mu");
      lambda = c.rho == "inf" ? "1" : c.rho;
      mu = c.rho == "inf" ? "0" : "1";
    }
    if (lambda.empty() || mu.empty()) throw UsageError("hull needs --lambda and --mu, or --rho");
    s = lh_hull_json(h.family, lambda.c_str(), mu.c_str(), &text);
  } else if (cmd == "sweep") {
    build_family(c, h);
    const int top = c.field == "top";
    s = lh_sweep_json(h.family, top, c.cap, c.points, &text);
    if (c.affine && (s == LH_OK || s == LH_ERR_MISMATCH)) {
      char* spectrum = nullptr;
      const lh_status s2 = lh_spectrum_json(h.family, top, c.cap, &spectrum);
      if (s2 != LH_OK && s2 != LH_ERR_MISMATCH) {
        lh_string_free(text);
        fail_status(s2);
      }
      json doc = json::parse(text);
      const json sp = json::parse(spectrum);
      lh_string_free(text);
      lh_string_free(spectrum);
      doc["spectrum"] = sp["spectrum"];
      doc["spectrum_scaling_consistent"] = sp["scaling_consistent"];
      const std::string merged = doc.dump();
      text = static_cast<char*>(std::malloc(merged.size() + 1));
      std::copy(merged.c_str(), merged.c_str() + merged.size() + 1, text);
      if (s2 == LH_ERR_MISMATCH) s = s2;
    }
  } else if (cmd == "discriminant") {
    build_family(c, h);
    s = lh_discriminant_json(h.family, &text);
  } else if (cmd == "rdcode") {
    build_tower(c, h);
    std::ifstream f(c.generator_file);
    if (!f) throw UsageError("cannot read " + c.generator_file);
    std::stringstream ss;
    ss << f.rdbuf();
    s = lh_rdcode_json(h.tower, ss.str().c_str(), &text);
  } else if (cmd == "verify-paper") {
    s = lh_verify_golden_json(&text);
  }
  return finish(c, s, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hull dimensions of codes from q-polynomial operators over GF(q^m)"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  std::uint32_t p = 0, r = 0, m = 0, k = 0;
  auto* op = app.add_option("--p", p, "characteristic");
  auto* orr = app.add_option("--r", r, "q = p^r");
  auto* om = app.add_option("--m", m, "extension degree of GF(q^m) over GF(q)");
  auto* ok = app.add_option("--k", k, "twist exponent, L = X^(q^k)");
  app.add_option("--L", c.L, "general L as comma-separated coefficients a_0..a_{m-1}");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--cap", c.cap, "size cap for field construction and sweeps (0 = default 2^24)");
  app.add_option("--out", c.out, "write output to a file");

  app.add_subcommand("field-info", "tower summary");
  auto* hull = app.add_subcommand("hull", "hull report at one parameter point");
  hull->add_option("--lambda", c.lambda, "lambda, e.g. a^5+a^4+a^2+1 or a^7");
  hull->add_option("--mu", c.mu, "mu");
  hull->add_option("--rho", c.rho, "shorthand for (rho:1); 'inf' for (1:0)");
  auto* sweep = app.add_subcommand("sweep", "hull strata over a projective line");
  sweep->add_option("--field", c.field, "parameter field")->check(CLI::IsMember({"base", "top"}));
  sweep->add_flag("--points", c.points, "include per-point records");
  sweep->add_flag("--affine", c.affine, "add the affine spectrum N_delta");
  app.add_subcommand("discriminant", "pencil matrices, discriminant and its roots in GF(q)");
  auto* rd = app.add_subcommand("rdcode", "hull of <X, F_1, ..., F_k> under the coefficient pairing");
  rd->add_option("generators", c.generator_file, "generator file")->required();
  app.add_subcommand("verify-paper", "golden checks for the GF(4) and GF(64) examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (op->count()) c.p = p;
  if (orr->count()) c.r = r;
  if (om->count()) c.m = m;
  if (ok->count()) c.k = k;
  try {
    return run(app.get_subcommands().front()->get_name(), c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
