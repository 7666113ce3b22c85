// SPDX-License-Identifier: Apache-2.0
#include "linhull/report.hpp"

#include <numeric>

#include "linhull/error.hpp"
#include "linhull/numtheory.hpp"

namespace linhull {
namespace {

std::string poly_string(std::span<const std::uint32_t> c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i > 0) {
      if (c[i] != 1) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

json elems(const FieldTower& t, const std::vector<FieldElem>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(t.format(x));
  return a;
}

template <class T>
std::optional<T> opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

HullClass classify_hull(std::size_t code_dim, std::size_t hull) {
  if (hull == 0) return HullClass::LCD;
  if (hull == code_dim) return HullClass::SelfOrthogonal;
  return HullClass::Intermediate;
}

json tower_info(const FieldTower& t) {
  json j;
  j["p"] = t.p();
  j["r"] = t.r();
  j["q"] = t.q();
  j["m"] = t.m();
  j["degree"] = t.degree();
  j["size"] = t.size();
  j["multiplicative_order"] = t.order();
  j["order_factorization"] = format_factorization(t.order());
  j["gcd_m_char"] = std::gcd(t.m(), t.p());
  j["modulus"] = poly_string(t.modulus());
  j["generator"] = t.format(t.generator());
  j["base_generator"] = t.format(t.base_generator());
  j["normal_element"] = t.format(t.normal_element());
  json subs = json::array();
  for (auto s : divisors(t.m())) subs.push_back({{"degree", s}, {"size", *checked_pow(t.q(), s)}});
  j["subfields"] = subs;
  return j;
}

json to_json(const FieldTower& t, const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(elems(t, a.row(i)));
  return rows;
}

Matrix matrix_from_json(const TowerPtr& tower, const json& j) {
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& r : j) {
    rows.emplace_back();
    for (const auto& e : r) rows.back().push_back(tower->parse(e.get<std::string>()));
  }
  return Matrix::from_rows(tower, rows);
}

json to_json(const FieldTower& t, const HullReport& r) {
  json j;
  j["params"] = elems(t, r.params);
  j["rank_operator"] = r.rank_operator;
  j["rank_gram"] = r.rank_gram;
  j["hull_dim"] = r.hull_dim;
  j["classification"] = std::string(to_string(r.classification));
  j["ebits"] = r.ebits;
  return j;
}

HullReport hull_report_from_json(const FieldTower& t, const json& j) {
  HullReport r = classify(j.at("rank_operator").get<std::size_t>(), j.at("rank_gram").get<std::size_t>());
  for (const auto& e : j.at("params")) r.params.push_back(t.parse(e.get<std::string>()));
  if (r.hull_dim != j.at("hull_dim").get<std::size_t>() || to_string(r.classification) != j.at("classification"))
    raise(ErrorCode::ParseError, "inconsistent hull report");
  return r;
}

json to_json(const FieldTower& t, const FrobHullReport& r) {
  json j;
  j["eps1"] = static_cast<int>(r.eps.eps1);
  j["eps2"] = static_cast<int>(r.eps.eps2);
  j["case"] = "(" + std::to_string(r.eps.eps1) + "," + std::to_string(r.eps.eps2) + ")";
  j["d"] = r.d;
  j["dim_code"] = r.dim_code;
  j["rank_operator"] = r.rank_operator;
  j["hull_dim"] = r.hull_dim;
  j["ebits"] = r.hull_dim;
  j["classification"] = std::string(to_string(classify_hull(r.dim_code, r.hull_dim)));
  j["case_consistent"] = r.case_consistent;
  j["delta"] = r.delta ? json(*r.delta) : json(nullptr);
  j["isotropic"] = r.isotropic ? json(*r.isotropic) : json(nullptr);
  j["x0"] = r.x0 ? json(t.format(*r.x0)) : json(nullptr);
  return j;
}

FrobHullReport frob_report_from_json(const FieldTower& t, const json& j) {
  FrobHullReport r;
  r.eps.eps1 = j.at("eps1").get<int>() != 0;
  r.eps.eps2 = j.at("eps2").get<int>() != 0;
  r.d = j.at("d").get<std::uint32_t>();
  r.dim_code = j.at("dim_code").get<std::size_t>();
  r.rank_operator = j.at("rank_operator").get<std::size_t>();
  r.hull_dim = j.at("hull_dim").get<std::size_t>();
  r.case_consistent = j.at("case_consistent").get<bool>();
  r.delta = opt<std::size_t>(j, "delta");
  r.isotropic = opt<bool>(j, "isotropic");
  if (auto x = opt<std::string>(j, "x0")) r.x0 = t.parse(*x);
  return r;
}

json to_json(const FieldTower& t, const StrataTable& table) {
  json j;
  j["p"] = table.p;
  j["r"] = table.r;
  j["m"] = table.m;
  j["k"] = table.k ? json(*table.k) : json(nullptr);
  j["parameter_field"] = std::string(to_string(table.field));
  j["total"] = table.total;
  json counts = json::array();
  for (auto [h, c] : table.counts) counts.push_back({{"hull_dim", h}, {"count", c}});
  j["strata"] = counts;
  j["lcd_density"] = table.lcd_density;
  json pts = json::array();
  for (const auto& rec : table.records) {
    json p;
    p["point"] = rec.key;
    p["lambda"] = t.format(rec.lambda);
    p["mu"] = t.format(rec.mu);
    p["hull_dim"] = rec.hull_dim;
    p["rank_operator"] = rec.rank_operator;
    p["rank_gram"] = rec.rank_gram ? json(*rec.rank_gram) : json(nullptr);
    p["eps1"] = rec.eps ? json(static_cast<int>(rec.eps->eps1)) : json(nullptr);
    p["eps2"] = rec.eps ? json(static_cast<int>(rec.eps->eps2)) : json(nullptr);
    p["isotropic"] = rec.isotropic ? json(*rec.isotropic) : json(nullptr);
    p["bijective"] = rec.bijective;
    p["case_consistent"] = rec.case_consistent;
    pts.push_back(std::move(p));
  }
  j["points"] = pts;
  return j;
}

StrataTable strata_from_json(const FieldTower& t, const json& j) {
  StrataTable table;
  table.p = j.at("p").get<std::uint32_t>();
  table.r = j.at("r").get<std::uint32_t>();
  table.m = j.at("m").get<std::uint32_t>();
  table.k = opt<std::uint32_t>(j, "k");
  table.field = j.at("parameter_field") == "top" ? ParamField::Top : ParamField::Base;
  table.total = j.at("total").get<std::uint64_t>();
  for (const auto& s : j.at("strata")) table.counts[s.at("hull_dim").get<std::size_t>()] = s.at("count").get<std::uint64_t>();
  table.lcd_density = j.at("lcd_density").get<double>();
  for (const auto& p : j.at("points")) {
    PointRecord rec;
    rec.key = p.at("point").get<std::string>();
    rec.lambda = t.parse(p.at("lambda").get<std::string>());
    rec.mu = t.parse(p.at("mu").get<std::string>());
    rec.hull_dim = p.at("hull_dim").get<std::size_t>();
    rec.rank_operator = p.at("rank_operator").get<std::size_t>();
    rec.rank_gram = opt<std::size_t>(p, "rank_gram");
    if (auto e1 = opt<int>(p, "eps1")) rec.eps = EpsIndicators{*e1 != 0, p.at("eps2").get<int>() != 0};
    rec.isotropic = opt<bool>(p, "isotropic");
    rec.bijective = p.at("bijective").get<bool>();
    rec.case_consistent = p.at("case_consistent").get<bool>();
    table.records.push_back(std::move(rec));
  }
  return table;
}

json to_json(const EbitReport& r) {
  json j;
  j["d"] = r.d ? json(*r.d) : json(nullptr);
  j["zero_cost_fraction"] = r.zero_cost_fraction;
  json s = json::array();
  for (const auto& st : r.strata) {
    json e{{"hull_dim", st.hull_dim}, {"codes", st.codes}, {"ebits", st.ebits}};
    e["label"] = st.label.empty() ? json(nullptr) : json(st.label);
    e["cases"] = st.cases;
    s.push_back(std::move(e));
  }
  j["strata"] = s;
  return j;
}

json to_json(const FieldTower& t, const PencilData& p) {
  json j;
  j["basis"] = elems(t, {p.basis.elements().begin(), p.basis.elements().end()});
  j["L"] = elems(t, p.L.coeffs());
  j["G0"] = to_json(t, p.G0);
  j["G1"] = to_json(t, p.G1);
  j["G2"] = to_json(t, p.G2);
  j["self_adjoint"] = is_self_adjoint(p.L);
  j["delta"] = p.disc.delta.format("rho");
  j["delta_coefficients"] = elems(t, p.disc.delta.coeffs());
  j["degree"] = p.disc.delta.degree();
  j["leading_coefficient"] = t.format(p.disc.delta.leading());
  j["det_G0"] = t.format(p.G0.det());
  j["monic"] = false;
  j["roots"] = elems(t, p.disc.roots);
  j["node_field_degree"] = p.disc.node_field_degree;
  j["auxiliary_nodes"] = p.disc.auxiliary_nodes;
  try {
    const auto red = char2_reduction(p);
    j["char2_reduction"] = {{"applies", true}, {"delta_in_rho_squared", red.delta_in_rho_squared.format("s")}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
    j["char2_reduction"] = {{"applies", false}, {"reason", e.what()}};
  }
  return j;
}

json to_json(const FieldTower& t, const RdHullReport& r) {
  json j;
  j["k"] = r.k;
  j["M"] = to_json(t, r.M);
  j["rank_M"] = r.rank_M;
  j["hull_dim"] = r.hull_dim;
  j["ebits"] = r.hull_dim;
  j["is_lcd"] = r.is_lcd;
  j["generators_self_orthogonal"] = r.generators_self_orthogonal;
  j["self_dual"] = false;
  j["ambient_dimension_warning"] = r.ambient_dimension_warning;
  json hb = json::array();
  for (const auto& h : r.hull_basis) hb.push_back(elems(t, h.coeffs()));
  j["hull_basis"] = hb;
  return j;
}

QPoly parse_qpoly(const TowerPtr& tower, std::string_view text) {
  std::vector<FieldElem> coeffs;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = text.find(',', pos);
    const std::string item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (item.empty()) raise(ErrorCode::ParseError, "empty coefficient in '" + std::string(text) + "'");
    coeffs.push_back(tower->parse(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coeffs.size() > tower->m())
    raise(ErrorCode::ParseError, "a q-polynomial has at most m = " + std::to_string(tower->m()) + " coefficients");
  return QPoly(tower, std::move(coeffs));
}

std::vector<QPoly> parse_generators(const TowerPtr& tower, std::string_view text) {
  std::vector<QPoly> out;
  std::size_t pos = 0, lineno = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!trim(line).empty()) {
      try {
        out.push_back(parse_qpoly(tower, line));
      } catch (const Error& e) {
        raise(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace linhull
