// SPDX-License-Identifier: Apache-2.0
#include "linhull/linhull.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "linhull/error.hpp"
#include "linhull/golden.hpp"
#include "linhull/oracle.hpp"
#include "linhull/report.hpp"

using namespace linhull;

struct lh_tower {
  TowerPtr tower;
};

struct lh_family {
  TowerPtr tower;
  Family family;
};

namespace {

thread_local std::string g_last_error;

lh_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return LH_ERR_NOT_PRIME;
    case ErrorCode::SizeCapExceeded: return LH_ERR_SIZE_CAP;
    case ErrorCode::NotADivisor: return LH_ERR_NOT_A_DIVISOR;
    case ErrorCode::TowerMismatch: return LH_ERR_TOWER_MISMATCH;
    case ErrorCode::DegenerateInput: return LH_ERR_DEGENERATE_INPUT;
    case ErrorCode::DependentGenerators: return LH_ERR_DEPENDENT_GENERATORS;
    case ErrorCode::NotApplicable: return LH_ERR_NOT_APPLICABLE;
    case ErrorCode::NotNormalBasis: return LH_ERR_NOT_NORMAL_BASIS;
    case ErrorCode::PreconditionFailed: return LH_ERR_PRECONDITION;
    case ErrorCode::ParseError: return LH_ERR_PARSE;
    case ErrorCode::InvalidArgument: return LH_ERR_INVALID_ARGUMENT;
    case ErrorCode::Mismatch: return LH_ERR_MISMATCH;
  }
  return LH_ERR_INTERNAL;
}

template <class F>
lh_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    g_last_error = std::string(to_string(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LH_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lh_status emit(json body, char** out, lh_status status = LH_OK) {
  json doc;
  doc["schema"] = kSchemaVersion;
  for (auto& [k, v] : body.items()) doc[k] = std::move(v);
  *out = dup(doc.dump(2));
  if (status == LH_ERR_MISMATCH && g_last_error.empty()) g_last_error = "Mismatch: verification failed";
  return status;
}

void require(bool cond, const char* what) {
  if (!cond) raise(ErrorCode::InvalidArgument, what);
}

json family_json(const lh_family& f) {
  const FieldTower& t = *f.tower;
  json j;
  if (f.family.k) {
    j["kind"] = "frobenius";
    j["k"] = *f.family.k;
  } else {
    json c = json::array();
    for (auto x : f.family.L->coeffs()) c.push_back(t.format(x));
    j["kind"] = "general";
    j["L"] = c;
  }
  return j;
}

}  // namespace

extern "C" {

int lh_abi_version(void) { return 1; }

const char* lh_last_error(void) { return g_last_error.c_str(); }

const char* lh_status_name(lh_status status) {
  switch (status) {
    case LH_OK: return "OK";
    case LH_ERR_NOT_PRIME: return "NotPrime";
    case LH_ERR_SIZE_CAP: return "SizeCapExceeded";
    case LH_ERR_NOT_A_DIVISOR: return "NotADivisor";
    case LH_ERR_TOWER_MISMATCH: return "TowerMismatch";
    case LH_ERR_DEGENERATE_INPUT: return "DegenerateInput";
    case LH_ERR_DEPENDENT_GENERATORS: return "DependentGenerators";
    case LH_ERR_NOT_APPLICABLE: return "NotApplicable";
    case LH_ERR_NOT_NORMAL_BASIS: return "NotNormalBasis";
    case LH_ERR_PRECONDITION: return "PreconditionFailed";
    case LH_ERR_PARSE: return "ParseError";
    case LH_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case LH_ERR_MISMATCH: return "Mismatch";
    case LH_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void lh_string_free(char* s) { std::free(s); }

lh_status lh_tower_build(uint32_t p, uint32_t r, uint32_t m, uint64_t cap, lh_tower** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    auto tower = FieldTower::build(p, r, m, cap ? cap : kDefaultSizeCap);
    *out = new lh_tower{std::move(tower)};
    return LH_OK;
  });
}

void lh_tower_free(lh_tower* tower) { delete tower; }

lh_status lh_family_frobenius(const lh_tower* tower, uint32_t k, lh_family** out) {
  return guarded([&] {
    require(tower && out, "null argument");
    *out = nullptr;
    if (k < 1 || k >= tower->tower->m()) raise(ErrorCode::InvalidArgument, "k must satisfy 1 <= k <= m-1");
    *out = new lh_family{tower->tower, Family::frobenius(k)};
    return LH_OK;
  });
}

lh_status lh_family_general(const lh_tower* tower, const char* coefficients, lh_family** out) {
  return guarded([&] {
    require(tower && coefficients && out, "null argument");
    *out = nullptr;
    *out = new lh_family{tower->tower, Family::general(parse_qpoly(tower->tower, coefficients))};
    return LH_OK;
  });
}

void lh_family_free(lh_family* family) { delete family; }

lh_status lh_field_info_json(const lh_tower* tower, char** out) {
  return guarded([&] {
    require(tower && out, "null argument");
    return emit(tower_info(*tower->tower), out);
  });
}

lh_status lh_hull_json(const lh_family* family, const char* lambda_text, const char* mu_text, char** out) {
  return guarded([&] {
    require(family && lambda_text && mu_text && out, "null argument");
    const TowerPtr& T = family->tower;
    const FieldTower& t = *T;
    const FieldElem lambda = t.parse(lambda_text), mu = t.parse(mu_text);
    if (lambda.packed == 0 && mu.packed == 0) raise(ErrorCode::DegenerateInput, "(lambda, mu) = (0, 0)");
    json j;
    j["family"] = family_json(*family);
    j["lambda"] = t.format(lambda);
    j["mu"] = t.format(mu);
    const QPoly L = family->family.k ? QPoly::frobenius(T, *family->family.k) : *family->family.L;
    const QPoly phi = pencil_member(lambda, mu, L);
    if (phi.is_zero()) raise(ErrorCode::DegenerateInput, "lambda X + mu L is the zero operator");
    std::size_t hull;
    json report;
    bool agree = true;
    if (family->family.k) {
      const auto rep = hull_frob(FrobParams::make(T, *family->family.k, lambda, mu));
      report = to_json(t, rep);
      hull = rep.hull_dim;
      agree = rep.case_consistent;
    } else {
      hull = hull_via_adjoint(phi);
      const std::size_t rk = op_rank(phi);
      report["rank_operator"] = rk;
      report["hull_dim"] = hull;
      report["ebits"] = hull;
      report["classification"] = std::string(to_string(classify_hull(rk, hull)));
    }
    json routes;
    routes["adjoint"] = hull_via_adjoint(phi);
    agree = agree && routes["adjoint"].get<std::size_t>() == hull;
    if (t.in_base_field(lambda) && t.in_base_field(mu)) {
      const auto master = hull_dim(phi, coordinate_basis(T));
      routes["gram"] = master.hull_dim;
      report["rank_gram"] = master.rank_gram;
      agree = agree && master.hull_dim == hull;
    } else {
      routes["gram"] = nullptr;
    }
    if (t.size() <= kOracleCap) {
      routes["definition"] = hull_by_definition(phi);
      agree = agree && routes["definition"].get<std::size_t>() == hull;
    } else {
      routes["definition"] = nullptr;
    }
    j["report"] = report;
    j["routes"] = routes;
    j["routes_agree"] = agree;
    return emit(j, out, agree ? LH_OK : LH_ERR_MISMATCH);
  });
}

lh_status lh_sweep_json(const lh_family* family, int top_field, uint64_t cap, int include_points, char** out) {
  return guarded([&] {
    require(family && out, "null argument");
    const auto table = sweep_p1(family->tower, family->family, top_field ? ParamField::Top : ParamField::Base,
                                cap ? cap : kDefaultSizeCap, true);
    json j;
    j["family"] = family_json(*family);
    json body = to_json(*family->tower, table);
    bool consistent = true;
    for (const auto& rec : table.records) consistent = consistent && rec.case_consistent;
    if (!include_points) body.erase("points");
    for (auto& [k, v] : body.items()) j[k] = v;
    j["ebits"] = to_json(ebit_report(table));
    j["case_table_consistent"] = consistent;
    return emit(j, out, consistent ? LH_OK : LH_ERR_MISMATCH);
  });
}

lh_status lh_spectrum_json(const lh_family* family, int top_field, uint64_t cap, char** out) {
  return guarded([&] {
    require(family && out, "null argument");
    if (!family->family.k) raise(ErrorCode::NotApplicable, "the affine spectrum is defined for the Frobenius family");
    const FieldTower& t = *family->tower;
    const ParamField field = top_field ? ParamField::Top : ParamField::Base;
    const std::uint64_t c = cap ? cap : kDefaultSizeCap;
    const auto affine = spectrum_affine(family->tower, *family->family.k, field, c);
    const auto table = sweep_p1(family->tower, family->family, field, c, false);
    const std::uint64_t scale = (field == ParamField::Base ? t.q() : t.size()) - 1;
    json j;
    j["family"] = family_json(*family);
    j["parameter_field"] = std::string(to_string(field));
    j["scale"] = scale;
    json n = json::array();
    bool consistent = affine.size() == table.counts.size();
    for (auto [delta, count] : affine) {
      const std::uint64_t proj = table.counts.count(delta) ? table.counts.at(delta) : 0;
      consistent = consistent && count == proj * scale;
      n.push_back({{"delta", delta}, {"N", count}, {"projective", proj}});
    }
    j["spectrum"] = n;
    j["scaling_consistent"] = consistent;
    return emit(j, out, consistent ? LH_OK : LH_ERR_MISMATCH);
  });
}

lh_status lh_discriminant_json(const lh_family* family, char** out) {
  return guarded([&] {
    require(family && out, "null argument");
    const TowerPtr& T = family->tower;
    const FieldTower& t = *T;
    const QPoly L = family->family.k ? QPoly::frobenius(T, *family->family.k) : *family->family.L;
    const PencilData p = build_pencil(L, coordinate_basis(T));
    json j;
    j["family"] = family_json(*family);
    json body = to_json(t, p);
    for (auto& [k, v] : body.items()) j[k] = v;
    json roots = json::array();
    for (auto rho : p.disc.roots) {
      const Matrix G = monic_pencil_at(p, rho);
      json r;
      r["rho"] = t.format(rho);
      r["nullity"] = t.m() - G.rank();
      r["bijective"] = op_rank(pencil_member(rho, t.one(), L)) == t.m();
      if (family->family.k && t.m() % t.p() != 0)
        r["frequency_multiplicity"] = frequency_multiplicity_at(T, *family->family.k, rho);
      else
        r["frequency_multiplicity"] = nullptr;
      roots.push_back(std::move(r));
    }
    j["root_details"] = roots;
    return emit(j, out);
  });
}

lh_status lh_rdcode_json(const lh_tower* tower, const char* generators, char** out) {
  return guarded([&] {
    require(tower && generators && out, "null argument");
    const TowerPtr& T = tower->tower;
    const RdCode code = make_rd_code(T, parse_generators(T, generators));
    const RdHullReport rep = rd_hull(code);
    json j = to_json(*T, rep);
    const std::size_t oracle = rd_hull_by_definition(code.all_generators());
    const auto deg = is_degenerate(code);
    j["oracle_hull_dim"] = oracle;
    j["degenerate"] = deg.degenerate;
    bool ok = oracle == rep.hull_dim;
    for (const auto& h : rep.hull_basis)
      for (const auto& g : code.all_generators()) ok = ok && delsarte_pair(h, g).packed == 0;
    j["verified"] = ok;
    return emit(j, out, ok ? LH_OK : LH_ERR_MISMATCH);
  });
}

lh_status lh_verify_golden_json(char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    json checks = json::array();
    bool all = true;
    for (const auto& suite : {verify_f4(), verify_f64()})
      for (const auto& c : suite) {
        all = all && c.pass;
        checks.push_back({{"suite", c.suite}, {"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
      }
    json j;
    j["checks"] = checks;
    j["all_pass"] = all;
    return emit(j, out, all ? LH_OK : LH_ERR_MISMATCH);
  });
}

}  // extern "C"
