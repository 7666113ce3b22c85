// SPDX-License-Identifier: Apache-2.0
#include "linhull/sweep.hpp"

#include <numeric>

#include "linhull/error.hpp"
#include "linhull/gram.hpp"

namespace linhull {

std::string_view to_string(ParamField f) noexcept { return f == ParamField::Base ? "base" : "top"; }

namespace {

std::vector<FieldElem> parameter_elements(const FieldTower& t, ParamField field) {
  return field == ParamField::Base ? t.base_elements() : t.elements();
}

PointRecord evaluate(const TowerPtr& tower, const Family& family, ParamField field, FieldElem lambda,
                     FieldElem mu) {
  const FieldTower& t = *tower;
  PointRecord rec;
  rec.lambda = lambda;
  rec.mu = mu;
  rec.key = mu.packed == 0 ? "inf" : t.format(lambda);
  if (family.k) {
    const auto rep = hull_frob(FrobParams::make(tower, *family.k, lambda, mu));
    rec.hull_dim = rep.hull_dim;
    rec.rank_operator = rep.rank_operator;
    rec.eps = rep.eps;
    rec.isotropic = rep.isotropic;
    rec.bijective = !rep.eps.eps1;
    rec.case_consistent = rep.case_consistent;
    return rec;
  }
  const QPoly phi = pencil_member(lambda, mu, *family.L);
  rec.rank_operator = op_rank(phi);
  rec.bijective = rec.rank_operator == t.m();
  if (phi.is_zero()) return rec;
  if (field == ParamField::Base) {
    const auto rep = hull_dim(phi, coordinate_basis(tower));
    rec.hull_dim = rep.hull_dim;
    rec.rank_gram = rep.rank_gram;
  } else {
    rec.hull_dim = hull_via_adjoint(phi);
  }
  return rec;
}

}  // namespace

StrataTable sweep_p1(const TowerPtr& tower, const Family& family, ParamField field, std::uint64_t cap,
                     bool keep_records) {
  const FieldTower& t = *tower;
  if (!family.k && !family.L) raise(ErrorCode::InvalidArgument, "family needs k or L");
  if (family.L) require_same_tower(family.L->tower(), tower);
  const std::uint64_t size = field == ParamField::Base ? t.q() : t.size();
  if (size > cap) raise(ErrorCode::SizeCapExceeded, "parameter field exceeds the configured cap");
  StrataTable table;
  table.p = t.p();
  table.r = t.r();
  table.m = t.m();
  table.k = family.k;
  table.field = field;
  const auto add = [&](PointRecord rec) {
    ++table.counts[rec.hull_dim];
    ++table.total;
    if (keep_records) table.records.push_back(std::move(rec));
  };
  add(evaluate(tower, family, field, t.one(), t.zero()));
  for (auto rho : parameter_elements(t, field)) add(evaluate(tower, family, field, rho, t.one()));
  const auto lcd = table.counts.find(0);
  table.lcd_density = lcd == table.counts.end() ? 0.0 : static_cast<double>(lcd->second) / static_cast<double>(table.total);
  return table;
}

std::map<std::size_t, std::uint64_t> spectrum_affine(const TowerPtr& tower, std::uint32_t k, ParamField field,
                                                     std::uint64_t cap) {
  const FieldTower& t = *tower;
  const auto elems = parameter_elements(t, field);
  const std::uint64_t pairs = std::uint64_t{elems.size()} * elems.size();
  if (pairs > cap) raise(ErrorCode::SizeCapExceeded, "affine parameter space exceeds the configured cap");
  std::map<std::size_t, std::uint64_t> n;
  for (auto lambda : elems)
    for (auto mu : elems) {
      if (lambda.packed == 0 && mu.packed == 0) continue;
      ++n[hull_frob(FrobParams::make(tower, k, lambda, mu)).hull_dim];
    }
  return n;
}

EbitReport ebit_report(const StrataTable& table) {
  EbitReport rep;
  std::optional<std::uint32_t> d;
  if (table.k) d = std::gcd(*table.k, table.m);
  rep.d = d;
  for (auto [h, count] : table.counts) {
    EbitStratum s;
    s.hull_dim = h;
    s.codes = count;
    s.ebits = h;
    if (d) {
      if (h == 0)
        s.label = "0";
      else if (h == *d)
        s.label = "d";
      else if (h == 2 * *d)
        s.label = "2d";
      else
        s.label = "other";
    }
    for (const auto& rec : table.records)
      if (rec.hull_dim == h && rec.eps)
        s.cases.insert("(" + std::to_string(rec.eps->eps1) + "," + std::to_string(rec.eps->eps2) + ")");
    rep.strata.push_back(std::move(s));
  }
  rep.zero_cost_fraction = table.lcd_density;
  return rep;
}

}  // namespace linhull
