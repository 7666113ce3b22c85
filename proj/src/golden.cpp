// SPDX-License-Identifier: Apache-2.0
#include "linhull/golden.hpp"

#include <algorithm>
#include <set>

#include "linhull/frob.hpp"
#include "linhull/gram.hpp"
#include "linhull/oracle.hpp"
#include "linhull/pencil.hpp"
#include "linhull/report.hpp"
#include "linhull/sweep.hpp"

namespace linhull {
namespace {

struct Collector {
  std::string suite;
  std::vector<GoldenCheck> out;

  void check(std::string name, const std::string& expected, const std::string& actual) {
    out.push_back({suite, std::move(name), expected, actual, expected == actual});
  }
  void check(std::string name, std::size_t expected, std::size_t actual) {
    check(std::move(name), std::to_string(expected), std::to_string(actual));
  }
};

std::string render(const FieldTower& t, const Matrix& a) { return to_json(t, a).dump(); }

}  // namespace

std::vector<GoldenCheck> verify_f4() {
  Collector c{"F4", {}};
  const TowerPtr T = FieldTower::build(2, 1, 2);
  const FieldTower& t = *T;
  const FieldElem alpha = t.generator();
  c.check("Tr(1)", "0", t.format(t.trace(t.one())));
  c.check("Tr(a)", "1", t.format(t.trace(alpha)));
  c.check("Tr(a^2)", "1", t.format(t.trace(t.mul(alpha, alpha))));
  const Basis basis = Basis::from_elements(T, {t.one(), alpha});
  const QPoly L = QPoly::frobenius(T, 1);
  c.check("L(a) = a+1", "a+1", t.format(L.eval(alpha)));
  c.check("L self-adjoint", "true", is_self_adjoint(L) ? "true" : "false");
  const PencilData p = build_pencil(L, basis);
  c.check("G0", R"([["0","1"],["1","1"]])", render(t, p.G0));
  c.check("G1", R"([["0","0"],["0","0"]])", render(t, p.G1));
  c.check("G2 = G0", render(t, p.G0), render(t, p.G2));
  c.check("Delta", "rho^4+1", p.disc.delta.format("rho"));
  c.check("Delta roots", "[\"1\"]", to_json(t, Matrix::from_rows(T, {p.disc.roots})).at(0).dump());
  for (auto lambda : t.base_elements())
    for (auto mu : t.base_elements()) {
      if (lambda.packed == 0 && mu.packed == 0) continue;
      const QPoly phi = pencil_member(lambda, mu, L);
      const auto rep = hull_dim(phi, basis);
      const std::string tag = "(" + t.format(lambda) + "," + t.format(mu) + ")";
      const Matrix direct = gram_of_operator(phi, basis);
      c.check("gram_at" + tag + " = direct Gram", render(t, direct), render(t, gram_at(p, lambda, mu)));
      if (lambda != mu) {
        c.check("hull" + tag, 0, rep.hull_dim);
        c.check("class" + tag, "LCD", std::string(to_string(rep.classification)));
      } else {
        c.check("rank" + tag, 1, rep.rank_operator);
        c.check("rank G" + tag, 0, rep.rank_gram);
        c.check("hull" + tag, 1, rep.hull_dim);
        c.check("class" + tag, "self-orthogonal", std::string(to_string(rep.classification)));
      }
      c.check("oracle hull" + tag, rep.hull_dim, hull_by_definition(phi));
    }
  const QPoly x_plus_x2 = pencil_member(t.one(), t.one(), L);
  const auto ker = op_kernel_basis(x_plus_x2);
  c.check("ker(x+x^2) = F2", "[\"1\"]", to_json(t, Matrix::from_rows(T, {ker})).at(0).dump());
  return c.out;
}

std::vector<GoldenCheck> verify_f64() {
  Collector c{"F64", {}};
  const TowerPtr T = FieldTower::build(2, 2, 3);
  const FieldTower& t = *T;
  c.check("|F*|", "63 = 3^2 * 7", tower_info(t).at("order_factorization").get<std::string>());
  const Basis nb = find_normal_element(T);
  c.check("normal basis", "true", nb.is_normal() ? "true" : "false");
  bool coords_ok = true;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    const auto v = nb.coords(nb[i]);
    for (std::size_t j = 0; j < v.size(); ++j) coords_ok = coords_ok && v[j] == (i == j ? t.one() : t.zero());
  }
  c.check("coords on basis", "true", coords_ok ? "true" : "false");
  const PencilData p = build_pencil(QPoly::frobenius(T, 1), nb);
  c.check("G1 != 0", "true", p.G1.is_zero() ? "false" : "true");
  c.check("G2 == G0", "true", p.G2 == p.G0 ? "true" : "false");
  const Circulant circ = circulant_structure(T, 1, nb);
  c.check("circulant G0", render(t, p.G0), render(t, circ.G0));
  c.check("circulant G1", render(t, p.G1), render(t, circ.G1));

  const StrataTable table = sweep_p1(T, Family::frobenius(1), ParamField::Top);
  c.check("total", 65, table.total);
  c.check("|S0|", 60, table.counts.count(0) ? table.counts.at(0) : 0);
  c.check("|S1|", 5, table.counts.count(1) ? table.counts.at(1) : 0);
  const std::set<std::string> expected{"a^3+a^2+a", "a^3+a^2+a+1", "a^4+a^2+a+1", "a^5+a", "a^5+a^4+a^2+1"};
  std::set<std::string> got;
  std::size_t nonbij = 0, nonbij_fq = 0;
  for (const auto& rec : table.records) {
    if (!rec.bijective) {
      ++nonbij;
      if (rec.mu.packed != 0 && t.in_base_field(rec.lambda)) ++nonbij_fq;
    }
    if (rec.hull_dim == 0) continue;
    got.insert(rec.key);
    const FieldElem rho = rec.lambda;
    const QPoly phi = pencil_member(rho, t.one(), QPoly::frobenius(T, 1));
    const auto rep = hull_dim(phi, nb);
    c.check(rec.key + " eps", "(1,1)",
            "(" + std::to_string(rec.eps->eps1) + "," + std::to_string(rec.eps->eps2) + ")");
    c.check(rec.key + " rank phi", 2, rep.rank_operator);
    c.check(rec.key + " rank G", 1, rep.rank_gram);
    c.check(rec.key + " hull", 1, rep.hull_dim);
    c.check(rec.key + " adjoint hull", 1, hull_via_adjoint(phi));
    c.check(rec.key + " isotropic", "true", rec.isotropic.value_or(false) ? "true" : "false");
  }
  std::string e, g;
  for (const auto& s : expected) e += s + ";";
  for (const auto& s : got) g += s + ";";
  c.check("non-LCD parameters", e, g);
  c.check("non-bijective points", 21, nonbij);
  c.check("non-bijective points in F4", 3, nonbij_fq);
  const auto at1 = std::find_if(table.records.begin(), table.records.end(), [](const auto& r) { return r.key == "1"; });
  c.check("rho=1 eps", "(1,1)", at1->eps ? "(" + std::to_string(at1->eps->eps1) + "," + std::to_string(at1->eps->eps2) + ")" : "none");
  c.check("rho=1 hull", 0, at1->hull_dim);
  c.check("rho=1 isotropic", "false", at1->isotropic.value_or(true) ? "true" : "false");
  return c.out;
}

}  // namespace linhull
