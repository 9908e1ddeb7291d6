#include "toric/cox.hpp"

#include <algorithm>

namespace toric {

CoxGrading cox_grading(const Fan& f) {
  std::size_t r = f.rays().size();
  CoxGrading g;
  g.c_matrix = IntMatrix::from_rows(f.rays(), f.ambient_rank());
  g.class_group = cokernel(g.c_matrix);
  for (std::size_t i = 0; i < r; ++i) {
    Vec delta(r, Int(0));
    delta[i] = 1;
    g.ray_degrees.push_back(g.class_group.project(delta));
  }
  return g;
}

Vec zhat(const Fan& f, std::size_t cone_index) {
  f.cone(cone_index);  // range check
  Vec e(f.rays().size(), Int(1));
  for (std::size_t ri : f.cone_ray_sets()[cone_index]) e[ri] = 0;
  return e;
}

bool MonomialIdeal::contains_monomial(const Vec& exponents) const {
  for (const Vec& g : generators) {
    bool divides = g.size() == exponents.size();
    for (std::size_t i = 0; i < g.size() && divides; ++i) divides = g[i] <= exponents[i];
    if (divides) return true;
  }
  return false;
}

MonomialIdeal irrelevant_ideal(const Fan& f) {
  std::vector<Vec> gens;
  for (std::size_t m : f.maximal_cones()) gens.push_back(zhat(f, m));
  std::sort(gens.begin(), gens.end(), lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal ideal;
  for (const Vec& g : gens) {
    bool redundant = false;
    for (const Vec& h : gens) {
      if (h == g) continue;
      bool divides = true;
      for (std::size_t i = 0; i < g.size() && divides; ++i) divides = h[i] <= g[i];
      if (divides) {
        redundant = true;
        break;
      }
    }
    if (!redundant) ideal.generators.push_back(g);
  }
  return ideal;
}

bool is_big(const SubgroupB& b, const CoxGrading& g) {
  return subgroup_index(b.generators, g.class_group).finite;
}

bool is_small(const SubgroupB& b, const Fan& f, const CoxGrading& g) {
  for (std::size_t ci = 0; ci < f.cone_count(); ++ci) {
    std::vector<GroupElement> span;
    Vec e = zhat(f, ci);
    for (std::size_t ri = 0; ri < e.size(); ++ri)
      if (e[ri] == 1) span.push_back(g.ray_degrees[ri]);
    for (const GroupElement& gen : b.generators)
      if (!subgroup_membership(gen, span, g.class_group)) return false;
  }
  return true;
}

Int restriction_exponent(const SubgroupB& b, const Fan& f, const CoxGrading& g) {
  SubgroupIndex idx = subgroup_index(b.generators, g.class_group);
  if (!idx.finite)
    throw toric_error(errc::not_big, "subgroup has infinite index in the class group");

  std::vector<GroupElement> degrees;
  for (std::size_t ci = 0; ci < f.cone_count(); ++ci)
    degrees.push_back(g.degree(zhat(f, ci)));

  // [A : B] kills A/B, so m = index always works and the scan terminates
  for (Int m = 1; m <= idx.index; ++m) {
    bool ok = true;
    for (const GroupElement& d : degrees)
      ok = ok && subgroup_membership(g.class_group.scale(m, d), b.generators, g.class_group);
    if (ok) return m;
  }
  throw toric_error(errc::not_big, "no restriction exponent up to the subgroup index");
}

MonoidSplit chart_degree_zero(const Fan& f, const CoxGrading& g, std::size_t cone_index) {
  f.cone(cone_index);
  IntMatrix kernel = g.class_group.kernel_lattice();  // rays x k
  std::size_t k = kernel.cols();

  std::vector<Vec> ineqs;
  for (std::size_t ri : f.cone_ray_sets()[cone_index]) {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = kernel.at(ri, j);
    ineqs.push_back(row);
  }
  MonoidSplit inner = monoid_presentation_split(Polycone::from_inequalities(ineqs, k));

  MonoidSplit out;
  for (const Vec& w : inner.sharp_generators) out.sharp_generators.push_back(kernel.apply(w));
  for (const Vec& w : inner.unit_basis) out.unit_basis.push_back(kernel.apply(w));
  std::sort(out.sharp_generators.begin(), out.sharp_generators.end(), lex_less);
  return out;
}

bool compare_chart_iso(const Fan& f, const CoxGrading& g, std::size_t cone_index) {
  const Polycone& sigma = f.cone(cone_index);
  std::size_t n = f.ambient_rank();
  if (rank(g.c_matrix) != n) return false;  // c not injective, never an isomorphism

  // surjectivity: every monoid generator of the degree-zero chart must lift
  // along c into the dual-cone monoid
  MonoidSplit target = chart_degree_zero(f, g, cone_index);
  IntegralSolver solver(g.c_matrix);
  auto lifts_into_dual = [&](const Vec& v) {
    std::optional<Vec> u = solver.solve(v);
    if (!u) return false;
    for (const Vec& gen : sigma.generators())
      if (dot(*u, gen) < 0) return false;
    return true;
  };
  for (const Vec& v : target.sharp_generators)
    if (!lifts_into_dual(v)) return false;
  for (const Vec& v : target.unit_basis)
    if (!lifts_into_dual(v) || !lifts_into_dual(vec_neg(v))) return false;
  return true;
}

}  // namespace toric
