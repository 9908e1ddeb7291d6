#pragma once

#include "toric/cone.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Grading data of the total coordinate ring: the exact sequence
///   M --c--> Z^rays --a--> A --> 0
/// with c(u) = (u(ray))_rays and A its cokernel. Rows of c_matrix follow the
/// fan's ray order; a is surjective by construction and c is injective
/// exactly when the fan is full.
struct CoxGrading {
  IntMatrix c_matrix;                      // one row per ray
  FinAbGroup class_group;                  // A
  std::vector<GroupElement> ray_degrees;   // a(delta_ray), fan ray order

  GroupElement degree(const Vec& exponents) const { return class_group.project(exponents); }
};

CoxGrading cox_grading(const Fan& f);

// 0/1 exponent vector supported on the rays outside the cone.
Vec zhat(const Fan& f, std::size_t cone_index);

/// Monomial ideal in the coordinate ring, given by exponent vectors over the
/// rays. Generators are kept minimal under componentwise divisibility.
struct MonomialIdeal {
  std::vector<Vec> generators;

  bool contains_monomial(const Vec& exponents) const;
};

// Ideal generated by the zhat monomials of all cones; minimal generators
// come from the maximal cones. The empty fan yields the zero ideal.
MonomialIdeal irrelevant_ideal(const Fan& f);

struct SubgroupB {
  std::vector<GroupElement> generators;
};

// finite index in the class group
bool is_big(const SubgroupB& b, const CoxGrading& g);

// contained in the span of the complementary ray degrees of every cone
bool is_small(const SubgroupB& b, const Fan& f, const CoxGrading& g);

// Minimal m >= 1 with m * deg(zhat(cone)) in B for every cone of the fan.
// Exists whenever b is big; throws NOT_BIG otherwise.
Int restriction_exponent(const SubgroupB& b, const Fan& f, const CoxGrading& g);

// Generators of the degree-zero chart monoid
//   { v in Z^rays : a(v) = 0 and v_ray >= 0 for every ray of the cone },
// split into a sharp part and a unit lattice basis.
MonoidSplit chart_degree_zero(const Fan& f, const CoxGrading& g, std::size_t cone_index);

// Does u -> c(u) map the dual-cone monoid of the chart isomorphically onto
// the degree-zero monoid? True for every cone iff the fan is full.
bool compare_chart_iso(const Fan& f, const CoxGrading& g, std::size_t cone_index);

}  // namespace toric
