#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "fan_fixtures.hpp"
#include "toric/cox.hpp"

using namespace toric;

namespace {

std::vector<Vec> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) out.push_back(vec_of(r));
  return out;
}

SubgroupB whole_group(const CoxGrading& g) { return {g.class_group.canonical_generators()}; }

// all exponent vectors over g variables with total degree <= bound
void window(std::size_t g, long bound, Vec& cur, std::size_t pos, std::vector<Vec>& out) {
  if (pos == g) {
    out.push_back(cur);
    return;
  }
  long used = 0;
  for (std::size_t i = 0; i < pos; ++i) used += cur[i].get_si();
  for (long v = 0; v + used <= bound; ++v) {
    cur[pos] = v;
    window(g, bound, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

TEST_CASE("grading invariants match an independent smith-form oracle") {
  for (const Fan& f : fixtures::all()) {
    CoxGrading g = cox_grading(f);
    std::size_t r = f.rays().size();
    REQUIRE(g.c_matrix.rows() == r);
    REQUIRE(g.ray_degrees.size() == r);

    SmithResult s = smith_normal_form(g.c_matrix);
    std::vector<Int> torsion;
    for (const Int& d : s.invariants())
      if (d > 1) torsion.push_back(d);
    CHECK(g.class_group.free_rank() == r - s.invariants().size());
    CHECK(g.class_group.torsion() == torsion);
  }
}

TEST_CASE("the grading sequence is exact") {
  for (const Fan& f : fixtures::all()) {
    CoxGrading g = cox_grading(f);
    std::size_t n = f.ambient_rank();
    // a after c vanishes
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, Int(0));
      e[i] = 1;
      CHECK(g.class_group.is_zero(g.class_group.project(g.c_matrix.apply(e))));
    }
    // a is onto: the ray degrees generate the class group
    SubgroupIndex idx = subgroup_index(g.ray_degrees, g.class_group);
    CHECK(idx.finite);
    CHECK(idx.index == 1);
    // kernel of a is the image of c
    IntMatrix ker = g.class_group.kernel_lattice();
    for (std::size_t j = 0; j < ker.cols(); ++j) CHECK(solve(g.c_matrix, ker.col(j)).has_value());
  }
}

TEST_CASE("class groups and ray degrees of the reference fans") {
  {
    CoxGrading g = cox_grading(fixtures::p2());
    CHECK(g.class_group.free_rank() == 1);
    CHECK(g.class_group.torsion().empty());
    CHECK(g.ray_degrees[0] == g.ray_degrees[1]);
    CHECK(g.ray_degrees[1] == g.ray_degrees[2]);
    Int coord = g.ray_degrees[0].free_part[0];
    CHECK((coord == 1 || coord == -1));
  }
  {
    CoxGrading g = cox_grading(fixtures::p1p1());
    CHECK(g.class_group.free_rank() == 2);
    CHECK(g.class_group.torsion().empty());
    // rays sorted: (-1,0),(0,-1),(0,1),(1,0); opposite rays share a degree
    CHECK(g.ray_degrees[0] == g.ray_degrees[3]);
    CHECK(g.ray_degrees[1] == g.ray_degrees[2]);
    CHECK_FALSE(g.ray_degrees[0] == g.ray_degrees[1]);
    SubgroupIndex idx = subgroup_index(std::vector<GroupElement>{g.ray_degrees[0], g.ray_degrees[1]},
                                       g.class_group);
    CHECK(idx.finite);
    CHECK(idx.index == 1);
  }
  {
    // rays sorted: (0,1),(1,0),(1,1); degrees follow (-1,-1,1) times a unit
    CoxGrading g = cox_grading(fixtures::blowup());
    CHECK(g.class_group.free_rank() == 1);
    CHECK(g.ray_degrees[0] == g.ray_degrees[1]);
    CHECK(g.ray_degrees[0] == g.class_group.neg(g.ray_degrees[2]));
    SubgroupIndex idx =
        subgroup_index(std::vector<GroupElement>{g.ray_degrees[2]}, g.class_group);
    CHECK(idx.index == 1);
  }
  {
    // rays sorted: (-1,-2),(0,1),(1,0); degrees follow (1,2,1) times a unit
    CoxGrading g = cox_grading(fixtures::p112());
    CHECK(g.class_group.free_rank() == 1);
    CHECK(g.class_group.torsion().empty());
    CHECK(g.ray_degrees[0] == g.ray_degrees[2]);
    CHECK(g.ray_degrees[1] == g.class_group.scale(2, g.ray_degrees[0]));
  }
  {
    CoxGrading g = cox_grading(fixtures::a1());
    CHECK(g.class_group.free_rank() == 0);
    CHECK(g.class_group.torsion() == std::vector<Int>{2});
    CHECK(g.ray_degrees[0] == g.ray_degrees[1]);
    CHECK_FALSE(g.class_group.is_zero(g.ray_degrees[0]));
  }
  {
    CoxGrading g = cox_grading(Fan::empty_fan(2));
    CHECK(g.class_group.is_trivial());
    CHECK(g.ray_degrees.empty());
    CHECK(cox_grading(fixtures::point()).class_group.is_trivial());
  }
}

TEST_CASE("zhat marks the complementary rays") {
  Fan p2 = fixtures::p2();
  std::size_t top = p2.find_cone(Polycone::from_generators(vecs({{0, 1}, {1, 0}}), 2));
  CHECK(zhat(p2, top) == vec_of({1, 0, 0}));  // only ray (-1,-1) remains
  std::size_t zero = p2.find_cone(Polycone::zero_cone(2));
  CHECK(zhat(p2, zero) == vec_of({1, 1, 1}));

  Fan orthant = fixtures::orthant();
  CHECK(zhat(orthant, orthant.maximal_cones()[0]) == vec_of({0, 0}));

  for (const Fan& f : fixtures::all())
    for (std::size_t ci = 0; ci < f.cone_count(); ++ci) {
      Vec e = zhat(f, ci);
      for (std::size_t ri = 0; ri < f.rays().size(); ++ri) {
        bool inside = f.cone(ci).contains(f.rays()[ri]);
        CHECK(e[ri] == (inside ? 0 : 1));
      }
    }
}

TEST_CASE("irrelevant ideal generators") {
  CHECK(irrelevant_ideal(fixtures::p2()).generators ==
        vecs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(irrelevant_ideal(fixtures::p1p1()).generators ==
        vecs({{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}}));
  CHECK(irrelevant_ideal(fixtures::blowup()).generators == vecs({{0, 1, 0}, {1, 0, 0}}));
  CHECK(irrelevant_ideal(fixtures::orthant()).generators == vecs({{0, 0}}));  // unit ideal
  CHECK(irrelevant_ideal(Fan::empty_fan(2)).generators.empty());

  MonomialIdeal unit = irrelevant_ideal(fixtures::orthant());
  CHECK(unit.contains_monomial(vec_of({0, 0})));
  CHECK(unit.contains_monomial(vec_of({2, 5})));
  MonomialIdeal zero = irrelevant_ideal(Fan::empty_fan(2));
  CHECK_FALSE(zero.contains_monomial(Vec{}));

  // minimality: no generator divides another
  for (const Fan& f : fixtures::all()) {
    const auto& gens = irrelevant_ideal(f).generators;
    for (const Vec& a : gens)
      for (const Vec& b : gens) {
        if (a == b) continue;
        bool divides = true;
        for (std::size_t i = 0; i < a.size() && divides; ++i) divides = a[i] <= b[i];
        CHECK_FALSE(divides);
      }
  }
}

TEST_CASE("big and small subgroups of the class group") {
  {
    Fan f = fixtures::p2();
    CoxGrading g = cox_grading(f);
    SubgroupB all = whole_group(g);
    CHECK(is_big(all, g));
    CHECK(is_small(all, f, g));

    SubgroupB triple{{g.class_group.scale(3, g.ray_degrees[0])}};
    CHECK(is_big(triple, g));
    CHECK(is_small(triple, f, g));
    CHECK(subgroup_index(triple.generators, g.class_group).index == 3);

    SubgroupB trivial{{}};
    CHECK_FALSE(is_big(trivial, g));
    CHECK(is_small(trivial, f, g));
  }
  {
    // torsion class group: everything is big, nothing nonzero is small
    Fan f = fixtures::a1();
    CoxGrading g = cox_grading(f);
    SubgroupB all = whole_group(g);
    CHECK(is_big(all, g));
    CHECK_FALSE(is_small(all, f, g));  // the top cone leaves an empty span
    SubgroupB trivial{{}};
    CHECK(is_big(trivial, g));
    CHECK(is_small(trivial, f, g));
  }
  {
    // dropping generators keeps smallness and can only lose bigness
    Fan f = fixtures::p1p1();
    CoxGrading g = cox_grading(f);
    SubgroupB all = whole_group(g);
    REQUIRE(is_big(all, g));
    SubgroupB partial{{all.generators[0]}};
    CHECK((is_small(partial, f, g) || !is_small(all, f, g)));
    CHECK((!is_big(partial, g) || is_big(all, g)));
  }
}

TEST_CASE("restriction exponents") {
  {
    Fan f = fixtures::p2();
    CoxGrading g = cox_grading(f);
    CHECK(restriction_exponent(whole_group(g), f, g) == 1);
    SubgroupB triple{{g.class_group.scale(3, g.ray_degrees[0])}};
    CHECK(restriction_exponent(triple, f, g) == 3);
    try {
      restriction_exponent(SubgroupB{{}}, f, g);
      CHECK(false);
    } catch (const toric_error& e) {
      CHECK(e.code() == errc::not_big);
    }
  }
  {
    Fan f = fixtures::a1();
    CoxGrading g = cox_grading(f);
    CHECK(restriction_exponent(whole_group(g), f, g) == 1);
    CHECK(restriction_exponent(SubgroupB{{}}, f, g) == 2);  // kill the Z/2 degree
  }
  {
    Fan f = fixtures::p1p1();
    CoxGrading g = cox_grading(f);
    SubgroupB mixed{{g.class_group.scale(2, g.ray_degrees[0]),
                     g.class_group.scale(3, g.ray_degrees[1])}};
    CHECK(restriction_exponent(mixed, f, g) == 6);
  }
  CHECK(restriction_exponent(SubgroupB{{}}, Fan::empty_fan(2),
                             cox_grading(Fan::empty_fan(2))) == 1);
}

TEST_CASE("degree zero chart monoids") {
  {
    Fan f = fixtures::p2();
    CoxGrading g = cox_grading(f);
    std::size_t top = f.find_cone(Polycone::from_generators(vecs({{0, 1}, {1, 0}}), 2));
    MonoidSplit ms = chart_degree_zero(f, g, top);
    CHECK(ms.sharp_generators == vecs({{-1, 0, 1}, {-1, 1, 0}}));
    CHECK(ms.unit_basis.empty());

    // torus chart: rank-two unit lattice equal to ker(a)
    std::size_t zero = f.find_cone(Polycone::zero_cone(2));
    ms = chart_degree_zero(f, g, zero);
    CHECK(ms.sharp_generators.empty());
    REQUIRE(ms.unit_basis.size() == 2);
    IntMatrix ker = g.class_group.kernel_lattice();
    IntMatrix units = IntMatrix::from_cols(ms.unit_basis, 3);
    for (const Vec& u : ms.unit_basis) CHECK(g.class_group.is_zero(g.class_group.project(u)));
    for (std::size_t j = 0; j < ker.cols(); ++j) CHECK(solve(units, ker.col(j)).has_value());
  }
  {
    Fan f = fixtures::p1();
    CoxGrading g = cox_grading(f);
    std::size_t right = f.find_cone(Polycone::from_generators(vecs({{1}}), 1));
    MonoidSplit ms = chart_degree_zero(f, g, right);
    CHECK(ms.sharp_generators == vecs({{-1, 1}}));  // the ratio of the two coordinates
    CHECK(ms.unit_basis.empty());
  }
  {
    // all rays in the cone: the monoid is the c-image of the dual monoid
    Fan f = fixtures::orthant();
    CoxGrading g = cox_grading(f);
    MonoidSplit ms = chart_degree_zero(f, g, f.maximal_cones()[0]);
    CHECK(ms.sharp_generators == vecs({{0, 1}, {1, 0}}));
    CHECK(ms.unit_basis.empty());
  }
  // every chart monoid generator has degree zero and correct signs
  for (const Fan& f : fixtures::all()) {
    CoxGrading g = cox_grading(f);
    for (std::size_t ci = 0; ci < f.cone_count(); ++ci) {
      MonoidSplit ms = chart_degree_zero(f, g, ci);
      auto check_one = [&](const Vec& v) {
        CHECK(g.class_group.is_zero(g.class_group.project(v)));
        for (std::size_t ri : f.cone_ray_sets()[ci]) CHECK(v[ri] >= 0);
      };
      for (const Vec& v : ms.sharp_generators) check_one(v);
      for (const Vec& v : ms.unit_basis) {
        CHECK(g.class_group.is_zero(g.class_group.project(v)));
        bool pos = true, neg = true;
        for (std::size_t ri : f.cone_ray_sets()[ci]) {
          pos = pos && v[ri] >= 0;
          neg = neg && v[ri] <= 0;
        }
        CHECK((pos && neg));  // units vanish on the cone's rays
      }
    }
  }
}

TEST_CASE("chart comparison detects fullness") {
  for (const Fan& f : fixtures::all()) {
    CoxGrading g = cox_grading(f);
    bool full = is_full(f);
    bool all_iso = true;
    for (std::size_t ci = 0; ci < f.cone_count(); ++ci)
      all_iso = all_iso && compare_chart_iso(f, g, ci);
    CHECK(all_iso == (full || f.empty()));
  }
  // the single-ray fan fails already at the ray chart
  Fan f = fixtures::single_ray();
  CoxGrading g = cox_grading(f);
  std::size_t ray = f.find_cone(Polycone::from_generators(vecs({{1, 0}}), 2));
  CHECK_FALSE(compare_chart_iso(f, g, ray));
}

TEST_CASE("restricted ideal is monomially generated on a bounded window") {
  Fan f = fixtures::p2();
  CoxGrading g = cox_grading(f);
  MonomialIdeal ideal = irrelevant_ideal(f);
  SubgroupB b{{g.class_group.scale(3, g.ray_degrees[0])}};

  auto in_b = [&](const Vec& v) {
    return subgroup_membership(g.degree(v), b.generators, g.class_group);
  };
  std::vector<Vec> expos;
  Vec cur(3, Int(0));
  window(3, 6, cur, 0, expos);

  std::vector<Vec> members;
  for (const Vec& v : expos)
    if (ideal.contains_monomial(v) && in_b(v)) members.push_back(v);

  // minimal members: no proper divisor in the set with quotient degree in B
  std::vector<Vec> minimal;
  for (const Vec& v : members) {
    bool is_min = true;
    for (const Vec& u : members) {
      if (u == v) continue;
      bool divides = true;
      for (std::size_t i = 0; i < 3 && divides; ++i) divides = u[i] <= v[i];
      if (divides && in_b(vec_sub(v, u))) is_min = false;
    }
    if (is_min) minimal.push_back(v);
  }
  // total degree three in each minimal generator, ten of them
  CHECK(minimal.size() == 10);
  for (const Vec& v : minimal) CHECK(v[0] + v[1] + v[2] == 3);
  // every member is a minimal generator times something of degree in B
  for (const Vec& v : members) {
    bool generated = false;
    for (const Vec& u : minimal) {
      bool divides = true;
      for (std::size_t i = 0; i < 3 && divides; ++i) divides = u[i] <= v[i];
      if (divides && in_b(vec_sub(v, u))) generated = true;
    }
    CHECK(generated);
  }
}
