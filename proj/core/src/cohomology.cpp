#include "toric/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "toric/error.hpp"

namespace toric {

namespace {

// A cover complex: terms are subsets of chart indices, one level per subset
// size. Each term carries the ray indices that stay non-inverted on it.
struct CoverComplex {
  std::vector<std::vector<std::vector<std::size_t>>> restricted;  // [level][term]
  // differential level -> level+1: per target term, (source term, sign)
  std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> incidence;
  std::vector<std::size_t> offsets;  // flat term index base per level
  std::size_t term_count = 0;
};

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// subsets of {0..k-1} with sizes min_size..k; base_sets[i] is the restriction
// of chart i, the empty subset keeps the whole universe
CoverComplex build_cover(std::size_t k, std::size_t universe,
                         const std::vector<std::vector<std::size_t>>& base_sets,
                         std::size_t min_size) {
  if (k > 10) throw toric_error(errc::invalid_input, "cover has more than ten charts");
  CoverComplex cx;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index_of;

  for (std::size_t size = min_size; size <= k; ++size) {
    std::vector<std::vector<std::size_t>> level_sets;
    std::map<std::vector<std::size_t>, std::size_t> idx;
    std::vector<std::size_t> subset(size);
    std::function<void(std::size_t, std::size_t)> emit = [&](std::size_t pos, std::size_t from) {
      if (pos == size) {
        std::vector<std::size_t> r(universe);
        for (std::size_t i = 0; i < universe; ++i) r[i] = i;
        for (std::size_t s : subset) r = intersect_sorted(r, base_sets[s]);
        idx[subset] = level_sets.size();
        level_sets.push_back(r);
        return;
      }
      for (std::size_t c = from; c + (size - pos) <= k; ++c) {
        subset[pos] = c;
        emit(pos + 1, c + 1);
      }
    };
    emit(0, 0);
    cx.restricted.push_back(std::move(level_sets));
    index_of.push_back(std::move(idx));
  }

  cx.offsets.resize(cx.restricted.size());
  for (std::size_t l = 0; l < cx.restricted.size(); ++l) {
    cx.offsets[l] = cx.term_count;
    cx.term_count += cx.restricted[l].size();
  }

  cx.incidence.resize(cx.restricted.size() > 0 ? cx.restricted.size() - 1 : 0);
  for (std::size_t l = 0; l + 1 < cx.restricted.size(); ++l) {
    cx.incidence[l].resize(cx.restricted[l + 1].size());
    for (const auto& [subset, t] : index_of[l + 1]) {
      for (std::size_t pos = 0; pos < subset.size(); ++pos) {
        std::vector<std::size_t> source = subset;
        source.erase(source.begin() + static_cast<std::ptrdiff_t>(pos));
        cx.incidence[l][t].emplace_back(index_of[l].at(source), pos % 2 == 0 ? 1 : -1);
      }
    }
  }
  return cx;
}

bool survives(const MonomialIdeal& ann, const std::vector<std::size_t>& restricted, const Vec& v) {
  for (std::size_t idx : restricted)
    if (v[idx] < 0) return false;
  for (const Vec& g : ann.generators) {
    bool dominates = true;
    for (std::size_t idx : restricted)
      if (g[idx] > v[idx]) {
        dominates = false;
        break;
      }
    if (dominates) return false;
  }
  return true;
}

template <typename F>
void for_box(std::size_t n, long r, F&& fn) {
  Vec u(n, Int(-r));
  if (n == 0) {
    fn(u);
    return;
  }
  while (true) {
    fn(u);
    std::size_t i = 0;
    while (i < n && u[i] == r) {
      u[i] = -r;
      ++i;
    }
    if (i == n) break;
    u[i] += 1;
  }
}

using AliveMask = std::vector<std::uint64_t>;

AliveMask alive_mask(const CoverComplex& cx, const MonomialIdeal& ann, const Vec& v) {
  AliveMask mask((cx.term_count + 63) / 64, 0);
  for (std::size_t l = 0; l < cx.restricted.size(); ++l)
    for (std::size_t t = 0; t < cx.restricted[l].size(); ++t)
      if (survives(ann, cx.restricted[l][t], v)) {
        std::size_t bit = cx.offsets[l] + t;
        mask[bit / 64] |= std::uint64_t(1) << (bit % 64);
      }
  return mask;
}

bool mask_bit(const AliveMask& mask, std::size_t bit) {
  return (mask[bit / 64] >> (bit % 64)) & 1;
}

// dimensions and differentials of the alive subcomplex
void assemble(const CoverComplex& cx, const AliveMask& mask, std::vector<std::size_t>& dims,
              std::vector<IntMatrix>& diffs) {
  std::size_t levels = cx.restricted.size();
  std::vector<std::vector<std::ptrdiff_t>> pos(levels);
  dims.assign(levels, 0);
  for (std::size_t l = 0; l < levels; ++l) {
    pos[l].assign(cx.restricted[l].size(), -1);
    for (std::size_t t = 0; t < cx.restricted[l].size(); ++t)
      if (mask_bit(mask, cx.offsets[l] + t)) pos[l][t] = static_cast<std::ptrdiff_t>(dims[l]++);
  }
  diffs.clear();
  for (std::size_t l = 0; l + 1 < levels; ++l) {
    IntMatrix d(dims[l + 1], dims[l]);
    for (std::size_t t = 0; t < cx.restricted[l + 1].size(); ++t) {
      if (pos[l + 1][t] < 0) continue;
      for (const auto& [src, sign] : cx.incidence[l][t])
        if (pos[l][src] >= 0)
          d.at(static_cast<std::size_t>(pos[l + 1][t]), static_cast<std::size_t>(pos[l][src])) =
              sign;
    }
    diffs.push_back(std::move(d));
  }
}

void check_element_shape(const FinAbGroup& g, const GroupElement& e) {
  if (e.free_part.size() != g.free_rank() || e.torsion_part.size() != g.torsion().size())
    throw toric_error(errc::invalid_input, "group element does not match the class group shape");
}

long default_radius(const CoxSetup& s, const MonomialModule& f, const GroupElement& degree) {
  Int extent = 0;
  for (const Summand& sm : f.summands) {
    GroupElement target = s.grading.class_group.add(degree, sm.shift);
    Vec v0 = s.grading.class_group.preimage(target);
    extent = std::max(extent, vec_inf_norm(v0));
    for (const Vec& g : sm.annihilator.generators)
      for (const Int& x : g) extent = std::max(extent, x);
  }
  return 2 + static_cast<long>(extent.get_si());
}

std::vector<ModuleDescriptor> run_once(const CoxSetup& s, const CoverComplex& cx,
                                       const MonomialModule& f, const GroupElement& degree,
                                       const BaseRing& base, long radius) {
  std::size_t levels = cx.restricted.size();
  std::vector<ModuleDescriptor> totals(levels);
  std::size_t n = s.fan.ambient_rank();

  for (const Summand& sm : f.summands) {
    GroupElement target = s.grading.class_group.add(degree, sm.shift);
    Vec v0 = s.grading.class_group.preimage(target);
    std::map<AliveMask, std::vector<ModuleDescriptor>> cache;
    for_box(n, radius, [&](const Vec& u) {
      Vec v = vec_add(v0, s.grading.c_matrix.apply(u));
      AliveMask mask = alive_mask(cx, sm.annihilator, v);
      auto it = cache.find(mask);
      if (it == cache.end()) {
        std::vector<std::size_t> dims;
        std::vector<IntMatrix> diffs;
        assemble(cx, mask, dims, diffs);
        it = cache.emplace(std::move(mask), complex_cohomology(dims, diffs, base)).first;
      }
      for (std::size_t l = 0; l < levels; ++l) totals[l] = descriptor_sum(totals[l], it->second[l]);
    });
  }
  return totals;
}

CoverComplex cech_cover(const CoxSetup& s) {
  std::vector<std::vector<std::size_t>> charts;
  for (std::size_t mi : s.fan.maximal_cones()) charts.push_back(s.fan.cone_ray_sets()[mi]);
  return build_cover(charts.size(), s.fan.rays().size(), charts, 1);
}

CoverComplex local_cover(const CoxSetup& s) {
  std::vector<std::vector<std::size_t>> zero_sets;
  for (const Vec& g : s.irrelevant.generators) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] == 0) z.push_back(i);
    zero_sets.push_back(std::move(z));
  }
  return build_cover(zero_sets.size(), s.fan.rays().size(), zero_sets, 0);
}

void gate(const CoxSetup& s, const MonomialModule& f, const GroupElement& degree) {
  if (s.fan.empty()) throw toric_error(errc::empty_fan, "cohomology needs a nonempty fan");
  if (!is_full(s.fan))
    throw toric_error(errc::not_full,
                      "graded pieces split over lattice translates only for full fans");
  check_element_shape(s.grading.class_group, degree);
  if (!subgroup_membership(degree, s.subgroup.generators, s.grading.class_group))
    throw toric_error(errc::invalid_input, "degree lies outside the grading subgroup");
  validate_module(s, f);
}

std::vector<ModuleDescriptor> run_stable(const CoxSetup& s, const CoverComplex& cx,
                                         const MonomialModule& f, const GroupElement& degree,
                                         const BaseRing& base, std::optional<long> box_radius) {
  long r = box_radius.value_or(default_radius(s, f, degree));
  std::vector<ModuleDescriptor> first = run_once(s, cx, f, degree, base, r);
  std::vector<ModuleDescriptor> wider = run_once(s, cx, f, degree, base, r + 2);
  if (first != wider)
    throw toric_error(errc::box_unstable, "graded piece not stabilized at box radius " +
                                              std::to_string(r) + "; enlarge the box");
  return first;
}

std::vector<Vec> minimalize(std::vector<Vec> gens) {
  std::sort(gens.begin(), gens.end(), lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Vec> out;
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
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

CoxSetup make_setup(Fan f, SubgroupB b) {
  CoxSetup s;
  s.fan = std::move(f);
  s.grading = cox_grading(s.fan);
  for (const GroupElement& g : b.generators) check_element_shape(s.grading.class_group, g);
  s.subgroup = std::move(b);
  s.exponent = restriction_exponent(s.subgroup, s.fan, s.grading);
  s.irrelevant = irrelevant_ideal(s.fan);
  for (Vec& g : s.irrelevant.generators)
    for (Int& x : g) x *= s.exponent;
  return s;
}

CoxSetup make_setup(Fan f) {
  CoxGrading g = cox_grading(f);
  return make_setup(std::move(f), SubgroupB{g.class_group.canonical_generators()});
}

void validate_module(const CoxSetup& s, const MonomialModule& f) {
  std::size_t rays = s.fan.rays().size();
  const FinAbGroup& a = s.grading.class_group;
  for (const Summand& sm : f.summands) {
    check_element_shape(a, sm.shift);
    if (!subgroup_membership(sm.shift, s.subgroup.generators, a))
      throw toric_error(errc::invalid_input, "summand shift lies outside the grading subgroup");
    for (const Vec& g : sm.annihilator.generators) {
      if (g.size() != rays)
        throw toric_error(errc::invalid_input, "annihilator exponent length differs from the ray count");
      for (const Int& x : g)
        if (x < 0) throw toric_error(errc::invalid_input, "annihilator exponents must be nonnegative");
      if (!subgroup_membership(a.project(g), s.subgroup.generators, a))
        throw toric_error(errc::invalid_input,
                          "annihilator generator degree lies outside the grading subgroup");
    }
  }
}

bool chart_monomial_predicate(const MonomialModule& f, std::size_t summand, const Fan& fan,
                              std::size_t cone_index, const Vec& v) {
  if (summand >= f.summands.size())
    throw toric_error(errc::invalid_input, "summand index out of range");
  if (v.size() != fan.rays().size())
    throw toric_error(errc::invalid_input, "exponent length differs from the ray count");
  fan.cone(cone_index);  // range check
  return survives(f.summands[summand].annihilator, fan.cone_ray_sets()[cone_index], v);
}

std::vector<ModuleDescriptor> cech_cohomology(const CoxSetup& s, const MonomialModule& f,
                                              const GroupElement& degree, const BaseRing& base,
                                              std::optional<long> box_radius) {
  gate(s, f, degree);
  return run_stable(s, cech_cover(s), f, degree, base, box_radius);
}

std::vector<ModuleDescriptor> local_cohomology(const CoxSetup& s, const MonomialModule& f,
                                               const GroupElement& degree, const BaseRing& base,
                                               std::optional<long> box_radius) {
  gate(s, f, degree);
  return run_stable(s, local_cover(s), f, degree, base, box_radius);
}

std::vector<TorsionPiece> torsion_functor(const CoxSetup& s, const MonomialModule& f,
                                          const std::vector<GroupElement>& degrees,
                                          std::optional<long> box_radius) {
  std::vector<TorsionPiece> out;
  std::size_t rays = s.fan.rays().size();
  std::vector<std::size_t> everything(rays);
  for (std::size_t i = 0; i < rays; ++i) everything[i] = i;
  std::vector<std::vector<std::size_t>> charts;
  for (std::size_t mi : s.fan.maximal_cones()) charts.push_back(s.fan.cone_ray_sets()[mi]);

  for (const GroupElement& degree : degrees) {
    gate(s, f, degree);
    long r = box_radius.value_or(default_radius(s, f, degree));
    TorsionPiece piece;
    piece.degree = degree;
    for (std::size_t si = 0; si < f.summands.size(); ++si) {
      const Summand& sm = f.summands[si];
      GroupElement target = s.grading.class_group.add(degree, sm.shift);
      Vec v0 = s.grading.class_group.preimage(target);
      for_box(s.fan.ambient_rank(), r, [&](const Vec& u) {
        Vec v = vec_add(v0, s.grading.c_matrix.apply(u));
        if (!survives(sm.annihilator, everything, v)) return;
        for (const auto& chart : charts)
          if (survives(sm.annihilator, chart, v)) return;
        piece.monomials.emplace_back(si, v);
      });
    }
    std::sort(piece.monomials.begin(), piece.monomials.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return lex_less(a.second, b.second);
              });
    out.push_back(std::move(piece));
  }
  return out;
}

MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& by) {
  for (const Vec& g : by.generators)
    for (const Vec& h : a.generators)
      if (g.size() != h.size())
        throw toric_error(errc::invalid_input, "saturation needs matching variable counts");

  // intersection over the stable colon ideals of each generator; the empty
  // intersection is the unit ideal
  bool first = true;
  std::vector<Vec> acc;
  for (const Vec& g : by.generators) {
    std::vector<Vec> colon;
    for (const Vec& h : a.generators) {
      Vec t = h;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > 0) t[i] = 0;
      colon.push_back(std::move(t));
    }
    colon = minimalize(std::move(colon));
    if (first) {
      acc = std::move(colon);
      first = false;
      continue;
    }
    std::vector<Vec> meet;
    for (const Vec& x : acc)
      for (const Vec& y : colon) {
        Vec z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::max(x[i], y[i]);
        meet.push_back(std::move(z));
      }
    acc = minimalize(std::move(meet));
  }
  if (first) {
    // saturating by the zero ideal: every element qualifies
    std::size_t width = a.generators.empty() ? 0 : a.generators[0].size();
    return MonomialIdeal{{Vec(width, Int(0))}};
  }
  return MonomialIdeal{minimalize(std::move(acc))};
}

SgReport serre_grothendieck_check(const CoxSetup& s, const MonomialModule& f,
                                  const std::vector<GroupElement>& degrees, const BaseRing& base,
                                  std::optional<long> box_radius) {
  SgReport report;
  report.all_passed = true;

  CoverComplex cech = cech_cover(s);
  std::size_t rays = s.fan.rays().size();
  std::vector<std::size_t> everything(rays);
  for (std::size_t i = 0; i < rays; ++i) everything[i] = i;

  for (const GroupElement& degree : degrees) {
    gate(s, f, degree);
    long r = box_radius.value_or(default_radius(s, f, degree));

    CohomologyReport cr;
    cr.degree = degree;
    cr.cech = cech_cohomology(s, f, degree, base, r);
    cr.local = local_cohomology(s, f, degree, base, r);

    // assemble the map from the module piece into the Cech kernel, per
    // lattice translate; verified stable under box enlargement
    struct Assembled {
      long module_rank = 0;
      std::size_t map_rank = 0;
      std::vector<Int> map_orders;
    };
    auto assemble_map = [&](long radius) {
      Assembled out;
      for (const Summand& sm : f.summands) {
        GroupElement target = s.grading.class_group.add(degree, sm.shift);
        Vec v0 = s.grading.class_group.preimage(target);
        for_box(s.fan.ambient_rank(), radius, [&](const Vec& u) {
          Vec v = vec_add(v0, s.grading.c_matrix.apply(u));
          if (!survives(sm.annihilator, everything, v)) return;
          out.module_rank += 1;

          AliveMask mask = alive_mask(cech, sm.annihilator, v);
          std::vector<std::size_t> dims;
          std::vector<IntMatrix> diffs;
          assemble(cech, mask, dims, diffs);
          IntMatrix ker = IntMatrix::identity(dims[0]);
          if (dims.size() > 1 && dims[1] > 0 && dims[0] > 0) ker = kernel_basis(diffs[0]);
          if (ker.cols() == 0) return;  // the class is forced to zero

          Vec indicator(dims[0], Int(1));  // the module monomial restricts to 1 on live charts
          std::optional<Vec> x = solve(ker, indicator);
          if (!x) throw toric_error(errc::invalid_input, "module image misses the section kernel");
          Int g = 0;
          for (const Int& c : *x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
          if (g == 0) return;
          if (base.kind == BaseRing::Kind::prime_field && g % base.characteristic == 0) return;
          out.map_rank += 1;
          if (g > 1) out.map_orders.push_back(g);
        });
      }
      out.map_orders = invariant_factors(std::move(out.map_orders));
      return out;
    };
    Assembled got = assemble_map(r);
    Assembled wider = assemble_map(r + 2);
    if (got.module_rank != wider.module_rank || got.map_rank != wider.map_rank ||
        got.map_orders != wider.map_orders)
      throw toric_error(errc::box_unstable, "graded piece not stabilized at box radius " +
                                                std::to_string(r) + "; enlarge the box");

    cr.module_piece = ModuleDescriptor{got.module_rank, {}};
    cr.torsion_piece = cr.local[0];

    const ModuleDescriptor& gamma_i = cr.local[0];
    const ModuleDescriptor& sections = cr.cech[0];
    const ModuleDescriptor& first_local = cr.local[1];
    bool exact = gamma_i.rank + sections.rank == cr.module_piece.rank + first_local.rank;
    if (base.kind == BaseRing::Kind::integers) {
      exact = exact && gamma_i.torsion.empty() && sections.torsion.empty();
      exact = exact && gamma_i.rank == cr.module_piece.rank - static_cast<long>(got.map_rank);
      exact = exact &&
              first_local.rank == sections.rank - static_cast<long>(got.map_rank) &&
              first_local.torsion == got.map_orders;
    }
    cr.sequence_exact = exact;

    cr.comparison_iso = cr.local.size() == cr.cech.size() + 1;
    for (std::size_t i = 1; i < cr.cech.size() && cr.comparison_iso; ++i)
      cr.comparison_iso = cr.cech[i] == cr.local[i + 1];

    cr.passed = cr.sequence_exact && cr.comparison_iso;
    report.all_passed = report.all_passed && cr.passed;
    report.per_degree.push_back(std::move(cr));
  }
  return report;
}

FinitenessReport finiteness_probe(const CoxSetup& s, const MonomialModule& f,
                                  const std::vector<GroupElement>& degrees, const BaseRing& base,
                                  std::optional<long> box_radius) {
  FinitenessReport report;
  report.complete = is_complete(s.fan);
  report.warning = !report.complete;
  report.all_stable = true;
  for (const GroupElement& degree : degrees) {
    bool stable = true;
    try {
      cech_cohomology(s, f, degree, base, box_radius);
      local_cohomology(s, f, degree, base, box_radius);
    } catch (const toric_error& e) {
      if (e.code() != errc::box_unstable) throw;
      stable = false;
    }
    report.per_degree.emplace_back(degree, stable);
    report.all_stable = report.all_stable && stable;
  }
  return report;
}

}  // namespace toric
