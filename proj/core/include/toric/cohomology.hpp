#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/cox.hpp"
#include "toric/fan.hpp"
#include "toric/homology.hpp"

namespace toric {

// one graded summand: a degree shift of the homogeneous coordinate ring
// modulo a monomial annihilator
struct Summand {
  GroupElement shift;
  MonomialIdeal annihilator;
};

struct MonomialModule {
  std::vector<Summand> summands;
};

// fan plus grading subgroup with the derived restriction data; the chart
// machinery needs the subgroup to admit a finite restriction exponent
struct CoxSetup {
  Fan fan;
  CoxGrading grading;
  SubgroupB subgroup;
  Int exponent = 1;          // minimal m putting every chart monomial degree in the subgroup
  MonomialIdeal irrelevant;  // chart vanishing monomials scaled by the exponent
};

CoxSetup make_setup(Fan f, SubgroupB b);
CoxSetup make_setup(Fan f);  // grade by the whole class group

// shifts and annihilator generator degrees must lie in the grading subgroup
void validate_module(const CoxSetup& s, const MonomialModule& f);

// true when z^v survives as a basis monomial after inverting the coordinates
// away from the chart: nonnegative on the chart rays and not divisible by an
// annihilator generator on those rays
bool chart_monomial_predicate(const MonomialModule& f, std::size_t summand, const Fan& fan,
                              std::size_t cone_index, const Vec& v);

// sheaf cohomology of the associated module on the maximal-cone cover,
// one descriptor per Cech level
std::vector<ModuleDescriptor> cech_cohomology(const CoxSetup& s, const MonomialModule& f,
                                              const GroupElement& degree, const BaseRing& base,
                                              std::optional<long> box_radius = std::nullopt);

// graded local cohomology against the irrelevant ideal via the extended
// (stable Koszul) complex; entry 0 is the torsion submodule piece
std::vector<ModuleDescriptor> local_cohomology(const CoxSetup& s, const MonomialModule& f,
                                               const GroupElement& degree, const BaseRing& base,
                                               std::optional<long> box_radius = std::nullopt);

struct TorsionPiece {
  GroupElement degree;
  // (summand index, exponent vector) basis of the torsion submodule piece,
  // enumerated within the search box
  std::vector<std::pair<std::size_t, Vec>> monomials;
};

std::vector<TorsionPiece> torsion_functor(const CoxSetup& s, const MonomialModule& f,
                                          const std::vector<GroupElement>& degrees,
                                          std::optional<long> box_radius = std::nullopt);

// colon-stable saturation of a monomial ideal along another
MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& by);

struct CohomologyReport {
  GroupElement degree;
  std::vector<ModuleDescriptor> cech;
  std::vector<ModuleDescriptor> local;
  ModuleDescriptor module_piece;   // the degree piece of the module itself
  ModuleDescriptor torsion_piece;  // = local[0]
  bool sequence_exact = false;     // 0 -> torsion -> module -> sections -> first local -> 0
  bool comparison_iso = false;     // higher sections match shifted local cohomology
  bool passed = false;
};

struct SgReport {
  std::vector<CohomologyReport> per_degree;
  bool all_passed = false;
};

SgReport serre_grothendieck_check(const CoxSetup& s, const MonomialModule& f,
                                  const std::vector<GroupElement>& degrees, const BaseRing& base,
                                  std::optional<long> box_radius = std::nullopt);

struct FinitenessReport {
  bool complete = false;
  bool warning = false;  // set when the fan is not complete
  bool all_stable = false;
  std::vector<std::pair<GroupElement, bool>> per_degree;
};

// checks that every probed graded piece stabilizes under box enlargement;
// only a witness on complete fans, a warning otherwise
FinitenessReport finiteness_probe(const CoxSetup& s, const MonomialModule& f,
                                  const std::vector<GroupElement>& degrees, const BaseRing& base,
                                  std::optional<long> box_radius = std::nullopt);

}  // namespace toric
