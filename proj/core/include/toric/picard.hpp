#pragma once

#include "toric/cox.hpp"
#include "toric/fan.hpp"

namespace toric {

// one lattice vector per maximal cone; differences vanish on shared faces
struct VirtualPolytope {
  std::vector<Vec> assignment;  // parallel to Fan::maximal_cones()
};

// Basis of the compatibility lattice inside Z^(#maximal * rank), as columns.
// Blocks of `rank` coordinates follow the maximal_cones() order.
IntMatrix virtual_polytope_lattice(const Fan& f);

VirtualPolytope assignment_from_vector(const Fan& f, const Vec& v);

struct PicardGroup {
  std::vector<GroupElement> as_subgroup_of_A;  // nonzero generators inside the class group
  FinAbGroup abstract_type;
};

// evaluates each assignment on the rays and pushes the result into the class group
PicardGroup picard_group(const Fan& f, const CoxGrading& g);

struct PicReport {
  bool small = false;
  bool simplicial = false;
  bool big = false;
  bool passed = false;  // small, and big whenever the fan is simplicial
};

PicReport verify_pic_properties(const Fan& f, const PicardGroup& p);

}  // namespace toric
