#pragma once

#include <cstddef>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// Finite fan in a lattice: a face-closed set of sharp cones such that any
/// two meet in a common face. Construction from the maximal cones validates
/// both conditions and throws INVALID_FAN with the offending pair otherwise.
///
/// Cones are stored sorted by (dim, rays); indices into `cones()` are the
/// public handle used by charts, gluing data and the CLI.
class Fan {
 public:
  Fan() : ambient_(0) {}

  static Fan from_maximal_cones(std::size_t ambient_rank, const std::vector<Vec>& rays,
                                const std::vector<std::vector<std::size_t>>& maximal_cones);
  static Fan empty_fan(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  bool empty() const { return cones_.empty(); }
  std::size_t cone_count() const { return cones_.size(); }
  const std::vector<Polycone>& cones() const { return cones_; }
  const Polycone& cone(std::size_t i) const;

  // Primitive generators of the one-dimensional cones, lexicographically
  // sorted. All ray-indexed data (Cox coordinates, monomial exponents)
  // refers to this ordering.
  const std::vector<Vec>& rays() const { return rays_; }

  // Per cone: sorted indices into rays() of the rays it contains.
  const std::vector<std::vector<std::size_t>>& cone_ray_sets() const { return cone_ray_sets_; }

  // Indices of the maximal cones (not a proper face of any other cone).
  const std::vector<std::size_t>& maximal_cones() const { return maximal_; }

  // face_table()[t][s] == true iff cone t is a face of cone s.
  const std::vector<std::vector<bool>>& face_table() const { return face_table_; }

  // Index of an equal cone, or cone_count() if absent.
  std::size_t find_cone(const Polycone& c) const;

 private:
  std::size_t ambient_;
  std::vector<Polycone> cones_;
  std::vector<Vec> rays_;
  std::vector<std::vector<std::size_t>> cone_ray_sets_;
  std::vector<std::size_t> maximal_;
  std::vector<std::vector<bool>> face_table_;
};

// The support covers the whole space. Decided combinatorially: a nonempty
// fan is complete iff n == 0, or every maximal cone has dimension n and
// every (n-1)-face of a maximal cone lies in exactly two of them.
bool is_complete(const Fan& f);

// The rays span the ambient space over Q.
bool is_full(const Fan& f);

// Every cone is generated by dim-many rays.
bool is_simplicial(const Fan& f);

}  // namespace toric
