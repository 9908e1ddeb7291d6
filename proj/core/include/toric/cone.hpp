#pragma once

#include <cstddef>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Rational polyhedral cone in a lattice of finite rank, stored in a fully
/// canonical form:
///   - lineality: Hermite basis of the (saturated) lineality lattice,
///   - rays: primitive extreme ray representatives, canonical modulo the
///     lineality lattice, lexicographically sorted,
///   - facet normals: primitive, canonical modulo span(cone)-perp, sorted,
///   - span_perp: Hermite basis of { u : u(x) = 0 for all x in the cone }.
/// Two cones are equal as sets iff their stored data compare equal.
class Polycone {
 public:
  Polycone() : ambient_(0), dim_(0) {}

  static Polycone from_generators(std::vector<Vec> gens, std::size_t ambient_rank);
  static Polycone from_inequalities(const std::vector<Vec>& ineqs, std::size_t ambient_rank);
  static Polycone zero_cone(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  std::size_t lineality_rank() const { return lineality_.size(); }

  const std::vector<Vec>& ray_generators() const { return rays_; }
  const std::vector<Vec>& lineality_basis() const { return lineality_; }
  const std::vector<Vec>& facet_normals() const { return facets_; }
  const std::vector<Vec>& span_perp_basis() const { return perp_; }

  // Minimal generating data: rays plus +-lineality basis.
  std::vector<Vec> generators() const;

  bool is_sharp() const { return lineality_.empty(); }
  bool is_zero_cone() const { return rays_.empty() && lineality_.empty(); }
  bool contains(const Vec& x) const;

  bool operator==(const Polycone& rhs) const = default;
  bool operator<(const Polycone& rhs) const;  // arbitrary total order for dedup

 private:
  std::size_t ambient_;
  std::size_t dim_;
  std::vector<Vec> rays_;
  std::vector<Vec> lineality_;
  std::vector<Vec> facets_;
  std::vector<Vec> perp_;
};

Polycone dual_cone(const Polycone& c);

// All faces, ordered by (dim, rays). Requires a sharp cone.
std::vector<Polycone> faces(const Polycone& c);

// Is t a face of s? Total on all cones with matching ambient rank.
bool is_face_of(const Polycone& t, const Polycone& s);

Polycone intersect(const Polycone& a, const Polycone& b);

// Unique minimal generating set of the monoid of lattice points of a sharp
// cone, lexicographically sorted. Empty for the zero cone.
std::vector<Vec> hilbert_basis(const Polycone& c);

// Lattice points of an arbitrary cone, split as unit part (the lineality
// lattice) and a finite generating set for a sharp complement. The sharp
// generators are the Hilbert basis of the quotient cone, lifted along a
// linear section, so evaluating relations on lifted exponents is exact.
struct MonoidSplit {
  std::vector<Vec> sharp_generators;
  std::vector<Vec> unit_basis;
};
MonoidSplit monoid_presentation_split(const Polycone& c);

}  // namespace toric
