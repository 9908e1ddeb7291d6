#pragma once

#include <cstddef>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// coefficients for homological computations; all three kinds are Noetherian
struct BaseRing {
  enum class Kind { rationals, prime_field, integers };
  Kind kind = Kind::rationals;
  long characteristic = 0;  // set for prime_field only

  static BaseRing rationals() { return {Kind::rationals, 0}; }
  static BaseRing prime_field(long p);  // rejects composite p
  static BaseRing integers() { return {Kind::integers, 0}; }
  bool is_field() const { return kind != Kind::integers; }
};

// one graded piece: a vector-space dimension over fields, or free rank
// plus invariant-factor torsion over the integers
struct ModuleDescriptor {
  long rank = 0;
  std::vector<Int> torsion;  // each > 1, divisibility-increasing
  bool operator==(const ModuleDescriptor&) const = default;
};

std::string descriptor_to_string(const ModuleDescriptor& d);

// direct sum; torsion lists are recombined into one invariant-factor chain
ModuleDescriptor descriptor_sum(const ModuleDescriptor& a, const ModuleDescriptor& b);

// invariant factors (> 1 only) of a list of cyclic orders
std::vector<Int> invariant_factors(std::vector<Int> orders);

std::size_t rank_over_base(const IntMatrix& m, const BaseRing& base);

// Cohomology of 0 -> C^0 -> ... -> C^L -> 0 given by integer matrices;
// diffs[p] has shape dims[p+1] x dims[p]. Checks that consecutive
// differentials compose to zero.
std::vector<ModuleDescriptor> complex_cohomology(const std::vector<std::size_t>& dims,
                                                 const std::vector<IntMatrix>& diffs,
                                                 const BaseRing& base);

}  // namespace toric
