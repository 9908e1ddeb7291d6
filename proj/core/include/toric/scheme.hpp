#pragma once

#include <optional>
#include <utility>

#include "toric/fan.hpp"

namespace toric {

/// Kleene three-valued logic for ring/scheme flags. `unknown` means the
/// input did not determine the value; it is never silently coerced.
enum class TriState { no, yes, unknown };

inline TriState tri_of(bool b) { return b ? TriState::yes : TriState::no; }
TriState tri_and(TriState a, TriState b);
TriState tri_or(TriState a, TriState b);
const char* tri_name(TriState t);

/// Abstract description of the base ring. Only what the property calculus
/// consumes: flags, Krull dimension, number of minimal primes.
///
/// Conventions for the zero ring (is_zero = yes), applied by normalized():
/// its spectrum is empty, so reduced/normal/noetherian/artinian/
/// equidimensional are forced to yes (vacuously), connected/irreducible/
/// integral to no, minimal_prime_count to 0. A numeric dim together with
/// is_zero = yes is rejected; dim of the zero ring is not a number.
struct RingDescriptor {
  TriState is_zero = TriState::unknown;
  TriState reduced = TriState::unknown;
  TriState connected = TriState::unknown;
  TriState normal = TriState::unknown;
  TriState irreducible = TriState::unknown;
  TriState integral = TriState::unknown;
  TriState noetherian = TriState::unknown;
  TriState artinian = TriState::unknown;
  TriState equidimensional = TriState::unknown;
  std::optional<long> dim;
  std::optional<long> minimal_prime_count;

  // Deductive closure (integral implies irreducible and reduced, artinian
  // implies noetherian, a numeric dim implies nonzero, ...). Throws
  // invalid_input on contradictory flags.
  RingDescriptor normalized() const;
};

struct SchemeReport {
  TriState separated, quasicompact, flat, finite_presentation;
  TriState faithfully_flat, proper;
  TriState reduced, connected, normal, irreducible, integral;
  TriState noetherian, artinian, equidimensional;
  std::optional<long> dim_lower, dim_upper;  // absent for the empty scheme or unknown input
  std::optional<long> irreducible_component_count;
};

// Decision procedure for the scheme-level properties of the glued scheme
// attached to (fan, base ring), evaluated purely from the fan combinatorics
// and the ring flags. Unknown inputs propagate to unknown outputs.
SchemeReport scheme_property_report(const Fan& f, const RingDescriptor& r);

/// Presentation of one affine chart ring: a polynomial part on the sharp
/// monoid generators, a Laurent part of rank unit_rank, and binomial
/// relations among the sharp generators. Both sides of a relation evaluate
/// to the same lattice point.
struct ChartPresentation {
  std::vector<Vec> monoid_basis;  // sharp generators of the dual monoid
  std::vector<Vec> unit_basis;
  std::vector<std::pair<Vec, Vec>> relations;  // exponent-vector pairs over monoid_basis

  std::size_t unit_rank() const { return unit_basis.size(); }
};

// Dual-monoid presentation of the chart at the given cone. Relations are
// the lattice kernel of the evaluation map plus a bounded-degree congruence
// completion (total degree <= completion_degree over the generators).
ChartPresentation chart_presentation(const Fan& f, std::size_t cone_index,
                                     long completion_degree = 12);

// The element cutting the face out of a chart: the sum of all sharp monoid
// generators vanishing on the face, as an exponent vector over
// chart_presentation(f, cone_index).monoid_basis. Throws NOT_A_FACE.
Vec gluing_exponent(const Fan& f, std::size_t face_index, std::size_t cone_index);

}  // namespace toric
