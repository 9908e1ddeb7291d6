#pragma once

#include <json.hpp>
#include <string>

#include "toric/cohomology.hpp"
#include "toric/scheme.hpp"

namespace toric {

using Json = nlohmann::json;

/// Serialization context. Integers whose magnitude exceeds 2^53 are written
/// as decimal strings so arbitrary precision survives transport; emitting
/// one sets `used_bigint`, and dump_document() then stamps the top-level
/// object with "format": "bigint-string".
struct JsonWriter {
  bool used_bigint = false;

  Json integer(const Int& x);
  Json vector(const Vec& v);
  Json vectors(const std::vector<Vec>& vs);
  Json matrix_rows(const IntMatrix& m);  // row-major arrays
  Json element(const GroupElement& e);   // free coordinates then torsion residues
  Json descriptor(const ModuleDescriptor& d);
  Json descriptors(const std::vector<ModuleDescriptor>& ds);
};

// Canonical text form: sorted keys, two-space indent, trailing newline.
// Parsing the result and dumping it again reproduces the bytes.
std::string dump_document(Json doc, const JsonWriter& w);

Int int_from_json(const Json& j);
Vec vec_from_json(const Json& j);
std::vector<Vec> vecs_from_json(const Json& j, std::size_t width);

// {"ambient_rank": n, "rays": [[..]], "maximal_cones": [[ray indices]]}
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& f, JsonWriter& w);

// Flags true/false/"unknown"; missing keys mean unknown. "dim" and
// "minimal_prime_count" are integers or "unknown" or absent.
RingDescriptor ring_from_json(const Json& j);
Json tri_to_json(TriState t);

// Coordinates in the class group: free part then torsion residues.
GroupElement element_from_json(const Json& j, const FinAbGroup& g);

// {"summands": [{"shift": [coords in A], "annihilator": [[exponents]]}]}
MonomialModule module_from_json(const Json& j, const FinAbGroup& g, std::size_t ray_count);

}  // namespace toric
