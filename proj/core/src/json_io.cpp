#include "toric/json_io.hpp"

namespace toric {

namespace {

const Int kBigintBound = []() {
  Int b = 1;
  b <<= 53;
  return b;
}();

[[noreturn]] void bad(const std::string& detail) {
  throw toric_error(errc::invalid_input, detail);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json JsonWriter::integer(const Int& x) {
  if (x <= kBigintBound && x >= -kBigintBound) return Json(x.get_si());
  used_bigint = true;
  return Json(x.get_str());
}

Json JsonWriter::vector(const Vec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(integer(x));
  return a;
}

Json JsonWriter::vectors(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const Vec& v : vs) a.push_back(vector(v));
  return a;
}

Json JsonWriter::matrix_rows(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector(m.row(i)));
  return a;
}

Json JsonWriter::element(const GroupElement& e) {
  Vec coords = e.free_part;
  coords.insert(coords.end(), e.torsion_part.begin(), e.torsion_part.end());
  return vector(coords);
}

Json JsonWriter::descriptor(const ModuleDescriptor& d) {
  Json out = Json::object();
  out["rank"] = d.rank;
  Json t = Json::array();
  for (const Int& x : d.torsion) t.push_back(integer(x));
  out["torsion"] = std::move(t);
  return out;
}

Json JsonWriter::descriptors(const std::vector<ModuleDescriptor>& ds) {
  Json a = Json::array();
  for (const ModuleDescriptor& d : ds) a.push_back(descriptor(d));
  return a;
}

std::string dump_document(Json doc, const JsonWriter& w) {
  if (w.used_bigint && doc.is_object()) doc["format"] = "bigint-string";
  return doc.dump(2) + "\n";
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad("not a decimal integer string: " + j.dump());
    }
  }
  bad("expected an integer (number or decimal string), got " + j.dump());
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers, got " + j.dump());
  Vec v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(int_from_json(e));
  return v;
}

std::vector<Vec> vecs_from_json(const Json& j, std::size_t width) {
  if (!j.is_array()) bad("expected an array of integer vectors, got " + j.dump());
  std::vector<Vec> out;
  for (const Json& e : j) {
    Vec v = vec_from_json(e);
    if (v.size() != width)
      bad("vector length " + std::to_string(v.size()) + ", expected " + std::to_string(width));
    out.push_back(std::move(v));
  }
  return out;
}

Fan fan_from_json(const Json& j) {
  const Json& rank = field(j, "ambient_rank");
  if (!rank.is_number_unsigned()) bad("\"ambient_rank\" must be a nonnegative integer");
  std::size_t n = rank.get<std::size_t>();
  std::vector<Vec> rays = vecs_from_json(field(j, "rays"), n);

  const Json& mc = field(j, "maximal_cones");
  if (!mc.is_array()) bad("\"maximal_cones\" must be an array of ray index sets");
  std::vector<std::vector<std::size_t>> maximal;
  for (const Json& cone : mc) {
    if (!cone.is_array()) bad("maximal cone must be an array of ray indices");
    std::vector<std::size_t> idx;
    for (const Json& e : cone) {
      if (!e.is_number_unsigned()) bad("ray index must be a nonnegative integer");
      std::size_t i = e.get<std::size_t>();
      if (i >= rays.size()) bad("ray index " + std::to_string(i) + " out of range");
      idx.push_back(i);
    }
    maximal.push_back(std::move(idx));
  }
  if (maximal.empty()) return Fan::empty_fan(n);
  return Fan::from_maximal_cones(n, rays, maximal);
}

Json fan_to_json(const Fan& f, JsonWriter& w) {
  Json out = Json::object();
  out["ambient_rank"] = f.ambient_rank();
  out["rays"] = w.vectors(f.rays());
  Json mc = Json::array();
  for (std::size_t mi : f.maximal_cones()) {
    Json cone = Json::array();
    for (std::size_t r : f.cone_ray_sets()[mi]) cone.push_back(r);
    mc.push_back(std::move(cone));
  }
  out["maximal_cones"] = std::move(mc);
  return out;
}

namespace {

TriState tri_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) return TriState::unknown;
  const Json& v = j.at(key);
  if (v.is_boolean()) return tri_of(v.get<bool>());
  if (v.is_string() && v.get<std::string>() == "unknown") return TriState::unknown;
  bad(std::string("\"") + key + "\" must be true, false or \"unknown\"");
}

std::optional<long> count_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  const Json& v = j.at(key);
  if (v.is_string() && v.get<std::string>() == "unknown") return std::nullopt;
  if (v.is_number_integer()) return v.get<long>();
  bad(std::string("\"") + key + "\" must be an integer or \"unknown\"");
}

}  // namespace

RingDescriptor ring_from_json(const Json& j) {
  if (!j.is_object()) bad("ring descriptor must be a JSON object");
  RingDescriptor r;
  r.is_zero = tri_from_json(j, "is_zero");
  r.reduced = tri_from_json(j, "reduced");
  r.connected = tri_from_json(j, "connected");
  r.normal = tri_from_json(j, "normal");
  r.irreducible = tri_from_json(j, "irreducible");
  r.integral = tri_from_json(j, "integral");
  r.noetherian = tri_from_json(j, "noetherian");
  r.artinian = tri_from_json(j, "artinian");
  r.equidimensional = tri_from_json(j, "equidimensional");
  r.dim = count_from_json(j, "dim");
  r.minimal_prime_count = count_from_json(j, "minimal_prime_count");
  return r;
}

Json tri_to_json(TriState t) {
  switch (t) {
    case TriState::yes: return Json(true);
    case TriState::no: return Json(false);
    default: return Json("unknown");
  }
}

GroupElement element_from_json(const Json& j, const FinAbGroup& g) {
  Vec coords = vec_from_json(j);
  std::size_t want = g.free_rank() + g.torsion().size();
  if (coords.size() != want)
    bad("group element needs " + std::to_string(want) + " coordinates, got " +
        std::to_string(coords.size()));
  return g.element_from_lift(coords);
}

MonomialModule module_from_json(const Json& j, const FinAbGroup& g, std::size_t ray_count) {
  const Json& summands = field(j, "summands");
  if (!summands.is_array()) bad("\"summands\" must be an array");
  MonomialModule f;
  for (const Json& s : summands) {
    Summand out;
    out.shift = element_from_json(field(s, "shift"), g);
    out.annihilator.generators = vecs_from_json(field(s, "annihilator"), ray_count);
    f.summands.push_back(std::move(out));
  }
  return f;
}

}  // namespace toric
