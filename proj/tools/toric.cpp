// Command line front end: parse fan/ring/module JSON, dispatch to the
// library, print one deterministic JSON document on stdout.
//
// Exit codes: 0 success, 2 malformed input, 3 failed mathematical
// precondition (NOT_FULL, NOT_BIG, BOX_UNSTABLE, INVALID_FAN, ...).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "toric/json_io.hpp"
#include "toric/picard.hpp"

namespace fs = std::filesystem;
using namespace toric;

namespace {

int exit_code = 0;
std::string out_path;

void emit(Json doc, const JsonWriter& w) {
  std::string text = dump_document(std::move(doc), w);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw toric_error(errc::invalid_input, "cannot write " + out_path);
    f << text;
  }
  std::cout << text;
}

Json load_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw toric_error(errc::invalid_input, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw toric_error(errc::invalid_input, path + ": " + e.what());
  }
}

// Arguments that take JSON accept either a literal document or a file path.
Json inline_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
    try {
      return Json::parse(arg);
    } catch (const Json::exception& e) {
      throw toric_error(errc::invalid_input, std::string("inline JSON: ") + e.what());
    }
  }
  return load_json(arg);
}

Fan load_fan(const std::string& path) { return fan_from_json(load_json(path)); }

BaseRing base_from_string(const std::string& s) {
  if (s == "QQ") return BaseRing::rationals();
  if (s == "ZZ") return BaseRing::integers();
  if (s.size() > 1 && s[0] == 'F') {
    try {
      return BaseRing::prime_field(std::stol(s.substr(1)));
    } catch (const std::logic_error&) {
      throw toric_error(errc::invalid_input, "bad prime field name: " + s);
    }
  }
  throw toric_error(errc::invalid_input, "unknown base ring \"" + s + "\" (QQ, ZZ or Fp)");
}

std::string base_name(const BaseRing& b) {
  switch (b.kind) {
    case BaseRing::Kind::rationals: return "QQ";
    case BaseRing::Kind::integers: return "ZZ";
    default: return "F" + std::to_string(b.characteristic);
  }
}

// --box wins over the TORIC_BOX_RADIUS environment variable.
std::optional<long> box_radius(const std::optional<long>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("TORIC_BOX_RADIUS")) {
    try {
      return std::stol(env);
    } catch (const std::logic_error&) {
      throw toric_error(errc::invalid_input, std::string("TORIC_BOX_RADIUS: ") + env);
    }
  }
  return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) end = s.size();
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw toric_error(errc::invalid_input, what + ": \"" + s + "\"");
  }
}

GroupElement degree_from_string(const std::string& text, const FinAbGroup& g) {
  std::vector<std::string> parts = split(text, ',');
  Vec coords;
  for (const std::string& p : parts) coords.push_back(parse_long(p, "degree coordinate"));
  std::size_t want = g.free_rank() + g.torsion().size();
  if (coords.size() != want)
    throw toric_error(errc::invalid_input, "degree needs " + std::to_string(want) +
                                               " coordinates, got " +
                                               std::to_string(coords.size()));
  return g.element_from_lift(coords);
}

// Inclusive range "a..b" per free coordinate, comma separated; torsion
// coordinates are enumerated in full.
std::vector<GroupElement> degrees_from_ranges(const std::string& text, const FinAbGroup& g) {
  std::vector<std::string> parts = split(text, ',');
  if (parts.size() != g.free_rank())
    throw toric_error(errc::invalid_input,
                      "need one a..b range per free coordinate (" +
                          std::to_string(g.free_rank()) + "), got " +
                          std::to_string(parts.size()));
  std::vector<std::pair<long, long>> ranges;
  for (const std::string& p : parts) {
    std::size_t dots = p.find("..");
    if (dots == std::string::npos)
      throw toric_error(errc::invalid_input, "range must look like a..b: \"" + p + "\"");
    long lo = parse_long(p.substr(0, dots), "range bound");
    long hi = parse_long(p.substr(dots + 2), "range bound");
    if (lo > hi) throw toric_error(errc::invalid_input, "empty range: \"" + p + "\"");
    ranges.emplace_back(lo, hi);
  }
  std::vector<GroupElement> out;
  Vec coords(g.free_rank() + g.torsion().size(), Int(0));
  std::function<void(std::size_t)> walk = [&](std::size_t pos) {
    if (pos == coords.size()) {
      out.push_back(g.element_from_lift(coords));
      return;
    }
    if (pos < g.free_rank()) {
      for (long v = ranges[pos].first; v <= ranges[pos].second; ++v) {
        coords[pos] = v;
        walk(pos + 1);
      }
    } else {
      Int order = g.torsion()[pos - g.free_rank()];
      for (Int v = 0; v < order; ++v) {
        coords[pos] = v;
        walk(pos + 1);
      }
    }
  };
  walk(0);
  return out;
}

SubgroupB subgroup_from_arg(const std::string& arg, const FinAbGroup& g) {
  Json j = inline_or_file(arg);
  if (!j.is_array()) throw toric_error(errc::invalid_input, "subgroup must be a JSON array");
  SubgroupB b;
  for (const Json& e : j) b.generators.push_back(element_from_json(e, g));
  return b;
}

CoxSetup setup_for(const std::string& fan_path, const std::string& subgroup_arg) {
  Fan f = load_fan(fan_path);
  if (subgroup_arg.empty()) return make_setup(std::move(f));
  CoxGrading g = cox_grading(f);
  SubgroupB b = subgroup_from_arg(subgroup_arg, g.class_group);
  return make_setup(std::move(f), std::move(b));
}

MonomialModule module_for(const std::string& module_arg, const CoxSetup& s) {
  if (module_arg.empty())
    return MonomialModule{{Summand{s.grading.class_group.zero(), MonomialIdeal{}}}};
  Json j = inline_or_file(module_arg);
  MonomialModule f = module_from_json(j, s.grading.class_group, s.fan.rays().size());
  validate_module(s, f);
  return f;
}

Json index_to_json(const SubgroupIndex& idx, JsonWriter& w) {
  if (!idx.finite) return Json("infinite");
  return w.integer(idx.index);
}

// ---------------------------------------------------------------------------
// Verbs

void run_fan_validate(const std::string& fan_path) {
  Fan f = load_fan(fan_path);
  JsonWriter w;
  Json doc = Json::object();
  doc["ambient_rank"] = f.ambient_rank();
  doc["cone_count"] = f.cone_count();
  doc["maximal_cone_count"] = f.maximal_cones().size();
  doc["ray_count"] = f.rays().size();
  doc["valid"] = true;
  emit(std::move(doc), w);
}

void run_fan_props(const std::string& fan_path) {
  Fan f = load_fan(fan_path);
  JsonWriter w;
  Json doc = Json::object();
  doc["complete"] = is_complete(f);
  doc["full"] = is_full(f);
  doc["simplicial"] = is_simplicial(f);
  emit(std::move(doc), w);
}

Json count_to_json(const std::optional<long>& v) {
  return v ? Json(*v) : Json("unknown");
}

void run_scheme_report(const std::string& fan_path, const std::string& ring_path) {
  Fan f = load_fan(fan_path);
  RingDescriptor r = ring_from_json(load_json(ring_path));
  SchemeReport rep = scheme_property_report(f, r);
  JsonWriter w;
  Json doc = Json::object();
  doc["separated"] = tri_to_json(rep.separated);
  doc["quasicompact"] = tri_to_json(rep.quasicompact);
  doc["flat"] = tri_to_json(rep.flat);
  doc["finite_presentation"] = tri_to_json(rep.finite_presentation);
  doc["faithfully_flat"] = tri_to_json(rep.faithfully_flat);
  doc["proper"] = tri_to_json(rep.proper);
  doc["reduced"] = tri_to_json(rep.reduced);
  doc["connected"] = tri_to_json(rep.connected);
  doc["normal"] = tri_to_json(rep.normal);
  doc["irreducible"] = tri_to_json(rep.irreducible);
  doc["integral"] = tri_to_json(rep.integral);
  doc["noetherian"] = tri_to_json(rep.noetherian);
  doc["artinian"] = tri_to_json(rep.artinian);
  doc["equidimensional"] = tri_to_json(rep.equidimensional);
  doc["dim_lower"] = count_to_json(rep.dim_lower);
  doc["dim_upper"] = count_to_json(rep.dim_upper);
  doc["irreducible_component_count"] = count_to_json(rep.irreducible_component_count);
  emit(std::move(doc), w);
}

void run_cox_grading(const std::string& fan_path) {
  Fan f = load_fan(fan_path);
  CoxGrading g = cox_grading(f);
  JsonWriter w;
  Json doc = Json::object();
  doc["free_rank"] = g.class_group.free_rank();
  Json tors = Json::array();
  for (const Int& t : g.class_group.torsion()) tors.push_back(w.integer(t));
  doc["torsion"] = std::move(tors);
  doc["c_matrix"] = w.matrix_rows(g.c_matrix);
  // the recorded quotient map: column j holds the coordinates of the j-th
  // ray degree, so results are reproducible in a fixed basis
  std::size_t k = g.class_group.free_rank() + g.class_group.torsion().size();
  IntMatrix proj(k, f.rays().size());
  for (std::size_t j = 0; j < g.ray_degrees.size(); ++j) {
    Vec lift = g.class_group.element_lift(g.ray_degrees[j]);
    for (std::size_t i = 0; i < k; ++i) proj.at(i, j) = lift[i];
  }
  doc["projection"] = w.matrix_rows(proj);
  Json degs = Json::array();
  for (const GroupElement& d : g.ray_degrees) degs.push_back(w.element(d));
  doc["ray_degrees"] = std::move(degs);
  emit(std::move(doc), w);
}

void run_cox_irrelevant(const std::string& fan_path) {
  Fan f = load_fan(fan_path);
  CoxGrading g = cox_grading(f);
  MonomialIdeal ideal = irrelevant_ideal(f);
  JsonWriter w;
  Json doc = Json::object();
  doc["generators"] = w.vectors(ideal.generators);
  Json degs = Json::array();
  for (const Vec& gen : ideal.generators) degs.push_back(w.element(g.degree(gen)));
  doc["degrees"] = std::move(degs);
  bool unit = false;
  for (const Vec& gen : ideal.generators) unit = unit || vec_is_zero(gen);
  doc["unit_ideal"] = unit;
  doc["zero_ideal"] = ideal.generators.empty();
  emit(std::move(doc), w);
}

void run_cox_subgroup(const std::string& fan_path, const std::string& gens_arg) {
  Fan f = load_fan(fan_path);
  CoxGrading g = cox_grading(f);
  SubgroupB b = subgroup_from_arg(gens_arg, g.class_group);
  JsonWriter w;
  Json doc = Json::object();
  bool big = is_big(b, g);
  doc["big"] = big;
  doc["small"] = is_small(b, f, g);
  doc["index_in_A"] = index_to_json(subgroup_index(b.generators, g.class_group), w);
  if (big) doc["restriction_exponent"] = w.integer(restriction_exponent(b, f, g));
  emit(std::move(doc), w);
}

void run_chart(const std::string& fan_path, const std::string& rays_arg, long relation_degree) {
  Fan f = load_fan(fan_path);
  std::vector<std::size_t> want;
  for (const std::string& p : split(rays_arg, ',')) {
    long v = parse_long(p, "ray index");
    if (v < 0 || std::size_t(v) >= f.rays().size())
      throw toric_error(errc::invalid_input, "ray index out of range: " + p);
    want.push_back(std::size_t(v));
  }
  std::sort(want.begin(), want.end());
  std::size_t ci = f.cone_count();
  for (std::size_t i = 0; i < f.cone_count(); ++i)
    if (f.cone_ray_sets()[i] == want) ci = i;
  if (ci == f.cone_count())
    throw toric_error(errc::invalid_input, "no cone with ray set [" + rays_arg + "]");

  ChartPresentation pres = chart_presentation(f, ci, relation_degree);
  CoxGrading g = cox_grading(f);
  MonoidSplit dz = chart_degree_zero(f, g, ci);
  JsonWriter w;
  Json doc = Json::object();
  doc["cone_dim"] = f.cone(ci).dim();
  Json rays = Json::array();
  for (std::size_t r : f.cone_ray_sets()[ci]) rays.push_back(r);
  doc["cone_rays"] = std::move(rays);
  doc["monoid_generators"] = w.vectors(pres.monoid_basis);
  doc["unit_basis"] = w.vectors(pres.unit_basis);
  doc["unit_rank"] = pres.unit_rank();
  Json rels = Json::array();
  for (const auto& [lhs, rhs] : pres.relations) {
    Json rel = Json::object();
    rel["lhs"] = w.vector(lhs);
    rel["rhs"] = w.vector(rhs);
    rels.push_back(std::move(rel));
  }
  doc["relations"] = std::move(rels);
  doc["degree_zero_sharp"] = w.vectors(dz.sharp_generators);
  doc["degree_zero_units"] = w.vectors(dz.unit_basis);
  doc["iso_with_dual_monoid"] = compare_chart_iso(f, g, ci);
  emit(std::move(doc), w);
}

void run_pic(const std::string& fan_path) {
  Fan f = load_fan(fan_path);
  CoxGrading g = cox_grading(f);
  PicardGroup p = picard_group(f, g);
  PicReport rep = verify_pic_properties(f, p);
  JsonWriter w;
  Json doc = Json::object();
  Json abstract = Json::object();
  abstract["free_rank"] = p.abstract_type.free_rank();
  Json tors = Json::array();
  for (const Int& t : p.abstract_type.torsion()) tors.push_back(w.integer(t));
  abstract["torsion"] = std::move(tors);
  doc["abstract"] = std::move(abstract);
  Json gens = Json::array();
  for (const GroupElement& e : p.as_subgroup_of_A) gens.push_back(w.element(e));
  doc["generators_in_A"] = std::move(gens);
  doc["index_in_A"] = index_to_json(subgroup_index(p.as_subgroup_of_A, g.class_group), w);
  doc["small"] = rep.small;
  doc["big"] = rep.big;
  doc["simplicial"] = rep.simplicial;
  doc["passed"] = rep.passed;
  emit(std::move(doc), w);
}

struct CohomologyArgs {
  std::string fan, module, subgroup, degree;
  std::string base = "QQ";
  std::optional<long> box;
};

void run_cohomology(const CohomologyArgs& args, bool local) {
  CoxSetup s = setup_for(args.fan, args.subgroup);
  MonomialModule f = module_for(args.module, s);
  GroupElement deg = degree_from_string(args.degree, s.grading.class_group);
  BaseRing base = base_from_string(args.base);
  std::optional<long> box = box_radius(args.box);
  std::vector<ModuleDescriptor> h =
      local ? local_cohomology(s, f, deg, base, box) : cech_cohomology(s, f, deg, base, box);
  JsonWriter w;
  Json doc = Json::object();
  doc["base"] = base_name(base);
  doc["degree"] = w.element(deg);
  doc["h"] = w.descriptors(h);
  emit(std::move(doc), w);
}

void run_sgcheck(const CohomologyArgs& args, const std::string& degrees_arg) {
  CoxSetup s = setup_for(args.fan, args.subgroup);
  MonomialModule f = module_for(args.module, s);
  std::vector<GroupElement> degrees = degrees_from_ranges(degrees_arg, s.grading.class_group);
  BaseRing base = base_from_string(args.base);
  SgReport rep = serre_grothendieck_check(s, f, degrees, base, box_radius(args.box));
  JsonWriter w;
  Json doc = Json::object();
  doc["all_pass"] = rep.all_passed;
  doc["base"] = base_name(base);
  Json per = Json::array();
  for (const CohomologyReport& r : rep.per_degree) {
    Json entry = Json::object();
    entry["degree"] = w.element(r.degree);
    entry["pass"] = r.passed;
    entry["sequence_exact"] = r.sequence_exact;
    entry["comparison_iso"] = r.comparison_iso;
    entry["module"] = w.descriptor(r.module_piece);
    entry["torsion_submodule"] = w.descriptor(r.torsion_piece);
    entry["sections"] = w.descriptors(r.cech);
    entry["local"] = w.descriptors(r.local);
    per.push_back(std::move(entry));
  }
  doc["per_degree"] = std::move(per);
  emit(std::move(doc), w);
}

void run_saturate(const std::string& ideal_arg, const std::string& by_arg,
                  const std::string& fan_path) {
  Json ideal_json = inline_or_file(ideal_arg);
  if (!ideal_json.is_array())
    throw toric_error(errc::invalid_input, "ideal must be an array of exponent vectors");
  std::optional<Fan> f;
  if (!fan_path.empty()) f = load_fan(fan_path);

  std::size_t width;
  if (f) {
    width = f->rays().size();
  } else if (!ideal_json.empty()) {
    width = vec_from_json(ideal_json.front()).size();
  } else if (!by_arg.empty()) {
    Json by_json = inline_or_file(by_arg);
    if (!by_json.is_array() || by_json.empty())
      throw toric_error(errc::invalid_input, "cannot infer the variable count");
    width = vec_from_json(by_json.front()).size();
  } else {
    throw toric_error(errc::invalid_input, "cannot infer the variable count");
  }

  MonomialIdeal a{vecs_from_json(ideal_json, width)};
  MonomialIdeal by;
  if (!by_arg.empty()) {
    Json by_json = inline_or_file(by_arg);
    if (!by_json.is_array())
      throw toric_error(errc::invalid_input, "colon ideal must be an array of exponent vectors");
    by.generators = vecs_from_json(by_json, width);
  } else if (f) {
    by = irrelevant_ideal(*f);
  } else {
    throw toric_error(errc::invalid_input, "need --by or --fan for the colon ideal");
  }

  JsonWriter w;
  Json doc = Json::object();
  doc["generators"] = w.vectors(saturate(a, by).generators);
  emit(std::move(doc), w);
}

// Summary of one fixture fan compared by catalog-run.
Json catalog_report(const std::string& fan_path) {
  Json doc = Json::object();
  Fan f;
  try {
    f = load_fan(fan_path);
  } catch (const toric_error& e) {
    if (e.code() == errc::invalid_input) throw;
    doc["error"] = e.code_name();
    return doc;
  }
  JsonWriter w;
  Json props = Json::object();
  props["complete"] = is_complete(f);
  props["full"] = is_full(f);
  props["simplicial"] = is_simplicial(f);
  doc["props"] = std::move(props);
  CoxGrading g = cox_grading(f);
  Json grading = Json::object();
  grading["free_rank"] = g.class_group.free_rank();
  Json tors = Json::array();
  for (const Int& t : g.class_group.torsion()) tors.push_back(w.integer(t));
  grading["torsion"] = std::move(tors);
  doc["grading"] = std::move(grading);
  doc["irrelevant"] = w.vectors(irrelevant_ideal(f).generators);
  try {
    PicardGroup p = picard_group(f, g);
    Json pic = Json::object();
    pic["free_rank"] = p.abstract_type.free_rank();
    Json ptors = Json::array();
    for (const Int& t : p.abstract_type.torsion()) ptors.push_back(w.integer(t));
    pic["torsion"] = std::move(ptors);
    pic["index_in_A"] = index_to_json(subgroup_index(p.as_subgroup_of_A, g.class_group), w);
    doc["pic"] = std::move(pic);
  } catch (const toric_error& e) {
    doc["pic"] = e.code_name();
  }
  return doc;
}

void run_catalog(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw toric_error(errc::invalid_input, "not a directory: " + dir);
  std::map<std::string, fs::path> fans;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    const std::string suffix = ".fan.json";
    if (name.size() > suffix.size() && name.ends_with(suffix))
      fans[name.substr(0, name.size() - suffix.size())] = entry.path();
  }
  if (fans.empty()) throw toric_error(errc::invalid_input, "no *.fan.json fixtures in " + dir);

  JsonWriter w;
  Json fixtures = Json::array();
  bool all_pass = true;
  for (const auto& [name, path] : fans) {
    fs::path expected_path = fs::path(dir) / (name + ".expected.json");
    Json entry = Json::object();
    entry["name"] = name;
    if (!fs::exists(expected_path)) {
      entry["pass"] = false;
      entry["diff"] = Json{{"actual", catalog_report(path.string())},
                           {"expected", "missing " + name + ".expected.json"}};
      all_pass = false;
      fixtures.push_back(std::move(entry));
      continue;
    }
    Json expected = load_json(expected_path.string());
    Json actual = catalog_report(path.string());
    bool pass = (actual == expected);
    entry["pass"] = pass;
    if (!pass) entry["diff"] = Json{{"actual", actual}, {"expected", expected}};
    all_pass = all_pass && pass;
    fixtures.push_back(std::move(entry));
  }
  Json doc = Json::object();
  doc["all_pass"] = all_pass;
  doc["fixtures"] = std::move(fixtures);
  emit(std::move(doc), w);
  if (!all_pass) exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for lattice fans and their schemes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", out_path, "also write the JSON document to this file");

  std::string fan_path, ring_path, gens_arg, rays_arg, ideal_arg, by_arg, degrees_arg;
  std::string catalog_dir = "fixtures";
  long relation_degree = 12;
  CohomologyArgs coh;

  auto* fan_validate = app.add_subcommand("fan-validate", "parse and validate a fan");
  fan_validate->add_option("--fan", fan_path, "fan JSON file")->required();

  auto* fan_props = app.add_subcommand("fan-props", "completeness, fullness, simpliciality");
  fan_props->add_option("--fan", fan_path, "fan JSON file")->required();

  auto* scheme = app.add_subcommand("scheme-report", "scheme properties over a described ring");
  scheme->add_option("--fan", fan_path, "fan JSON file")->required();
  scheme->add_option("--ring", ring_path, "ring descriptor JSON file")->required();

  auto* grading = app.add_subcommand("cox-grading", "class group and ray degrees");
  grading->add_option("--fan", fan_path, "fan JSON file")->required();

  auto* irrelevant = app.add_subcommand("cox-irrelevant", "irrelevant ideal generators");
  irrelevant->add_option("--fan", fan_path, "fan JSON file")->required();

  auto* subgroup = app.add_subcommand("cox-subgroup", "big/small tests for a grading subgroup");
  subgroup->add_option("--fan", fan_path, "fan JSON file")->required();
  subgroup->add_option("--gens", gens_arg, "subgroup generators (JSON or file)")->required();

  auto* chart = app.add_subcommand("chart", "affine chart presentation at a cone");
  chart->add_option("--fan", fan_path, "fan JSON file")->required();
  chart->add_option("--rays", rays_arg, "comma separated ray indices (empty: zero cone)");
  chart->add_option("--relation-degree", relation_degree,
                    "total degree bound for relation completion");

  auto* pic = app.add_subcommand("pic", "Picard group inside the class group");
  pic->add_option("--fan", fan_path, "fan JSON file")->required();

  auto add_cohomology_options = [&](CLI::App* cmd, bool with_degree) {
    cmd->add_option("--fan", coh.fan, "fan JSON file")->required();
    cmd->add_option("--module", coh.module, "module JSON (default: coordinate ring)");
    cmd->add_option("--subgroup", coh.subgroup, "grading subgroup generators (JSON or file)");
    cmd->add_option("--base", coh.base, "coefficients: QQ, ZZ or Fp (default QQ)");
    cmd->add_option("--box", coh.box, "exponent search box radius");
    if (with_degree) cmd->add_option("--degree", coh.degree, "degree coordinates a,b,...");
  };

  auto* cohomology = app.add_subcommand("cohomology", "sheaf cohomology of one graded piece");
  add_cohomology_options(cohomology, true);

  auto* localcoh = app.add_subcommand("localcoh", "local cohomology against the irrelevant ideal");
  add_cohomology_options(localcoh, true);

  auto* sgcheck = app.add_subcommand("sgcheck", "section/local cohomology comparison over degrees");
  add_cohomology_options(sgcheck, false);
  sgcheck->add_option("--degrees", degrees_arg, "inclusive a..b per free coordinate");

  auto* saturate_cmd = app.add_subcommand("saturate", "stable colon of monomial ideals");
  saturate_cmd->add_option("--ideal", ideal_arg, "monomial ideal (JSON or file)")->required();
  saturate_cmd->add_option("--by", by_arg, "colon ideal (JSON or file)");
  saturate_cmd->add_option("--fan", fan_path, "take the colon ideal from this fan");

  auto* catalog = app.add_subcommand("catalog-run", "compare fixture fans against expectations");
  catalog->add_option("--dir", catalog_dir, "fixture directory (default: fixtures)");

  fan_validate->callback([&] { run_fan_validate(fan_path); });
  fan_props->callback([&] { run_fan_props(fan_path); });
  scheme->callback([&] { run_scheme_report(fan_path, ring_path); });
  grading->callback([&] { run_cox_grading(fan_path); });
  irrelevant->callback([&] { run_cox_irrelevant(fan_path); });
  subgroup->callback([&] { run_cox_subgroup(fan_path, gens_arg); });
  chart->callback([&] { run_chart(fan_path, rays_arg, relation_degree); });
  pic->callback([&] { run_pic(fan_path); });
  cohomology->callback([&] { run_cohomology(coh, false); });
  localcoh->callback([&] { run_cohomology(coh, true); });
  sgcheck->callback([&] { run_sgcheck(coh, degrees_arg); });
  saturate_cmd->callback([&] { run_saturate(ideal_arg, by_arg, fan_path); });
  catalog->callback([&] { run_catalog(catalog_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    JsonWriter w;
    emit(Json{{"detail", e.what()}, {"error", "INVALID_INPUT"}}, w);
    return 2;
  } catch (const toric_error& e) {
    JsonWriter w;
    emit(Json{{"detail", e.detail()}, {"error", e.code_name()}}, w);
    return e.code() == errc::invalid_input ? 2 : 3;
  }
  return exit_code;
}
