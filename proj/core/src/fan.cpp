#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

Fan Fan::empty_fan(std::size_t ambient_rank) {
  Fan f;
  f.ambient_ = ambient_rank;
  return f;
}

const Polycone& Fan::cone(std::size_t i) const {
  if (i >= cones_.size()) throw toric_error(errc::invalid_input, "cone index out of range");
  return cones_[i];
}

std::size_t Fan::find_cone(const Polycone& c) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i] == c) return i;
  return cones_.size();
}

Fan Fan::from_maximal_cones(std::size_t ambient_rank, const std::vector<Vec>& rays,
                            const std::vector<std::vector<std::size_t>>& maximal_cones) {
  for (const Vec& r : rays) {
    if (r.size() != ambient_rank)
      throw toric_error(errc::invalid_input, "ray has wrong length");
    if (vec_is_zero(r)) throw toric_error(errc::invalid_input, "zero ray vector");
  }

  Fan f;
  f.ambient_ = ambient_rank;

  std::set<Polycone> closure;
  for (const auto& idxs : maximal_cones) {
    std::vector<Vec> gens;
    for (std::size_t i : idxs) {
      if (i >= rays.size()) throw toric_error(errc::invalid_input, "ray index out of range");
      gens.push_back(rays[i]);
    }
    Polycone c = Polycone::from_generators(gens, ambient_rank);
    if (!c.is_sharp()) {
      std::ostringstream os;
      os << "cone " << (&idxs - maximal_cones.data()) << " is not sharp";
      throw toric_error(errc::not_sharp, os.str());
    }
    for (const Polycone& face : faces(c)) closure.insert(face);
  }
  // an empty list of maximal cones still yields the fan {0}? No: no cones
  // at all; the empty fan is a legitimate input downstream.
  f.cones_.assign(closure.begin(), closure.end());

  // pairwise common-face condition
  for (std::size_t i = 0; i < f.cones_.size(); ++i)
    for (std::size_t j = i + 1; j < f.cones_.size(); ++j) {
      Polycone meet = intersect(f.cones_[i], f.cones_[j]);
      if (!is_face_of(meet, f.cones_[i]) || !is_face_of(meet, f.cones_[j])) {
        std::ostringstream os;
        os << "cones with rays ";
        for (const Vec& r : f.cones_[i].ray_generators()) os << vec_to_string(r);
        os << " and ";
        for (const Vec& r : f.cones_[j].ray_generators()) os << vec_to_string(r);
        os << " do not meet in a common face";
        throw toric_error(errc::invalid_fan, os.str());
      }
    }

  // rays of the fan = generators of the one-dimensional cones
  for (const Polycone& c : f.cones_)
    if (c.dim() == 1) f.rays_.push_back(c.ray_generators().front());
  std::sort(f.rays_.begin(), f.rays_.end(), lex_less);

  f.face_table_.assign(f.cones_.size(), std::vector<bool>(f.cones_.size(), false));
  for (std::size_t t = 0; t < f.cones_.size(); ++t)
    for (std::size_t s = 0; s < f.cones_.size(); ++s)
      f.face_table_[t][s] = is_face_of(f.cones_[t], f.cones_[s]);

  for (std::size_t i = 0; i < f.cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.cones_.size() && maximal; ++j)
      if (j != i && f.face_table_[i][j]) maximal = false;
    if (maximal) f.maximal_.push_back(i);
  }

  f.cone_ray_sets_.resize(f.cones_.size());
  for (std::size_t i = 0; i < f.cones_.size(); ++i)
    for (const Vec& g : f.cones_[i].ray_generators()) {
      auto it = std::lower_bound(f.rays_.begin(), f.rays_.end(), g, lex_less);
      if (it == f.rays_.end() || *it != g)
        throw toric_error(errc::invalid_fan, "extreme ray of a cone is not a ray of the fan");
      f.cone_ray_sets_[i].push_back(std::size_t(it - f.rays_.begin()));
    }
  return f;
}

bool is_complete(const Fan& f) {
  if (f.empty()) return false;
  std::size_t n = f.ambient_rank();
  if (n == 0) return true;  // the fan {0} covers the zero space

  for (std::size_t m : f.maximal_cones())
    if (f.cones()[m].dim() != n) return false;

  // every ridge (face of dimension n-1) must lie in exactly two maximal cones
  std::map<std::size_t, int> ridge_count;
  for (std::size_t i = 0; i < f.cone_count(); ++i) {
    if (f.cones()[i].dim() != n - 1) continue;
    int cnt = 0;
    for (std::size_t m : f.maximal_cones())
      if (f.face_table()[i][m]) ++cnt;
    ridge_count[i] = cnt;
  }
  for (auto [idx, cnt] : ridge_count)
    if (cnt != 2) return false;

  // connectivity of the dual graph through ridges; a disconnected cover of
  // the space cannot happen for a valid fan, but the check is cheap
  const auto& maxc = f.maximal_cones();
  if (maxc.empty()) return false;
  std::vector<bool> seen(maxc.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < maxc.size(); ++b) {
      if (seen[b]) continue;
      Polycone meet = intersect(f.cones()[maxc[a]], f.cones()[maxc[b]]);
      if (meet.dim() == n - 1) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_full(const Fan& f) {
  IntMatrix m = IntMatrix::from_rows(f.rays(), f.ambient_rank());
  return rank(m) == f.ambient_rank();
}

bool is_simplicial(const Fan& f) {
  for (const Polycone& c : f.cones())
    if (c.ray_generators().size() != c.dim()) return false;
  return true;
}

}  // namespace toric
