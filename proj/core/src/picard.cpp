#include "toric/picard.hpp"

#include <stdexcept>

namespace toric {

IntMatrix virtual_polytope_lattice(const Fan& f) {
  std::size_t n = f.ambient_rank();
  const std::vector<std::size_t>& maximal = f.maximal_cones();
  std::size_t vars = maximal.size() * n;

  std::vector<Vec> rows;
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      Polycone common = intersect(f.cone(maximal[i]), f.cone(maximal[j]));
      for (const Vec& x : common.ray_generators()) {
        Vec row(vars, Int(0));
        for (std::size_t k = 0; k < n; ++k) {
          row[i * n + k] = x[k];
          row[j * n + k] = -x[k];
        }
        rows.push_back(row);
      }
    }
  if (rows.empty()) return IntMatrix::identity(vars);
  return kernel_basis(IntMatrix::from_rows(rows, vars));
}

VirtualPolytope assignment_from_vector(const Fan& f, const Vec& v) {
  std::size_t n = f.ambient_rank();
  std::size_t m = f.maximal_cones().size();
  if (v.size() != m * n) throw toric_error(errc::invalid_input, "assignment vector has wrong length");
  VirtualPolytope vp;
  for (std::size_t i = 0; i < m; ++i)
    vp.assignment.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(i * n),
                               v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return vp;
}

PicardGroup picard_group(const Fan& f, const CoxGrading& g) {
  if (f.empty()) throw toric_error(errc::empty_fan, "the empty fan has no Picard group");

  IntMatrix basis = virtual_polytope_lattice(f);
  const std::vector<std::size_t>& maximal = f.maximal_cones();
  const std::vector<Vec>& rays = f.rays();

  PicardGroup p;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    VirtualPolytope vp = assignment_from_vector(f, basis.col(j));
    Vec w(rays.size(), Int(0));
    for (std::size_t ri = 0; ri < rays.size(); ++ri) {
      bool seen = false;
      for (std::size_t mi = 0; mi < maximal.size(); ++mi) {
        if (!f.cone(maximal[mi]).contains(rays[ri])) continue;
        Int val = dot(vp.assignment[mi], rays[ri]);
        if (!seen) {
          w[ri] = val;
          seen = true;
        } else if (w[ri] != val) {
          throw std::logic_error("ray evaluation differs between maximal cones");
        }
      }
      if (!seen) throw std::logic_error("ray not covered by a maximal cone");
    }
    GroupElement e = g.class_group.project(w);
    if (!g.class_group.is_zero(e)) p.as_subgroup_of_A.push_back(e);
  }
  p.abstract_type = cokernel(g.class_group.relation_lattice(p.as_subgroup_of_A));
  return p;
}

PicReport verify_pic_properties(const Fan& f, const PicardGroup& p) {
  CoxGrading g = cox_grading(f);
  SubgroupB b{p.as_subgroup_of_A};
  PicReport r;
  r.small = is_small(b, f, g);
  r.simplicial = is_simplicial(f);
  r.big = is_big(b, g);
  r.passed = r.small && (r.big || !r.simplicial);
  return r;
}

}  // namespace toric
