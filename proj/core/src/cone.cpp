#include "toric/cone.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace toric {

namespace {

void sort_dedupe(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// -----------------------------------------------------------------------
// Double description: maintain generators (rays + lineality) of
// { x : u(x) >= 0 for all processed u }, one inequality at a time.
//
// Lineality crossing: if some basis line l has u(l) != 0, orient it so
// u(l) > 0. Every other generator g is replaced by the combination
// u(l) g - u(g) l, which is tight on u; l itself joins the ray list. The
// adjusted rays stay in the old cone because both signs of l were
// available before the cut.
//
// Otherwise the classical positive/negative pairing step applies. We skip
// adjacency bookkeeping and instead prune non-extreme rays afterwards with
// the rank test: r is extreme iff its tight inequalities have rank exactly
// rank(all processed) - 1.

struct DDState {
  std::size_t n;
  std::vector<Vec> rays;
  std::vector<Vec> lin;
  std::vector<Vec> processed;
};

DDState dd_init(std::size_t n) {
  DDState st;
  st.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Int(0));
    e[i] = 1;
    st.lin.push_back(e);
  }
  return st;
}

void dd_prune(DDState& st) {
  for (Vec& r : st.rays) primitivize(r);
  sort_dedupe(st.rays);
  if (st.rays.empty()) return;

  IntMatrix all = IntMatrix::from_rows(st.processed, st.n);
  std::size_t ra = rank(all);
  std::vector<Vec> kept;
  for (const Vec& r : st.rays) {
    std::vector<Vec> tight;
    for (const Vec& u : st.processed)
      if (dot(u, r) == 0) tight.push_back(u);
    if (rank(IntMatrix::from_rows(tight, st.n)) + 1 == ra) kept.push_back(r);
  }
  st.rays = kept;
}

void dd_add(DDState& st, const Vec& u) {
  std::size_t cross = st.lin.size();
  for (std::size_t i = 0; i < st.lin.size(); ++i)
    if (dot(u, st.lin[i]) != 0) {
      cross = i;
      break;
    }

  if (cross < st.lin.size()) {
    Vec l = st.lin[cross];
    if (dot(u, l) < 0) l = vec_neg(l);
    Int a = dot(u, l);
    std::vector<Vec> nlin;
    for (std::size_t i = 0; i < st.lin.size(); ++i) {
      if (i == cross) continue;
      Vec nl = vec_sub(vec_scale(a, st.lin[i]), vec_scale(dot(u, st.lin[i]), l));
      primitivize(nl);
      nlin.push_back(nl);
    }
    std::vector<Vec> nrays;
    for (const Vec& r : st.rays) {
      Vec nr = vec_sub(vec_scale(a, r), vec_scale(dot(u, r), l));
      if (!vec_is_zero(nr)) nrays.push_back(nr);
    }
    nrays.push_back(l);
    st.lin = nlin;
    st.rays = nrays;
    st.processed.push_back(u);
    dd_prune(st);
    return;
  }

  std::vector<Vec> pos, zero, neg;
  for (const Vec& r : st.rays) {
    int s = sgn(dot(u, r));
    (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
  }
  st.processed.push_back(u);
  if (neg.empty()) {
    dd_prune(st);
    return;
  }
  std::vector<Vec> nrays = pos;
  nrays.insert(nrays.end(), zero.begin(), zero.end());
  for (const Vec& p : pos)
    for (const Vec& m : neg) {
      Vec w = vec_add(vec_scale(-dot(u, m), p), vec_scale(dot(u, p), m));
      if (!vec_is_zero(w)) nrays.push_back(w);
    }
  st.rays = nrays;
  dd_prune(st);
}

DDState dd_run(const std::vector<Vec>& ineqs, std::size_t n) {
  DDState st = dd_init(n);
  for (const Vec& u : ineqs)
    if (!vec_is_zero(u)) dd_add(st, u);
  return st;
}

// Hermite-canonical basis columns of the column lattice of b.
std::vector<Vec> hnf_basis_cols(const IntMatrix& b) {
  HermiteResult hr = hermite_normal_form(b);
  std::vector<Vec> out;
  for (std::size_t j = 0; j < hr.pivots.size(); ++j) out.push_back(hr.h.col(j));
  return out;
}

// Canonical representatives of ray directions modulo a saturated lattice.
std::vector<Vec> canonical_rays_mod(const std::vector<Vec>& rays, const IntMatrix& lattice,
                                    std::size_t n) {
  QuotientByLattice q(lattice, n);
  std::vector<Vec> out;
  for (const Vec& r : rays) {
    Vec p = q.project(r);
    if (vec_is_zero(p)) continue;  // direction inside the lattice span
    primitivize(p);
    out.push_back(q.lift(p));
  }
  sort_dedupe(out);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polycone construction

Polycone Polycone::zero_cone(std::size_t ambient_rank) {
  return from_generators({}, ambient_rank);
}

Polycone Polycone::from_generators(std::vector<Vec> gens, std::size_t ambient_rank) {
  for (const Vec& g : gens)
    if (g.size() != ambient_rank)
      throw toric_error(errc::invalid_input, "generator has wrong length");
  std::erase_if(gens, vec_is_zero);
  for (Vec& g : gens) primitivize(g);
  sort_dedupe(gens);

  Polycone c;
  c.ambient_ = ambient_rank;

  // dual side: the facet normals are the rays of { u : g(u) >= 0 } modulo
  // the span-perp lattice
  IntMatrix gen_rows = IntMatrix::from_rows(gens, ambient_rank);
  IntMatrix perp_lat = kernel_basis(gen_rows);
  DDState dual = dd_run(gens, ambient_rank);
  c.facets_ = canonical_rays_mod(dual.rays, perp_lat, ambient_rank);
  c.perp_ = hnf_basis_cols(perp_lat);

  // primal side: recover extreme rays and lineality from the inequalities
  std::vector<Vec> ineqs = c.facets_;
  for (const Vec& p : c.perp_) {
    ineqs.push_back(p);
    ineqs.push_back(vec_neg(p));
  }
  IntMatrix lin_lat = kernel_basis(IntMatrix::from_rows(ineqs, ambient_rank));
  DDState primal = dd_run(ineqs, ambient_rank);
  c.rays_ = canonical_rays_mod(primal.rays, lin_lat, ambient_rank);
  c.lineality_ = hnf_basis_cols(lin_lat);
  c.dim_ = ambient_rank - c.perp_.size();

#ifndef NDEBUG
  for (const Vec& g : gens) assert(c.contains(g));
  for (const Vec& r : c.rays_) assert(c.contains(r));
#endif
  return c;
}

Polycone Polycone::from_inequalities(const std::vector<Vec>& ineqs, std::size_t ambient_rank) {
  for (const Vec& u : ineqs)
    if (u.size() != ambient_rank)
      throw toric_error(errc::invalid_input, "inequality has wrong length");
  DDState st = dd_run(ineqs, ambient_rank);
  std::vector<Vec> gens = st.rays;
  IntMatrix lin_lat = kernel_basis(IntMatrix::from_rows(st.processed, ambient_rank));
  for (const Vec& l : hnf_basis_cols(lin_lat)) {
    gens.push_back(l);
    gens.push_back(vec_neg(l));
  }
  return from_generators(std::move(gens), ambient_rank);
}

std::vector<Vec> Polycone::generators() const {
  std::vector<Vec> gens = rays_;
  for (const Vec& l : lineality_) {
    gens.push_back(l);
    gens.push_back(vec_neg(l));
  }
  return gens;
}

bool Polycone::contains(const Vec& x) const {
  if (x.size() != ambient_)
    throw toric_error(errc::invalid_input, "point has wrong length");
  for (const Vec& u : facets_)
    if (dot(u, x) < 0) return false;
  for (const Vec& p : perp_)
    if (dot(p, x) != 0) return false;
  return true;
}

bool Polycone::operator<(const Polycone& rhs) const {
  auto key = [](const Polycone& c) {
    return std::tuple<std::size_t, std::size_t, const std::vector<Vec>&,
                      const std::vector<Vec>&>(c.ambient_, c.dim_, c.rays_, c.lineality_);
  };
  auto vless = [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
  };
  auto [aa, ad, ar, al] = key(*this);
  auto [ba, bd, br, bl] = key(rhs);
  if (aa != ba) return aa < ba;
  if (ad != bd) return ad < bd;
  if (ar != br) return vless(ar, br);
  return vless(al, bl);
}

// ---------------------------------------------------------------------------
// Duality, faces, intersection

Polycone dual_cone(const Polycone& c) {
  std::vector<Vec> gens = c.facet_normals();
  for (const Vec& p : c.span_perp_basis()) {
    gens.push_back(p);
    gens.push_back(vec_neg(p));
  }
  return Polycone::from_generators(std::move(gens), c.ambient_rank());
}

std::vector<Polycone> faces(const Polycone& c) {
  if (!c.is_sharp())
    throw toric_error(errc::not_sharp, "face enumeration requires a sharp cone");
  const auto& fs = c.facet_normals();
  if (fs.size() > 24)
    throw toric_error(errc::invalid_input, "too many facets for face enumeration");
  std::set<Polycone> seen;
  for (std::size_t mask = 0; mask < (std::size_t(1) << fs.size()); ++mask) {
    std::vector<Vec> tight;
    for (const Vec& r : c.ray_generators()) {
      bool ok = true;
      for (std::size_t i = 0; i < fs.size() && ok; ++i)
        if ((mask >> i) & 1) ok = dot(fs[i], r) == 0;
      if (ok) tight.push_back(r);
    }
    seen.insert(Polycone::from_generators(tight, c.ambient_rank()));
  }
  return {seen.begin(), seen.end()};
}

bool is_face_of(const Polycone& t, const Polycone& s) {
  if (t.ambient_rank() != s.ambient_rank())
    throw toric_error(errc::invalid_input, "ambient rank mismatch in face test");
  for (const Vec& g : t.generators())
    if (!s.contains(g)) return false;

  // minimal face of s containing t: cut by every facet of s tight on t
  std::vector<Vec> tight_normals;
  for (const Vec& u : s.facet_normals()) {
    bool tight = true;
    for (const Vec& g : t.generators())
      if (dot(u, g) != 0) {
        tight = false;
        break;
      }
    if (tight) tight_normals.push_back(u);
  }
  std::vector<Vec> gens;
  for (const Vec& r : s.ray_generators()) {
    bool ok = true;
    for (const Vec& u : tight_normals)
      if (dot(u, r) != 0) {
        ok = false;
        break;
      }
    if (ok) gens.push_back(r);
  }
  for (const Vec& l : s.lineality_basis()) {
    gens.push_back(l);
    gens.push_back(vec_neg(l));
  }
  return Polycone::from_generators(std::move(gens), s.ambient_rank()) == t;
}

Polycone intersect(const Polycone& a, const Polycone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw toric_error(errc::invalid_input, "ambient rank mismatch in intersection");
  std::vector<Vec> ineqs = a.facet_normals();
  for (const Vec& u : b.facet_normals()) ineqs.push_back(u);
  for (const Polycone* c : {&a, &b})
    for (const Vec& p : c->span_perp_basis()) {
      ineqs.push_back(p);
      ineqs.push_back(vec_neg(p));
    }
  return Polycone::from_inequalities(ineqs, a.ambient_rank());
}

// ---------------------------------------------------------------------------
// Hilbert basis
//
// Gordan construction: stellar triangulation into simplicial subcones, then
// the lattice points of each fundamental parallelepiped (coset
// representatives computed through the Smith form), then a global
// irreducibility pass.

namespace {

std::vector<std::vector<Vec>> triangulate(const Polycone& c) {
  const auto& gens = c.ray_generators();
  if (c.dim() <= 1 || gens.size() == c.dim()) return {gens};
  const Vec& apex = gens.front();
  std::vector<std::vector<Vec>> out;
  for (const Vec& u : c.facet_normals()) {
    if (dot(u, apex) <= 0) continue;  // apex lies on this facet or never (sharp: > 0 or == 0)
    std::vector<Vec> tight;
    for (const Vec& g : gens)
      if (dot(u, g) == 0) tight.push_back(g);
    Polycone facet = Polycone::from_generators(tight, c.ambient_rank());
    for (auto& simplex : triangulate(facet)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

// floor of num/den componentwise for the rational solution of C t = y
Vec rational_floor_solve(const IntMatrix& cmat, const Vec& y) {
  Int det = determinant(cmat);
  assert(det != 0);
  std::size_t d = cmat.rows();
  Vec f(d);
  for (std::size_t i = 0; i < d; ++i) {
    IntMatrix m = cmat;
    for (std::size_t r = 0; r < d; ++r) m.at(r, i) = y[r];
    Int num = determinant(m);
    // t_i = num/det; floor with sign handled by fdiv
    if (det > 0)
      mpz_fdiv_q(f[i].get_mpz_t(), num.get_mpz_t(), det.get_mpz_t());
    else {
      Int nn = -num, nd = -det;
      mpz_fdiv_q(f[i].get_mpz_t(), nn.get_mpz_t(), nd.get_mpz_t());
    }
  }
  return f;
}

void parallelepiped_points(const std::vector<Vec>& simplex, std::size_t n,
                           std::vector<Vec>& out) {
  std::size_t d = simplex.size();
  IntMatrix r = IntMatrix::from_cols(simplex, n);
  SmithResult s1 = smith_normal_form(r);
  assert(s1.invariants().size() == d);
  IntMatrix uinv = inverse_unimodular(s1.u);

  // lattice basis of span(simplex) cap Z^n and simplex coordinates in it
  IntMatrix basis(n, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, j) = uinv.at(i, j);
  IntMatrix coords(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec ur = s1.u.apply(simplex[j]);
    for (std::size_t i = d; i < n; ++i) assert(ur[i] == 0);
    for (std::size_t i = 0; i < d; ++i) coords.at(i, j) = ur[i];
  }

  SmithResult s2 = smith_normal_form(coords);
  IntMatrix winv = inverse_unimodular(s2.u);
  std::vector<Int> diag(d);
  for (std::size_t i = 0; i < d; ++i) diag[i] = s2.d.at(i, i);

  // odometer over the coset representatives
  Vec k(d, Int(0));
  for (;;) {
    Vec y = winv.apply(k);
    Vec f = rational_floor_solve(coords, y);
    Vec yr = vec_sub(y, coords.apply(f));
    Vec pt = basis.apply(yr);
    if (!vec_is_zero(pt)) out.push_back(pt);

    std::size_t i = 0;
    while (i < d) {
      k[i] += 1;
      if (k[i] < diag[i]) break;
      k[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
}

}  // namespace

std::vector<Vec> hilbert_basis(const Polycone& c) {
  if (!c.is_sharp())
    throw toric_error(errc::not_sharp, "hilbert basis requires a sharp cone");
  if (c.is_zero_cone()) return {};

  std::vector<Vec> cands = c.ray_generators();
  for (const auto& simplex : triangulate(c))
    parallelepiped_points(simplex, c.ambient_rank(), cands);
  sort_dedupe(cands);

  std::vector<Vec> basis;
  for (const Vec& g : cands) {
    bool reducible = false;
    for (const Vec& h : cands) {
      if (h == g) continue;
      if (c.contains(vec_sub(g, h))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(g);
  }
  return basis;
}

MonoidSplit monoid_presentation_split(const Polycone& c) {
  if (c.is_sharp()) return {hilbert_basis(c), {}};

  std::size_t n = c.ambient_rank();
  IntMatrix lin = IntMatrix::from_cols(c.lineality_basis(), n);
  QuotientByLattice q(lin, n);

  std::vector<Vec> qgens;
  for (const Vec& r : c.ray_generators()) qgens.push_back(q.project(r));
  Polycone qc = Polycone::from_generators(qgens, q.quotient_rank());
  assert(qc.is_sharp());

  MonoidSplit split;
  for (const Vec& h : hilbert_basis(qc)) split.sharp_generators.push_back(q.lift(h));
  std::sort(split.sharp_generators.begin(), split.sharp_generators.end(), lex_less);
  split.unit_basis = c.lineality_basis();
  return split;
}

}  // namespace toric
