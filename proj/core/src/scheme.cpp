#include "toric/scheme.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

namespace toric {

TriState tri_and(TriState a, TriState b) {
  if (a == TriState::no || b == TriState::no) return TriState::no;
  if (a == TriState::yes && b == TriState::yes) return TriState::yes;
  return TriState::unknown;
}

TriState tri_or(TriState a, TriState b) {
  if (a == TriState::yes || b == TriState::yes) return TriState::yes;
  if (a == TriState::no && b == TriState::no) return TriState::no;
  return TriState::unknown;
}

const char* tri_name(TriState t) {
  switch (t) {
    case TriState::no: return "false";
    case TriState::yes: return "true";
    case TriState::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// refine `flag` to `value`; yes/no conflicts are contradictions
void force(TriState& flag, TriState value, const char* what) {
  if (value == TriState::unknown) return;
  if (flag == TriState::unknown) {
    flag = value;
    return;
  }
  if (flag != value)
    throw toric_error(errc::invalid_input, std::string("contradictory ring flags: ") + what);
}

void force_count(std::optional<long>& field, long value, const char* what) {
  if (!field) {
    field = value;
    return;
  }
  if (*field != value)
    throw toric_error(errc::invalid_input, std::string("contradictory ring data: ") + what);
}

}  // namespace

RingDescriptor RingDescriptor::normalized() const {
  RingDescriptor r = *this;

  if (r.dim && *r.dim < 0)
    throw toric_error(errc::invalid_input, "ring dim must be nonnegative");
  if (r.minimal_prime_count && *r.minimal_prime_count < 0)
    throw toric_error(errc::invalid_input, "minimal_prime_count must be nonnegative");
  if (r.dim) force(r.is_zero, TriState::no, "a ring with numeric dim is nonzero");

  if (r.is_zero == TriState::yes) {
    if (r.dim)
      throw toric_error(errc::invalid_input, "the zero ring has no numeric dimension");
    force(r.reduced, TriState::yes, "zero ring is reduced");
    force(r.normal, TriState::yes, "zero ring is normal");
    force(r.noetherian, TriState::yes, "zero ring is noetherian");
    force(r.artinian, TriState::yes, "zero ring is artinian");
    force(r.equidimensional, TriState::yes, "zero ring is equidimensional");
    force(r.connected, TriState::no, "zero ring has empty, disconnected spectrum");
    force(r.irreducible, TriState::no, "zero ring is not irreducible");
    force(r.integral, TriState::no, "zero ring is not integral");
    force_count(r.minimal_prime_count, 0, "zero ring has no primes");
  }

  if (r.integral == TriState::yes) {
    force(r.irreducible, TriState::yes, "integral implies irreducible");
    force(r.reduced, TriState::yes, "integral implies reduced");
    force(r.is_zero, TriState::no, "integral rings are nonzero");
  }
  if (r.irreducible == TriState::no || r.reduced == TriState::no)
    force(r.integral, TriState::no, "not integral without irreducible and reduced");
  if (r.irreducible == TriState::yes) force_count(r.minimal_prime_count, 1, "irreducible ring has one minimal prime");

  if (r.artinian == TriState::yes) force(r.noetherian, TriState::yes, "artinian implies noetherian");
  if (r.noetherian == TriState::no) force(r.artinian, TriState::no, "artinian implies noetherian");

  return r;
}

SchemeReport scheme_property_report(const Fan& f, const RingDescriptor& input) {
  RingDescriptor r = input.normalized();
  bool empty = f.empty();
  long n = (long)f.ambient_rank();
  TriState e = tri_of(empty);
  TriState nonempty = tri_of(!empty);
  TriState zero = r.is_zero;

  SchemeReport rep;
  rep.separated = rep.quasicompact = rep.flat = rep.finite_presentation = TriState::yes;
  rep.faithfully_flat = tri_or(nonempty, zero);
  rep.proper = tri_or(tri_of(empty || is_complete(f)), zero);

  rep.reduced = tri_or(r.reduced, e);
  rep.connected = tri_or(r.connected, e);
  rep.normal = tri_or(r.normal, e);
  rep.irreducible = tri_and(r.irreducible, nonempty);
  rep.integral = tri_and(r.integral, nonempty);
  rep.noetherian = tri_or(r.noetherian, e);
  rep.artinian = tri_or(tri_or(tri_and(r.artinian, tri_of(n == 0)), zero), e);
  // the equidimensionality criterion is only stated for noetherian rings
  rep.equidimensional =
      r.noetherian == TriState::yes ? tri_or(r.equidimensional, e) : TriState::unknown;

  // dimension interval; the empty scheme (empty fan or zero ring) has none
  TriState x_empty = tri_or(e, zero);
  if (x_empty == TriState::no && r.dim) {
    long d = *r.dim;
    rep.dim_lower = d + n;
    rep.dim_upper = (r.noetherian == TriState::yes) ? d + n : (n + 1) * d + n;
  }

  if (empty)
    rep.irreducible_component_count = 0;
  else if (r.minimal_prime_count)
    rep.irreducible_component_count = r.minimal_prime_count;

  return rep;
}

// ---------------------------------------------------------------------------
// Chart presentations

namespace {

// split a lattice vector into (positive part, negative part)
std::pair<Vec, Vec> split_signs(const Vec& w) {
  Vec plus(w.size(), Int(0)), minus(w.size(), Int(0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) plus[i] = w[i];
    if (w[i] < 0) minus[i] = -w[i];
  }
  return {plus, minus};
}

// canonical orientation: lex-larger side first
std::pair<Vec, Vec> orient(Vec a, Vec b) {
  if (lex_less(a, b)) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

bool dominates(const Vec& e, const Vec& p) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < p[i]) return false;
  return true;
}

void enumerate_exponents(std::size_t pos, long remaining, Vec& e,
                         const std::function<void(const Vec&)>& emit) {
  if (pos + 1 == e.size()) {
    for (long v = 0; v <= remaining; ++v) {
      e[pos] = v;
      emit(e);
    }
    e[pos] = 0;
    return;
  }
  for (long v = 0; v <= remaining; ++v) {
    e[pos] = v;
    enumerate_exponents(pos + 1, remaining - v, e, emit);
  }
  e[pos] = 0;
}

// relation move: e >= a ? e - a + b : nothing
std::optional<Vec> apply_move(const Vec& e, const Vec& a, const Vec& b) {
  if (!dominates(e, a)) return std::nullopt;
  return vec_add(vec_sub(e, a), b);
}

// Enumerate exponent vectors of total degree <= bound, bucketed by their
// evaluation in M; within each bucket, connect exponents by relation moves
// and add a bridging relation whenever the bucket stays disconnected. This
// makes the relation set generate the evaluation congruence on the window.
void complete_relations(const std::vector<Vec>& basis, std::size_t ambient, long bound,
                        std::vector<std::pair<Vec, Vec>>& rels) {
  std::size_t g = basis.size();
  // guard against runaway enumeration: about C(bound+g, g) exponent vectors
  double est = 1;
  for (long i = 1; i <= (long)g; ++i) est *= double(bound + i) / double(i);
  if (est > 5e6)
    throw toric_error(errc::invalid_input,
                      "relation completion window too large; lower the degree bound");

  IntMatrix eval = IntMatrix::from_cols(basis, ambient);
  std::map<Vec, std::vector<Vec>, bool (*)(const Vec&, const Vec&)> buckets(lex_less);
  Vec e(g, Int(0));
  if (g == 0) return;
  enumerate_exponents(0, bound, e, [&](const Vec& expo) { buckets[eval.apply(expo)].push_back(expo); });

  for (auto& [value, elems] : buckets) {
    if (elems.size() < 2) continue;
    std::sort(elems.begin(), elems.end(), lex_less);
    std::map<Vec, std::size_t, bool (*)(const Vec&, const Vec&)> index(lex_less);
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;

    UnionFind uf(elems.size());
    auto sweep = [&] {
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& [a, b] : rels)
          for (int dir = 0; dir < 2; ++dir) {
            auto moved = dir == 0 ? apply_move(elems[i], a, b) : apply_move(elems[i], b, a);
            if (!moved) continue;
            auto it = index.find(*moved);
            if (it != index.end()) uf.unite(i, it->second);
          }
    };
    sweep();
    for (;;) {
      // lexicographically smallest member of each component
      std::map<std::size_t, std::size_t> rep;  // root -> smallest index
      for (std::size_t i = 0; i < elems.size(); ++i) {
        std::size_t r = uf.find(i);
        if (!rep.count(r)) rep[r] = i;  // elems sorted, first hit is lex-min
      }
      if (rep.size() <= 1) break;
      std::vector<std::size_t> reps;
      for (const auto& [root, idx] : rep) reps.push_back(idx);
      std::sort(reps.begin(), reps.end());
      std::size_t i0 = reps[0];
      std::size_t i1 = reps[1];
      // bridge the two components; strip the common monomial factor
      Vec a = elems[i0], b = elems[i1];
      for (std::size_t k = 0; k < g; ++k) {
        Int m = std::min(a[k], b[k]);
        a[k] -= m;
        b[k] -= m;
      }
      rels.push_back(orient(std::move(a), std::move(b)));
      uf.unite(i0, i1);
      sweep();
    }
  }
}

}  // namespace

ChartPresentation chart_presentation(const Fan& f, std::size_t cone_index,
                                     long completion_degree) {
  const Polycone& sigma = f.cone(cone_index);
  MonoidSplit split = monoid_presentation_split(dual_cone(sigma));

  ChartPresentation chart;
  chart.monoid_basis = split.sharp_generators;
  chart.unit_basis = split.unit_basis;

  std::size_t g = chart.monoid_basis.size();
  if (g == 0) return chart;
  IntMatrix eval = IntMatrix::from_cols(chart.monoid_basis, f.ambient_rank());
  IntMatrix ker = kernel_basis(eval);
  if (ker.cols() == 0) return chart;  // free monoid, no relations

  std::vector<std::pair<Vec, Vec>> rels;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    auto [plus, minus] = split_signs(ker.col(j));
    rels.push_back(orient(std::move(plus), std::move(minus)));
  }
  complete_relations(chart.monoid_basis, f.ambient_rank(), completion_degree, rels);

  std::sort(rels.begin(), rels.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return lex_less(a.first, b.first);
    return lex_less(a.second, b.second);
  });
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  chart.relations = std::move(rels);
  return chart;
}

Vec gluing_exponent(const Fan& f, std::size_t face_index, std::size_t cone_index) {
  const Polycone& tau = f.cone(face_index);
  const Polycone& sigma = f.cone(cone_index);
  if (!f.face_table()[face_index][cone_index])
    throw toric_error(errc::not_a_face, "first cone is not a face of the second");
  (void)sigma;

  ChartPresentation chart = chart_presentation(f, cone_index);
  Vec expo(chart.monoid_basis.size(), Int(0));
  for (std::size_t j = 0; j < chart.monoid_basis.size(); ++j) {
    bool vanishes = true;
    for (const Vec& g : tau.ray_generators())
      if (dot(chart.monoid_basis[j], g) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) expo[j] = 1;
  }
  return expo;
}

}  // namespace toric
