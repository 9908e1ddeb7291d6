#include <algorithm>
#include <sstream>

#include "toric/error.hpp"
#include "toric/homology.hpp"

namespace toric {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int mod_reduce(const Int& x, const Int& p) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

std::size_t rank_mod_p(const IntMatrix& m, long prime) {
  Int p(prime);
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mod_reduce(m.at(i, j), p);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[rank], a[pivot]);
    Int inv;
    mpz_invert(inv.get_mpz_t(), a[rank][col].get_mpz_t(), p.get_mpz_t());
    for (std::size_t j = col; j < m.cols(); ++j) a[rank][j] = mod_reduce(a[rank][j] * inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Int factor = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j)
        a[i][j] = mod_reduce(a[i][j] - factor * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BaseRing BaseRing::prime_field(long p) {
  if (!is_prime(p)) throw toric_error(errc::invalid_input, "field characteristic must be prime");
  return {Kind::prime_field, p};
}

std::string descriptor_to_string(const ModuleDescriptor& d) {
  std::ostringstream os;
  os << "rank " << d.rank;
  if (!d.torsion.empty()) {
    os << " torsion [";
    for (std::size_t i = 0; i < d.torsion.size(); ++i) {
      if (i) os << ", ";
      os << d.torsion[i].get_str();
    }
    os << "]";
  }
  return os.str();
}

std::vector<Int> invariant_factors(std::vector<Int> orders) {
  orders.erase(std::remove_if(orders.begin(), orders.end(), [](const Int& d) { return d <= 1; }),
               orders.end());
  if (orders.size() <= 1) return orders;
  // Smith form of the diagonal matrix recombines the cyclic orders.
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag.at(i, i) = orders[i];
  SmithResult s = smith_normal_form(diag);
  std::vector<Int> out;
  for (const Int& d : s.invariants())
    if (d > 1) out.push_back(d);
  return out;
}

ModuleDescriptor descriptor_sum(const ModuleDescriptor& a, const ModuleDescriptor& b) {
  ModuleDescriptor out;
  out.rank = a.rank + b.rank;
  std::vector<Int> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  out.torsion = invariant_factors(std::move(orders));
  return out;
}

std::size_t rank_over_base(const IntMatrix& m, const BaseRing& base) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (base.kind == BaseRing::Kind::prime_field) return rank_mod_p(m, base.characteristic);
  return rank(m);  // rational and integer rank agree
}

std::vector<ModuleDescriptor> complex_cohomology(const std::vector<std::size_t>& dims,
                                                 const std::vector<IntMatrix>& diffs,
                                                 const BaseRing& base) {
  std::size_t levels = dims.size();
  if (diffs.size() + 1 != levels)
    throw toric_error(errc::invalid_input, "need one differential between consecutive terms");
  for (std::size_t p = 0; p + 1 < levels; ++p)
    if (diffs[p].rows() != dims[p + 1] || diffs[p].cols() != dims[p])
      throw toric_error(errc::invalid_input, "differential shape mismatch");
  for (std::size_t p = 0; p + 2 < levels; ++p)
    for (std::size_t j = 0; j < dims[p]; ++j) {
      Vec e(dims[p], Int(0));
      e[j] = 1;
      Vec square = diffs[p + 1].apply(diffs[p].apply(e));
      for (const Int& x : square)
        if (x != 0) throw toric_error(errc::invalid_input, "differentials do not compose to zero");
    }

  std::vector<ModuleDescriptor> out(levels);
  if (base.is_field()) {
    std::vector<std::size_t> ranks(levels, 0);  // ranks[p] = rank of d^p
    for (std::size_t p = 0; p + 1 < levels; ++p) ranks[p] = rank_over_base(diffs[p], base);
    for (std::size_t p = 0; p < levels; ++p) {
      std::size_t cut = (p + 1 < levels ? ranks[p] : 0) + (p > 0 ? ranks[p - 1] : 0);
      out[p].rank = static_cast<long>(dims[p] - cut);
    }
    return out;
  }

  for (std::size_t p = 0; p < levels; ++p) {
    IntMatrix ker = IntMatrix::identity(dims[p]);
    if (p + 1 < levels && dims[p + 1] > 0 && dims[p] > 0) ker = kernel_basis(diffs[p]);
    if (dims[p] == 0) {
      out[p] = ModuleDescriptor{};
      continue;
    }
    // express the incoming image in kernel coordinates; the kernel basis is
    // saturated, so the solutions are integral
    std::size_t in_cols = p > 0 ? dims[p - 1] : 0;
    IntMatrix rel(ker.cols(), in_cols);
    if (in_cols > 0 && ker.cols() > 0) {
      IntegralSolver solver(ker);
      for (std::size_t j = 0; j < in_cols; ++j) {
        Vec e(dims[p - 1], Int(0));
        e[j] = 1;
        std::optional<Vec> x = solver.solve(diffs[p - 1].apply(e));
        if (!x) throw toric_error(errc::invalid_input, "image does not land in the kernel");
        for (std::size_t i = 0; i < ker.cols(); ++i) rel.at(i, j) = (*x)[i];
      }
    }
    FinAbGroup h = cokernel(rel);
    out[p].rank = static_cast<long>(h.free_rank());
    out[p].torsion = h.torsion();
  }
  return out;
}

}  // namespace toric
