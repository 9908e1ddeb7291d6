#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace toric {

// ---------------------------------------------------------------------------
// Vector helpers

Int dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vec_scale(const Int& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Int vec_inf_norm(const Vec& a) {
  Int m = 0;
  for (const Int& x : a) {
    Int ax = abs(x);
    if (ax > m) m = ax;
  }
  return m;
}

void primitivize(Vec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  if (g <= 1) return;
  for (Int& x : a) x /= g;
}

std::string vec_to_string(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

Vec vec_of(std::initializer_list<long> entries) {
  Vec r;
  r.reserve(entries.size());
  for (long e : entries) r.emplace_back(e);
  return r;
}

Int rounded_quotient(const Int& a, const Int& b) {
  assert(b != 0);
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) {
    Int r2 = 2 * abs(r);
    if (r2 > abs(b)) q += (sgn(a) == sgn(b)) ? 1 : -1;
  }
  return q;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == rows);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    assert(row.size() == c);
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec IntMatrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Vec> IntMatrix::rows_as_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vec> IntMatrix::cols_as_vectors() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

Vec IntMatrix::apply(const Vec& x) const {
  assert(x.size() == cols_);
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
  assert(dst != src);
  if (q == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += q * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
  assert(dst != src);
  if (q == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += q * at(k, src);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form
//
// Minimal-pivot elimination: repeatedly move the smallest nonzero entry of
// the working submatrix to the diagonal, clear its row and column, then
// enforce divisibility against the rest of the submatrix. Entry growth is
// tame at the sizes we deal with; no modular tricks needed.

std::vector<Int> SmithResult::invariants() const {
  std::vector<Int> out;
  std::size_t lim = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < lim; ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

std::vector<Int> SmithResult::torsion_invariants() const {
  std::vector<Int> out;
  for (const Int& x : invariants())
    if (x >= 2) out.push_back(x);
  return out;
}

namespace {

// Smallest nonzero |entry| of d in the submatrix with corner (t, t);
// returns false if that submatrix is zero.
bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  std::size_t limit = std::min(m.rows(), m.cols());
  bool exhausted = false;
  for (std::size_t t = 0; t < limit && !exhausted; ++t) {
    for (;;) {
      // Re-pick the globally smallest entry before every sweep. Promoting
      // remainders mid-pass instead compounds the row tails multiplicatively
      // and blows up entry sizes on dense inputs.
      std::size_t pi, pj;
      if (!find_min_pivot(d, t, pi, pj)) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clear = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = rounded_quotient(d.at(i, t), d.at(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = rounded_quotient(d.at(t, j), d.at(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) clear = false;
      }
      // leftover remainders are at most half the old minimum
      if (!clear) continue;

      // row and column of the pivot are clear; check divisibility
      bool fixed = true;
      for (std::size_t i = t + 1; i < d.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols() && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
  }

  for (std::size_t t = 0; t < limit; ++t)
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }

#ifndef NDEBUG
  assert(u * m * v == d);
  for (std::size_t t = 0; t + 1 < limit; ++t)
    assert(d.at(t, t) == 0 ? d.at(t + 1, t + 1) == 0 : d.at(t + 1, t + 1) % d.at(t, t) == 0);
#endif
  return res;
}

// ---------------------------------------------------------------------------
// Hermite normal form (column style)

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.cols()), {}};
  IntMatrix& h = res.h;
  IntMatrix& v = res.v;

  std::size_t pc = 0;
  for (std::size_t row = 0; row < m.rows() && pc < m.cols(); ++row) {
    for (;;) {
      // smallest nonzero |entry| in this row among the unpivoted columns
      std::size_t best = m.cols();
      for (std::size_t j = pc; j < m.cols(); ++j) {
        if (h.at(row, j) == 0) continue;
        if (best == m.cols() || abs(h.at(row, j)) < abs(h.at(row, best))) best = j;
      }
      if (best == m.cols()) break;  // row has no pivot
      h.swap_cols(pc, best);
      v.swap_cols(pc, best);

      bool clear = true;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (h.at(row, j) == 0) continue;
        Int q = rounded_quotient(h.at(row, j), h.at(row, pc));
        h.add_col_multiple(j, pc, -q);
        v.add_col_multiple(j, pc, -q);
        if (h.at(row, j) != 0) clear = false;
      }
      if (!clear) continue;

      if (h.at(row, pc) < 0) {
        h.negate_col(pc);
        v.negate_col(pc);
      }
      // reduce the entries to the left into [0, pivot)
      for (std::size_t j = 0; j < pc; ++j) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(), h.at(row, pc).get_mpz_t());
        h.add_col_multiple(j, pc, -q);
        v.add_col_multiple(j, pc, -q);
      }
      res.pivots.emplace_back(row, pc);
      ++pc;
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Kernel, rank, determinant, inverse

IntMatrix kernel_basis(const IntMatrix& m) {
  // Columns of v beyond the nonzero part of the Smith form span the kernel;
  // saturation is automatic since v is unimodular.
  SmithResult s = smith_normal_form(m);
  std::size_t nz = s.invariants().size();
  IntMatrix k(m.cols(), m.cols() - nz);
  for (std::size_t j = nz; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k.at(i, j - nz) = s.v.at(i, j);
  return k;
}

namespace {

// Bareiss fraction-free elimination; returns echelon pivot count and, for
// square inputs, leaves the determinant in `det`.
std::size_t bareiss(IntMatrix a, Int* det) {
  std::size_t rows = a.rows(), cols = a.cols();
  Int prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r) {
      a.swap_rows(piv, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    ++r;
  }
  if (det) {
    if (rows != cols || r < rows)
      *det = 0;
    else
      *det = sign > 0 ? prev : -prev;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return bareiss(m, nullptr); }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw toric_error(errc::invalid_input, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Int det;
  bareiss(m, &det);
  return det;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw toric_error(errc::invalid_input, "inverse of non-square matrix");
  Int det = determinant(m);
  if (det != 1 && det != -1)
    throw toric_error(errc::invalid_input, "matrix is not unimodular, det = " + det.get_str());
  // m * v = h upper-left triangular with det +-1 forces h = I, so v = m^{-1}.
  HermiteResult hr = hermite_normal_form(m);
  if (!hr.h.is_identity())
    throw toric_error(errc::invalid_input, "unimodular inverse failed");
  return hr.v;
}

// ---------------------------------------------------------------------------
// Integral solving

IntegralSolver::IntegralSolver(const IntMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), hnf_(hermite_normal_form(m)) {}

std::optional<Vec> IntegralSolver::solve(const Vec& rhs) const {
  assert(rhs.size() == rows_);
  Vec residual = rhs;
  Vec z(cols_, Int(0));
  for (auto [prow, pcol] : hnf_.pivots) {
    const Int& piv = hnf_.h.at(prow, pcol);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), residual[prow].get_mpz_t(), piv.get_mpz_t());
    if (r != 0) return std::nullopt;
    z[pcol] = q;
    if (q != 0)
      for (std::size_t i = 0; i < rows_; ++i) residual[i] -= q * hnf_.h.at(i, pcol);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return hnf_.v.apply(z);
}

std::optional<Vec> solve(const IntMatrix& m, const Vec& rhs) {
  return IntegralSolver(m).solve(rhs);
}

// ---------------------------------------------------------------------------
// FinAbGroup

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "[free " << vec_to_string(free_part) << " torsion " << vec_to_string(torsion_part) << "]";
  return os.str();
}

bool group_element_less(const GroupElement& a, const GroupElement& b) {
  if (a.free_part != b.free_part) return lex_less(a.free_part, b.free_part);
  return lex_less(a.torsion_part, b.torsion_part);
}

FinAbGroup FinAbGroup::free_group(std::size_t rank) {
  FinAbGroup g;
  g.ambient_rank_ = rank;
  g.free_rank_ = rank;
  g.proj_ = IntMatrix::identity(rank);
  return g;
}

FinAbGroup cokernel(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  std::size_t amb = m.rows();
  std::size_t lim = std::min(m.rows(), m.cols());

  // Row i of u maps onto the cyclic factor Z/d_i (d_i = 0 means a free
  // factor, d_i = 1 a dead one). Reorder rows as [free..., torsion...].
  std::vector<std::size_t> free_rows, torsion_rows;
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < amb; ++i) {
    Int di = (i < lim) ? s.d.at(i, i) : Int(0);
    if (di == 0)
      free_rows.push_back(i);
    else if (di >= 2) {
      torsion_rows.push_back(i);
      torsion.push_back(di);
    }
  }

  FinAbGroup g;
  g.ambient_rank_ = amb;
  g.free_rank_ = free_rows.size();
  g.torsion_ = torsion;
  g.proj_ = IntMatrix(free_rows.size() + torsion_rows.size(), amb);
  std::size_t r = 0;
  for (std::size_t i : free_rows) {
    for (std::size_t j = 0; j < amb; ++j) g.proj_.at(r, j) = s.u.at(i, j);
    ++r;
  }
  for (std::size_t i : torsion_rows) {
    for (std::size_t j = 0; j < amb; ++j) g.proj_.at(r, j) = s.u.at(i, j);
    ++r;
  }
  return g;
}

void FinAbGroup::check_element(const GroupElement& e) const {
  if (e.free_part.size() != free_rank_ || e.torsion_part.size() != torsion_.size())
    throw toric_error(errc::invalid_input, "group element shape mismatch");
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    if (e.torsion_part[i] < 0 || e.torsion_part[i] >= torsion_[i])
      throw toric_error(errc::invalid_input, "torsion residue out of range");
}

bool FinAbGroup::same_invariants(const FinAbGroup& other) const {
  return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
}

GroupElement FinAbGroup::project(const Vec& ambient) const {
  if (ambient.size() != ambient_rank_)
    throw toric_error(errc::invalid_input, "ambient vector has wrong length");
  Vec y = proj_.apply(ambient);
  GroupElement e;
  e.free_part.assign(y.begin(), y.begin() + free_rank_);
  e.torsion_part.resize(torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    mpz_fdiv_r(e.torsion_part[i].get_mpz_t(), y[free_rank_ + i].get_mpz_t(),
               torsion_[i].get_mpz_t());
  }
  return e;
}

GroupElement FinAbGroup::zero() const {
  return GroupElement{Vec(free_rank_, Int(0)), Vec(torsion_.size(), Int(0))};
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  GroupElement r;
  r.free_part = vec_add(a.free_part, b.free_part);
  r.torsion_part.resize(torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Int s = a.torsion_part[i] + b.torsion_part[i];
    mpz_fdiv_r(r.torsion_part[i].get_mpz_t(), s.get_mpz_t(), torsion_[i].get_mpz_t());
  }
  return r;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
  check_element(a);
  GroupElement r;
  r.free_part = vec_neg(a.free_part);
  r.torsion_part.resize(torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Int s = -a.torsion_part[i];
    mpz_fdiv_r(r.torsion_part[i].get_mpz_t(), s.get_mpz_t(), torsion_[i].get_mpz_t());
  }
  return r;
}

GroupElement FinAbGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement FinAbGroup::scale(const Int& s, const GroupElement& a) const {
  check_element(a);
  GroupElement r;
  r.free_part = vec_scale(s, a.free_part);
  r.torsion_part.resize(torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Int t = s * a.torsion_part[i];
    mpz_fdiv_r(r.torsion_part[i].get_mpz_t(), t.get_mpz_t(), torsion_[i].get_mpz_t());
  }
  return r;
}

bool FinAbGroup::is_zero(const GroupElement& a) const {
  check_element(a);
  return vec_is_zero(a.free_part) && vec_is_zero(a.torsion_part);
}

std::vector<GroupElement> FinAbGroup::canonical_generators() const {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < free_rank_; ++i) {
    GroupElement e = zero();
    e.free_part[i] = 1;
    gens.push_back(e);
  }
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    GroupElement e = zero();
    e.torsion_part[i] = 1;
    gens.push_back(e);
  }
  return gens;
}

Vec FinAbGroup::element_lift(const GroupElement& e) const {
  check_element(e);
  Vec lift = e.free_part;
  lift.insert(lift.end(), e.torsion_part.begin(), e.torsion_part.end());
  return lift;
}

GroupElement FinAbGroup::element_from_lift(const Vec& lift) const {
  assert(lift.size() == free_rank_ + torsion_.size());
  GroupElement e;
  e.free_part.assign(lift.begin(), lift.begin() + free_rank_);
  e.torsion_part.resize(torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    mpz_fdiv_r(e.torsion_part[i].get_mpz_t(), lift[free_rank_ + i].get_mpz_t(),
               torsion_[i].get_mpz_t());
  return e;
}

namespace {

// [proj | 0 over diag(torsion)]: stacked map Z^(amb+t) -> Z^(fr+t) whose
// solutions modulo nothing encode proj(x) = target up to torsion.
IntMatrix stacked_presentation(const IntMatrix& proj, std::size_t free_rank,
                               const std::vector<Int>& torsion) {
  std::size_t t = torsion.size();
  IntMatrix s(proj.rows(), proj.cols() + t);
  for (std::size_t i = 0; i < proj.rows(); ++i)
    for (std::size_t j = 0; j < proj.cols(); ++j) s.at(i, j) = proj.at(i, j);
  for (std::size_t i = 0; i < t; ++i) s.at(free_rank + i, proj.cols() + i) = torsion[i];
  return s;
}

}  // namespace

Vec FinAbGroup::preimage(const GroupElement& e) const {
  check_element(e);
  IntMatrix s = stacked_presentation(proj_, free_rank_, torsion_);
  auto sol = toric::solve(s, element_lift(e));
  if (!sol)
    throw toric_error(errc::invalid_input, "group element has no preimage (corrupt element?)");
  return Vec(sol->begin(), sol->begin() + ambient_rank_);
}

IntMatrix FinAbGroup::kernel_lattice() const {
  IntMatrix s = stacked_presentation(proj_, free_rank_, torsion_);
  IntMatrix k = kernel_basis(s);
  // Project solution columns (x, t) to their x part. Independence holds
  // because the torsion block is nonsingular on the t coordinates.
  IntMatrix out(ambient_rank_, k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < ambient_rank_; ++i) out.at(i, j) = k.at(i, j);
  return out;
}

IntMatrix FinAbGroup::relation_lattice(std::span<const GroupElement> elems) const {
  std::size_t k = elems.size();
  std::size_t t = torsion_.size();
  // Columns: the element lifts, then the torsion relations; relations among
  // the elements are kernel vectors restricted to the first k coordinates.
  IntMatrix m(free_rank_ + t, k + t);
  for (std::size_t j = 0; j < k; ++j) {
    Vec lift = element_lift(elems[j]);
    for (std::size_t i = 0; i < lift.size(); ++i) m.at(i, j) = lift[i];
  }
  for (std::size_t i = 0; i < t; ++i) m.at(free_rank_ + i, k + i) = torsion_[i];
  IntMatrix ker = kernel_basis(m);
  IntMatrix pre(k, ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t i = 0; i < k; ++i) pre.at(i, j) = ker.at(i, j);
  // The restriction can collapse columns (pure torsion relations); re-basis
  // through the Hermite form to drop zero columns while keeping the span.
  HermiteResult hr = hermite_normal_form(pre);
  std::size_t keep = hr.pivots.size();
  IntMatrix out(k, keep);
  for (std::size_t j = 0; j < keep; ++j)
    for (std::size_t i = 0; i < k; ++i) out.at(i, j) = hr.h.at(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// QuotientByLattice

QuotientByLattice::QuotientByLattice(const IntMatrix& lattice, std::size_t n)
    : n_(n), k_(lattice.cols()) {
  if (lattice.rows() != n)
    throw toric_error(errc::invalid_input, "lattice basis has wrong ambient rank");
  // Canonicalize the basis so the coordinates depend only on the lattice.
  HermiteResult hr = hermite_normal_form(lattice);
  if (hr.pivots.size() != k_)
    throw toric_error(errc::invalid_input, "lattice basis columns are dependent");
  IntMatrix b(n, k_);
  for (std::size_t j = 0; j < k_; ++j)
    for (std::size_t i = 0; i < n; ++i) b.at(i, j) = hr.h.at(i, j);
  SmithResult s = smith_normal_form(b);
  for (const Int& inv : s.invariants())
    if (inv != 1) throw toric_error(errc::invalid_input, "lattice is not saturated");
  u_ = s.u;
  uinv_ = inverse_unimodular(s.u);
}

Vec QuotientByLattice::project(const Vec& x) const {
  assert(x.size() == n_);
  Vec ux = u_.apply(x);
  return Vec(ux.begin() + k_, ux.end());
}

Vec QuotientByLattice::lift(const Vec& q) const {
  assert(q.size() == n_ - k_);
  Vec padded(n_, Int(0));
  for (std::size_t i = 0; i < q.size(); ++i) padded[k_ + i] = q[i];
  return uinv_.apply(padded);
}

// ---------------------------------------------------------------------------
// Subgroups

SubgroupIndex subgroup_index(std::span<const GroupElement> gens, const FinAbGroup& g) {
  std::size_t k = g.free_rank() + g.torsion().size();
  IntMatrix m(k, gens.size() + g.torsion().size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Vec lift = g.element_lift(gens[j]);
    for (std::size_t i = 0; i < k; ++i) m.at(i, j) = lift[i];
  }
  for (std::size_t i = 0; i < g.torsion().size(); ++i)
    m.at(g.free_rank() + i, gens.size() + i) = g.torsion()[i];

  SmithResult s = smith_normal_form(m);
  std::vector<Int> inv = s.invariants();
  SubgroupIndex out;
  if (inv.size() < k) {
    out.finite = false;
    return out;
  }
  out.finite = true;
  out.index = 1;
  for (const Int& x : inv) out.index *= x;
  return out;
}

bool subgroup_membership(const GroupElement& x, std::span<const GroupElement> gens,
                         const FinAbGroup& g) {
  std::size_t k = g.free_rank() + g.torsion().size();
  IntMatrix m(k, gens.size() + g.torsion().size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Vec lift = g.element_lift(gens[j]);
    for (std::size_t i = 0; i < k; ++i) m.at(i, j) = lift[i];
  }
  for (std::size_t i = 0; i < g.torsion().size(); ++i)
    m.at(g.free_rank() + i, gens.size() + i) = g.torsion()[i];
  return solve(m, g.element_lift(x)).has_value();
}

}  // namespace toric
