#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Int = mpz_class;
using Vec = std::vector<Int>;

// ---------------------------------------------------------------------------
// Vector helpers. All lattice vectors are dense mpz vectors; sizes are small
// (ambient ranks well below 10) so no attempt is made at sparse storage.

Int dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& s, const Vec& a);
bool vec_is_zero(const Vec& a);
bool lex_less(const Vec& a, const Vec& b);
Int vec_inf_norm(const Vec& a);
// Divides by the gcd of the entries; the zero vector is left alone.
void primitivize(Vec& a);
std::string vec_to_string(const Vec& a);
Vec vec_of(std::initializer_list<long> entries);

// Nearest-integer quotient; |a - q*b| <= |b|/2. Used by the normal form
// routines to keep intermediate entries small.
Int rounded_quotient(const Int& a, const Int& b);

// ---------------------------------------------------------------------------
// Dense integer matrix with exact arithmetic.

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static IntMatrix from_cols(const std::vector<Vec>& cols, std::size_t rows);
  static IntMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> rows_as_vectors() const;
  std::vector<Vec> cols_as_vectors() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;
  Vec apply(const Vec& x) const;  // this * x

  bool is_zero() const;
  bool is_identity() const;

  // Elementary unimodular operations (in place).
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);  // row dst += q * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);  // col dst += q * col src

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

// ---------------------------------------------------------------------------
// Normal forms and the usual derived maps.

// d = u * m * v with u, v unimodular and d diagonal with
// d[0][0] | d[1][1] | ... and all diagonal entries >= 0.
struct SmithResult {
  IntMatrix u, d, v;
  std::vector<Int> invariants() const;           // nonzero diagonal entries
  std::vector<Int> torsion_invariants() const;   // invariants that are >= 2
};
SmithResult smith_normal_form(const IntMatrix& m);

// Column-style Hermite form: h = m * v with v unimodular, h in column
// echelon form with positive pivots and entries left of a pivot reduced
// into [0, pivot).
struct HermiteResult {
  IntMatrix h, v;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};
HermiteResult hermite_normal_form(const IntMatrix& m);

// Columns form a basis of { x : m x = 0 }. The returned lattice is
// saturated: any integer vector with m x = 0 is an integer combination.
IntMatrix kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Bareiss fraction-free determinant; m must be square.
Int determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +-1; throws invalid_input otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

// One integer solution of m x = rhs, if any. Factor once, solve many.
class IntegralSolver {
 public:
  explicit IntegralSolver(const IntMatrix& m);
  std::optional<Vec> solve(const Vec& rhs) const;

 private:
  std::size_t rows_, cols_;
  HermiteResult hnf_;
};
std::optional<Vec> solve(const IntMatrix& m, const Vec& rhs);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups presented as cokernels.

// Element of a FinAbGroup: free coordinates over Z plus torsion residues,
// the i-th reduced into [0, torsion[i]).
struct GroupElement {
  Vec free_part;
  Vec torsion_part;

  bool operator==(const GroupElement& rhs) const = default;
  std::string to_string() const;
};
bool group_element_less(const GroupElement& a, const GroupElement& b);

class FinAbGroup {
 public:
  FinAbGroup() = default;
  static FinAbGroup free_group(std::size_t rank);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  std::size_t ambient_rank() const { return ambient_rank_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool same_invariants(const FinAbGroup& other) const;

  GroupElement project(const Vec& ambient) const;
  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const Int& s, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;

  // One generator per free coordinate, then one per torsion factor.
  std::vector<GroupElement> canonical_generators() const;

  // Some ambient vector projecting to the element. Exists because the
  // projection is onto; never fails for well-formed elements.
  Vec preimage(const GroupElement& e) const;

  // Columns span { x in Z^ambient : project(x) = 0 }.
  IntMatrix kernel_lattice() const;

  // Columns span { e in Z^k : sum e_i * elems_i = 0 } for given elements.
  IntMatrix relation_lattice(std::span<const GroupElement> elems) const;

  // Integer lift (free_part, torsion_part) used by subgroup arithmetic.
  Vec element_lift(const GroupElement& e) const;
  GroupElement element_from_lift(const Vec& lift) const;

 private:
  std::size_t ambient_rank_ = 0;
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
  IntMatrix proj_;  // (free_rank + #torsion) x ambient
  friend FinAbGroup cokernel(const IntMatrix& m);
  void check_element(const GroupElement& e) const;
};

// Z^rows(m) / column span of m.
FinAbGroup cokernel(const IntMatrix& m);

// Coordinates for Z^n / L where the columns of `lattice` form a basis of a
// saturated sublattice L. `lift` is a linear section of `project`, so
// lift(project(x)) is a canonical representative of x + L and the map
// x -> lift(project(x)) is additive. The constructor canonicalizes the
// basis first; two callers handing in different bases of the same lattice
// get identical coordinates.
class QuotientByLattice {
 public:
  QuotientByLattice(const IntMatrix& lattice, std::size_t n);

  std::size_t ambient_rank() const { return n_; }
  std::size_t lattice_rank() const { return k_; }
  std::size_t quotient_rank() const { return n_ - k_; }

  Vec project(const Vec& x) const;
  Vec lift(const Vec& q) const;
  Vec canonical_rep(const Vec& x) const { return lift(project(x)); }

 private:
  std::size_t n_, k_;
  IntMatrix u_;     // projection rows live in the last n - k rows
  IntMatrix uinv_;  // section columns live in the last n - k columns
};

struct SubgroupIndex {
  bool finite = false;
  Int index = 0;  // meaningful only when finite
};

// Index of the subgroup generated by `gens` inside g.
SubgroupIndex subgroup_index(std::span<const GroupElement> gens, const FinAbGroup& g);

// Is x an integer combination of `gens` inside g?
bool subgroup_membership(const GroupElement& x, std::span<const GroupElement> gens,
                         const FinAbGroup& g);

}  // namespace toric
