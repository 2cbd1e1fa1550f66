#pragma once

#include <map>
#include <utility>
#include <vector>

#include "m0n/rational.hpp"

namespace m0n {

// Affine linear system over Q, kept in fully reduced row echelon form.
// Rows are [coefficients | rhs] over `dim` variables; the RREF is canonical,
// so two systems with the same solution set compare equal.
class LinSystem {
 public:
  explicit LinSystem(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  enum class AddResult { Redundant, Added, Inconsistent };
  // Adds normal.x = offset. On Inconsistent the system is left unchanged.
  AddResult add_constraint(const std::vector<Rational>& normal,
                           const Rational& offset);
  // True iff every solution satisfies normal.x = offset.
  bool implies(const std::vector<Rational>& normal,
               const Rational& offset) const;
  bool contains_point(const std::vector<Rational>& x) const;
  // One solution (free variables set to 0). Requires consistency, which
  // holds by construction.
  std::vector<Rational> basepoint() const;
  // Basis of the direction space (solutions of the homogeneous system).
  std::vector<std::vector<Rational>> null_basis() const;

  bool operator==(const LinSystem& o) const {
    return dim_ == o.dim_ && rows_ == o.rows_;
  }

 private:
  std::vector<Rational> reduce(std::vector<Rational> row) const;

  int dim_;
  std::vector<std::vector<Rational>> rows_;  // each of size dim_ + 1
  std::vector<int> pivots_;                  // pivot column per row, ascending
};

// Sparse integer row: (column, coefficient), strictly increasing columns.
using SparseZRow = std::vector<std::pair<int, mpz_class>>;

// Incremental echelon form over Z computing rank over Q. Rows are content-
// normalized with positive leading coefficient; pivots are the smallest
// columns, so with deg-lex column order the pivot set is deterministic.
class SparseEchelon {
 public:
  // Reduces `row` against the current pivots; installs the remainder as a
  // new pivot row. Returns true when the rank grew.
  bool insert(SparseZRow row);
  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseZRow>& pivot_rows() const { return pivots_; }
  bool has_pivot(int col) const { return pivots_.count(col) > 0; }

  // Back-substitutes so every pivot row meets the other pivot columns with
  // coefficient 0 (integer analogue of RREF). Call once, before reduce().
  void finalize();

  // Image of a rational vector modulo the row span; pivot coordinates are
  // eliminated. Requires finalize().
  std::map<int, Rational> reduce(std::map<int, Rational> x) const;

 private:
  std::map<int, SparseZRow> pivots_;
  bool finalized_ = false;
};

// a*x + b*y for sparse integer rows
SparseZRow row_combine(const mpz_class& a, const SparseZRow& x,
                       const mpz_class& b, const SparseZRow& y);

}  // namespace m0n
