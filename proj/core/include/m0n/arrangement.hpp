#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "m0n/linalg.hpp"
#include "m0n/poly.hpp"
#include "m0n/rational.hpp"
#include "m0n/stable_tree.hpp"

namespace m0n {

// Affine hyperplane normal.x = offset, stored scaled so the first nonzero
// normal coefficient is 1.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  static Hyperplane make(std::vector<Rational> normal, Rational offset);
  bool operator==(const Hyperplane& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

class Arrangement {
 public:
  explicit Arrangement(int ambient_dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  // throws on duplicates
  void add(std::vector<Rational> normal, Rational offset);
  // returns false when the hyperplane was already present
  bool add_if_absent(std::vector<Rational> normal, Rational offset);

  // deletion A \ H
  Arrangement without(int index) const;
  // restriction A^H: traces of the other hyperplanes on H, in coordinates of
  // H (dimension drops by one)
  Arrangement restriction(int index) const;

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
};

// Intersection of a subfamily of hyperplanes: `contains` is the bitmask of
// every hyperplane containing it, `span` cuts it out, codim = rank.
struct Flat {
  std::uint64_t contains = 0;
  LinSystem span;
  int codim = 0;
};

// Intersection poset ordered by reverse inclusion; flats[0] is the ambient
// space. Since flats are keyed by their closed hyperplane set, the order is
// bitmask containment.
struct IntersectionPoset {
  std::vector<Flat> flats;        // by (codim, mask) ascending
  std::vector<long long> mobius;  // mu(ambient, flat)

  std::vector<long long> flat_counts_by_codim() const;
};

IntersectionPoset intersection_poset(const Arrangement& A);

// chi(q) = sum over flats of mu * q^dim(flat); monic of degree dim(A)
IntPoly characteristic_polynomial(const Arrangement& A);

// Betti numbers of the complement of the complexified arrangement,
// b_k = |sum of mu over codim-k flats|.
GradedDims poincare_complement(const Arrangement& A);

// x_i = x_j in dimension n (n >= 2)
Arrangement braid_arrangement(int n);
// x_i = 0, x_i = 1, x_i = x_j in dimension m-3 (m >= 4); complement is the
// open moduli space of m marked points
Arrangement m0n_arrangement(int m);
// z_i = 0, z_i = 1, z_i = 1/2, z_i = z_j, z_i + z_j = 1 in dimension p
// (p >= 1); complement is the codim-0 paired-configuration stratum
Arrangement ny_arrangement(int p);
// m0n arrangement plus the x_i = 1/2 walls (n >= 4): the Kunneth factor for
// the paired gravity dimensions
Arrangement grav_ny_factor_arrangement(int n);

// chi_A = chi_{A minus H} - chi_{A restricted to H}
bool deletion_restriction_check(const Arrangement& A, int index);

// Exact number of F_p points avoiding every hyperplane (all denominators
// must be invertible mod p). Brute force; the finite-field oracle for chi.
long long complement_count_fp(const Arrangement& A, long long p);

// Graded dims of the open moduli space cohomology, suspension recorded
GradedDims grav_dims(int n);
// Kunneth factor: complement of the m0n arrangement augmented by the
// half-point walls
GradedDims grav_ny_factor_dims(int n);
// Square of the factor under the Kunneth product; the suspension is applied
// once to the product by default, or to each factor when requested
GradedDims grav_ny_dims(int n, bool suspend_each_factor = false);

// Dimension bookkeeping of the one-edge residue: the stratum's dims from
// per-vertex point counts must match the Kunneth product of the two vertex
// moduli dims. Degree and weight both shift by one across the residue.
struct ResidueCheck {
  bool ok = false;
  std::vector<long long> stratum_dims;
  std::vector<long long> kunneth_dims;
  int degree_shift = 1;
  int tate_twist = 1;
};
ResidueCheck residue_dim_check(const StableTree& one_edge_tree);

}  // namespace m0n
