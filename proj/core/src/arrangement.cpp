#include "m0n/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "m0n/strata.hpp"

namespace m0n {

Hyperplane Hyperplane::make(std::vector<Rational> normal, Rational offset) {
  int lead = -1;
  for (std::size_t i = 0; i < normal.size(); ++i)
    if (normal[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) throw std::invalid_argument("hyperplane needs nonzero normal");
  Rational inv = 1 / normal[lead];
  for (auto& c : normal) c *= inv;
  offset *= inv;
  return Hyperplane{std::move(normal), std::move(offset)};
}

Arrangement::Arrangement(int ambient_dim) : dim_(ambient_dim) {
  if (dim_ < 0) throw std::invalid_argument("negative ambient dimension");
}

void Arrangement::add(std::vector<Rational> normal, Rational offset) {
  if (!add_if_absent(std::move(normal), std::move(offset)))
    throw std::invalid_argument("duplicate hyperplane");
}

bool Arrangement::add_if_absent(std::vector<Rational> normal, Rational offset) {
  if (static_cast<int>(normal.size()) != dim_)
    throw std::invalid_argument("hyperplane dimension mismatch");
  Hyperplane h = Hyperplane::make(std::move(normal), std::move(offset));
  for (const Hyperplane& old : hyperplanes_)
    if (old == h) return false;
  hyperplanes_.push_back(std::move(h));
  return true;
}

Arrangement Arrangement::without(int index) const {
  if (index < 0 || index >= size())
    throw std::invalid_argument("hyperplane index out of range");
  Arrangement out(dim_);
  for (int i = 0; i < size(); ++i)
    if (i != index)
      out.add(hyperplanes_[i].normal, hyperplanes_[i].offset);
  return out;
}

Arrangement Arrangement::restriction(int index) const {
  if (index < 0 || index >= size())
    throw std::invalid_argument("hyperplane index out of range");
  const Hyperplane& h = hyperplanes_[index];
  LinSystem sys(dim_);
  sys.add_constraint(h.normal, h.offset);
  const auto base = sys.basepoint();
  const auto dirs = sys.null_basis();

  Arrangement out(dim_ - 1);
  for (int i = 0; i < size(); ++i) {
    if (i == index) continue;
    const Hyperplane& k = hyperplanes_[i];
    std::vector<Rational> trace(dirs.size(), 0);
    bool nonzero = false;
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      for (int c = 0; c < dim_; ++c) trace[d] += k.normal[c] * dirs[d][c];
      if (trace[d] != 0) nonzero = true;
    }
    if (!nonzero) continue;  // parallel to H, empty trace
    Rational rhs = k.offset;
    for (int c = 0; c < dim_; ++c) rhs -= k.normal[c] * base[c];
    out.add_if_absent(std::move(trace), std::move(rhs));
  }
  return out;
}

std::vector<long long> IntersectionPoset::flat_counts_by_codim() const {
  std::vector<long long> counts;
  for (const Flat& f : flats) {
    if (static_cast<int>(counts.size()) <= f.codim)
      counts.resize(f.codim + 1, 0);
    counts[f.codim]++;
  }
  return counts;
}

IntersectionPoset intersection_poset(const Arrangement& A) {
  if (A.size() > 63)
    throw std::invalid_argument("arrangement too large for bitmask poset");
  IntersectionPoset poset;

  auto closure_mask = [&](const LinSystem& sys) {
    std::uint64_t mask = 0;
    for (int j = 0; j < A.size(); ++j)
      if (sys.implies(A.hyperplanes()[j].normal, A.hyperplanes()[j].offset))
        mask |= (1ull << j);
    return mask;
  };

  std::map<std::uint64_t, Flat> found;
  Flat ambient{0, LinSystem(A.dim()), 0};
  found.emplace(0ull, ambient);
  std::vector<Flat> frontier = {ambient};
  while (!frontier.empty()) {
    std::vector<Flat> next;
    for (const Flat& f : frontier) {
      for (int j = 0; j < A.size(); ++j) {
        if (f.contains & (1ull << j)) continue;
        LinSystem sys = f.span;
        auto res = sys.add_constraint(A.hyperplanes()[j].normal,
                                      A.hyperplanes()[j].offset);
        if (res == LinSystem::AddResult::Inconsistent) continue;
        std::uint64_t mask = closure_mask(sys);
        if (found.count(mask)) continue;
        Flat nf{mask, sys, sys.rank()};
        found.emplace(mask, nf);
        next.push_back(std::move(nf));
      }
    }
    frontier = std::move(next);
  }

  for (auto& [mask, f] : found) poset.flats.push_back(std::move(f));
  std::sort(poset.flats.begin(), poset.flats.end(),
            [](const Flat& a, const Flat& b) {
              return std::pair(a.codim, a.contains) <
                     std::pair(b.codim, b.contains);
            });

  // Mobius function by recursion over the (bitmask-containment) order
  const std::size_t n = poset.flats.size();
  poset.mobius.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long acc = (i == 0) ? 1 : 0;
    for (std::size_t k = 0; k < i; ++k) {
      const std::uint64_t sub = poset.flats[k].contains;
      if ((sub & poset.flats[i].contains) == sub && k != i)
        acc -= poset.mobius[k];
    }
    poset.mobius[i] = (i == 0) ? 1 : acc;
  }
  return poset;
}

IntPoly characteristic_polynomial(const Arrangement& A) {
  IntersectionPoset poset = intersection_poset(A);
  std::vector<long long> coeffs(A.dim() + 1, 0);
  for (std::size_t i = 0; i < poset.flats.size(); ++i)
    coeffs[A.dim() - poset.flats[i].codim] += poset.mobius[i];
  return IntPoly(std::move(coeffs));
}

GradedDims poincare_complement(const Arrangement& A) {
  IntersectionPoset poset = intersection_poset(A);
  std::vector<long long> whitney;
  for (std::size_t i = 0; i < poset.flats.size(); ++i) {
    const int k = poset.flats[i].codim;
    if (static_cast<int>(whitney.size()) <= k) whitney.resize(k + 1, 0);
    whitney[k] += poset.mobius[i];
  }
  GradedDims out;
  for (std::size_t k = 0; k < whitney.size(); ++k) {
    long long b = (k % 2 == 0) ? whitney[k] : -whitney[k];
    if (b < 0) throw std::logic_error("Mobius sign pattern violated");
    out.dims.push_back(b);
  }
  return out;
}

Arrangement braid_arrangement(int n) {
  if (n < 2) throw std::invalid_argument("braid arrangement needs n >= 2");
  Arrangement A(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> normal(n, 0);
      normal[i] = 1;
      normal[j] = -1;
      A.add(std::move(normal), 0);
    }
  return A;
}

Arrangement m0n_arrangement(int m) {
  if (m < 4) throw std::invalid_argument("moduli arrangement needs m >= 4");
  const int d = m - 3;
  Arrangement A(d);
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> e(d, 0);
    e[i] = 1;
    A.add(e, 0);
    A.add(e, 1);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<Rational> normal(d, 0);
      normal[i] = 1;
      normal[j] = -1;
      A.add(std::move(normal), 0);
    }
  return A;
}

Arrangement ny_arrangement(int p) {
  if (p < 1) throw std::invalid_argument("paired arrangement needs p >= 1");
  Arrangement A(p);
  const Rational half = make_rational(1, 2);
  for (int i = 0; i < p; ++i) {
    std::vector<Rational> e(p, 0);
    e[i] = 1;
    A.add(e, 0);
    A.add(e, 1);
    A.add(e, half);
  }
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      std::vector<Rational> diff(p, 0);
      diff[i] = 1;
      diff[j] = -1;
      A.add(std::move(diff), 0);
      std::vector<Rational> sum(p, 0);
      sum[i] = 1;
      sum[j] = 1;
      A.add(std::move(sum), 1);
    }
  return A;
}

Arrangement grav_ny_factor_arrangement(int n) {
  Arrangement A = m0n_arrangement(n);
  const int d = n - 3;
  const Rational half = make_rational(1, 2);
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> e(d, 0);
    e[i] = 1;
    A.add(e, half);
  }
  return A;
}

bool deletion_restriction_check(const Arrangement& A, int index) {
  IntPoly whole = characteristic_polynomial(A);
  IntPoly deleted = characteristic_polynomial(A.without(index));
  IntPoly restricted = characteristic_polynomial(A.restriction(index));
  return whole + restricted == deleted;
}

long long complement_count_fp(const Arrangement& A, long long p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  const int d = A.dim();
  const int H = A.size();

  auto to_fp = [&](const Rational& r) -> long long {
    long long num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    long long den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0) throw std::domain_error("denominator not invertible mod p");
    // Fermat inverse
    long long inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = (inv * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    return (num * inv) % p;
  };

  // table[c][h][x] = coefficient h of variable c times x, mod p
  std::vector<std::vector<std::vector<int>>> table(
      d, std::vector<std::vector<int>>(H, std::vector<int>(p)));
  std::vector<int> start(H);
  for (int h = 0; h < H; ++h) {
    start[h] = static_cast<int>((p - to_fp(A.hyperplanes()[h].offset)) % p);
    for (int c = 0; c < d; ++c) {
      long long coef = to_fp(A.hyperplanes()[h].normal[c]);
      for (long long x = 0; x < p; ++x)
        table[c][h][x] = static_cast<int>((coef * x) % p);
    }
  }

  // depth-first with incremental partial sums; a leaf counts when every
  // hyperplane evaluation is nonzero
  std::vector<std::vector<int>> partial(d + 1, std::vector<int>(H));
  partial[0] = start;
  long long count = 0;
  std::vector<int> x(d, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == d) {
      bool off_all = true;
      for (int h = 0; h < H; ++h)
        if (partial[d][h] == 0) {
          off_all = false;
          break;
        }
      count += off_all ? 1 : 0;
      --depth;
      continue;
    }
    if (x[depth] == p) {
      x[depth] = 0;
      --depth;
      continue;
    }
    const int v = x[depth]++;
    for (int h = 0; h < H; ++h) {
      int s = partial[depth][h] + table[depth][h][v];
      partial[depth + 1][h] = s >= p ? s - static_cast<int>(p) : s;
    }
    ++depth;
  }
  return count;
}

namespace {

GradedDims open_moduli_dims(int m) {
  if (m < 3) throw std::invalid_argument("need at least 3 marked points");
  if (m == 3) return GradedDims{{1}, 0, 0};
  return poincare_complement(m0n_arrangement(m));
}

}  // namespace

GradedDims grav_dims(int n) {
  GradedDims out = open_moduli_dims(n);
  out.suspension = 1;
  return out;
}

GradedDims grav_ny_factor_dims(int n) {
  if (n < 3) throw std::invalid_argument("need at least 3 marked points");
  if (n == 3) return GradedDims{{1}, 0, 0};
  return poincare_complement(grav_ny_factor_arrangement(n));
}

GradedDims grav_ny_dims(int n, bool suspend_each_factor) {
  GradedDims factor = grav_ny_factor_dims(n);
  if (suspend_each_factor) factor.suspension = 1;
  GradedDims out = kunneth_product(factor, factor);
  if (!suspend_each_factor) out.suspension = 1;
  return out;
}

ResidueCheck residue_dim_check(const StableTree& one_edge_tree) {
  if (one_edge_tree.num_edges() != 1)
    throw std::invalid_argument("residue check needs a one-edge tree");
  const int va = one_edge_tree.valence(0);
  const int vb = one_edge_tree.valence(1);

  ResidueCheck out;
  IntPoly counts = open_stratum_count_poly(va) * open_stratum_count_poly(vb);
  out.stratum_dims = counts.abs_coeffs_high_to_low();
  out.kunneth_dims =
      kunneth_product(open_moduli_dims(va), open_moduli_dims(vb)).dims;
  out.ok = out.stratum_dims == out.kunneth_dims;
  return out;
}

}  // namespace m0n
