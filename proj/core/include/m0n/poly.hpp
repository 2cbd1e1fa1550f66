#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace m0n {

// Dense integer polynomial in one formal variable, coefficient of x^k at c[k].
// Used both for point-count polynomials in q and Poincare polynomials in t.
struct IntPoly {
  std::vector<long long> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly one() { return IntPoly({1}); }
  static IntPoly zero() { return IntPoly(); }
  // x - a
  static IntPoly x_minus(long long a) { return IntPoly({-a, 1}); }
  // 1 + a x
  static IntPoly one_plus(long long a) { return IntPoly({1, a}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : 0;
  }

  long long eval(long long x) const {
    long long acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  bool palindromic() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != c[c.size() - 1 - i]) return false;
    return true;
  }

  std::vector<long long> abs_coeffs_high_to_low() const {
    std::vector<long long> out(c.rbegin(), c.rend());
    for (auto& x : out) x = std::llabs(x);
    return out;
  }

  IntPoly operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
  }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }
  bool operator==(const IntPoly& o) const { return c == o.c; }
};

// Graded dimension vector with the degree/weight bookkeeping carried as
// metadata: the suspension shifts reported degrees without changing entries,
// the Tate twist is a pure weight marker.
struct GradedDims {
  std::vector<long long> dims;
  int suspension = 0;
  int tate_twist = 0;

  long long total() const {
    long long t = 0;
    for (auto d : dims) t += d;
    return t;
  }
  IntPoly generating_poly() const { return IntPoly(dims); }
  bool operator==(const GradedDims& o) const { return dims == o.dims; }
};

inline GradedDims kunneth_product(const GradedDims& a, const GradedDims& b) {
  GradedDims out;
  out.dims = (a.generating_poly() * b.generating_poly()).c;
  out.suspension = a.suspension + b.suspension;
  out.tate_twist = a.tate_twist + b.tate_twist;
  return out;
}

}  // namespace m0n
