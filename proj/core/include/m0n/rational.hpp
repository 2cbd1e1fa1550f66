#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace m0n {

// Exact rational scalar used throughout; no floating point anywhere.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "n", "-n", "n/d"; throws on malformed input.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational literal: " + text);
  }
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// A point of the projective line over the rationals: a finite value or infinity.
struct ProjPoint {
  bool infinite = false;
  Rational value = 0;

  ProjPoint() = default;
  ProjPoint(const Rational& v) : value(v) {}  // NOLINT: implicit by design
  static ProjPoint infinity() {
    ProjPoint p;
    p.infinite = true;
    return p;
  }

  bool operator==(const ProjPoint& o) const {
    if (infinite != o.infinite) return false;
    return infinite || value == o.value;
  }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }

  std::string str() const { return infinite ? "inf" : value.get_str(); }
};

inline ProjPoint parse_proj_point(const std::string& text) {
  if (text == "inf" || text == "oo") return ProjPoint::infinity();
  return ProjPoint(parse_rational(text));
}

}  // namespace m0n
