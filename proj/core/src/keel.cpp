#include "m0n/keel.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace m0n {

DivisorClass::DivisorClass(std::uint32_t block_mask, int ambient_size)
    : rep_(block_mask), ambient_(ambient_size) {
  if (ambient_ < 4 || ambient_ > 31)
    throw std::invalid_argument("divisor class needs 4..31 labels");
  const std::uint32_t full = (1u << ambient_) - 1;
  if (block_mask == 0 || (block_mask & ~full))
    throw std::invalid_argument("block mask out of range");
  if (rep_ & 1u) rep_ = full & ~rep_;  // normalize: smallest label outside
  const int size = std::popcount(rep_);
  if (size < 2 || size > ambient_ - 2)
    throw std::invalid_argument("both partition blocks need >= 2 labels");
}

std::uint32_t DivisorClass::complement_mask() const {
  return ((1u << ambient_) - 1) & ~rep_;
}

std::vector<int> DivisorClass::rep_indices() const {
  std::vector<int> out;
  for (int i = 0; i < ambient_; ++i)
    if (rep_ & (1u << i)) out.push_back(i);
  return out;
}

bool is_crossing(const DivisorClass& a, const DivisorClass& b) {
  if (a.ambient_size() != b.ambient_size())
    throw std::invalid_argument("divisor classes from different label sets");
  const std::uint32_t full = (1u << a.ambient_size()) - 1;
  const std::uint32_t A = a.rep_mask(), B = b.rep_mask();
  return (A & B) && (A & ~B & full) && (~A & B & full) && (~A & ~B & full);
}

KeelElement KeelElement::operator+(const KeelElement& o) const {
  if (degree != o.degree)
    throw std::invalid_argument("adding elements of different degrees");
  KeelElement out = *this;
  for (const auto& [m, c] : o.terms) {
    Rational& slot = out.terms[m];
    slot += c;
    if (slot == 0) out.terms.erase(m);
  }
  return out;
}

KeelElement KeelElement::operator-() const { return scaled(-1); }

KeelElement KeelElement::scaled(const Rational& c) const {
  KeelElement out;
  out.degree = degree;
  if (c == 0) return out;
  for (const auto& [m, v] : terms) out.terms[m] = v * c;
  return out;
}

KeelRing::KeelRing(LabelSet S) : labels_(std::move(S)) {
  const int m = labels_.size();
  if (m < 4) throw std::invalid_argument("Keel ring needs at least 4 labels");
  if (m > 31) throw std::invalid_argument("label set too large");
  const std::uint32_t full = (1u << m) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (mask & 1u) continue;  // canonical side avoids the smallest label
    const int size = std::popcount(mask);
    if (size < 2 || size > m - 2) continue;
    classes_.emplace_back(mask, m);
  }
  std::sort(classes_.begin(), classes_.end());
  crossing_.assign(classes_.size(), std::vector<bool>(classes_.size(), false));
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (std::size_t j = i + 1; j < classes_.size(); ++j)
      crossing_[i][j] = crossing_[j][i] = is_crossing(classes_[i], classes_[j]);
}

int KeelRing::class_index(const DivisorClass& c) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
  if (it == classes_.end() || !(*it == c))
    throw std::invalid_argument("divisor class not from this ring");
  return static_cast<int>(it - classes_.begin());
}

KeelElement KeelRing::four_point_relation(int i, int j, int k, int l) const {
  const int m = labels_.size();
  int ids[4] = {i, j, k, l};
  for (int a = 0; a < 4; ++a) {
    if (ids[a] < 0 || ids[a] >= m)
      throw std::invalid_argument("label index out of range");
    for (int b = a + 1; b < 4; ++b)
      if (ids[a] == ids[b])
        throw std::invalid_argument("four-point relation needs distinct labels");
  }
  auto separates = [&](const DivisorClass& c, int a, int b, int x, int y) {
    const std::uint32_t R = c.rep_mask();
    auto in = [&](int t) { return (R >> t) & 1u; };
    return (in(a) && in(b) && !in(x) && !in(y)) ||
           (!in(a) && !in(b) && in(x) && in(y));
  };
  KeelElement out;
  out.degree = 1;
  for (std::size_t idx = 0; idx < classes_.size(); ++idx) {
    Rational coeff = 0;
    if (separates(classes_[idx], i, j, k, l)) coeff += 1;
    if (separates(classes_[idx], i, k, j, l)) coeff -= 1;
    if (coeff != 0) out.terms[{static_cast<int>(idx)}] = coeff;
  }
  return out;
}

KeelElement KeelRing::element(
    std::vector<std::pair<Monomial, Rational>> terms) const {
  KeelElement out;
  bool first = true;
  for (auto& [m, c] : terms) {
    std::sort(m.begin(), m.end());
    for (int idx : m)
      if (idx < 0 || idx >= static_cast<int>(classes_.size()))
        throw std::invalid_argument("class index out of range");
    if (first) {
      out.degree = static_cast<int>(m.size());
      first = false;
    } else if (static_cast<int>(m.size()) != out.degree) {
      throw std::invalid_argument("element must be homogeneous");
    }
    if (c == 0) continue;
    Rational& slot = out.terms[m];
    slot += c;
    if (slot == 0) out.terms.erase(m);
  }
  return out;
}

KeelElement KeelRing::monomial_element(Monomial m) const {
  return element({{std::move(m), Rational(1)}});
}

std::vector<Monomial> KeelRing::crossing_free_monomials(int degree) const {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int min_class) -> void {
    if (static_cast<int>(cur.size()) == degree) {
      out.push_back(cur);
      return;
    }
    for (int c = min_class; c < static_cast<int>(classes_.size()); ++c) {
      bool ok = true;
      for (int chosen : cur)
        if (crossing_[chosen][c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(c);
      self(self, c);
      cur.pop_back();
    }
  };
  if (degree == 0) return {Monomial{}};
  rec(rec, 0);
  return out;
}

void KeelRing::check_degree(int degree) const {
  if (degree < 0 || degree > top_degree())
    throw std::domain_error("degree out of range for this label set");
}

KeelRing::DegreeData& KeelRing::degree_data(int degree) {
  check_degree(degree);
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;

  DegreeData data;
  data.monomials = crossing_free_monomials(degree);
  for (std::size_t i = 0; i < data.monomials.size(); ++i)
    data.index[data.monomials[i]] = static_cast<int>(i);

  if (degree >= 1) {
    const int m = labels_.size();
    std::vector<KeelElement> relations;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c)
          for (int d = c + 1; d < m; ++d) {
            relations.push_back(four_point_relation(a, b, c, d));
            relations.push_back(four_point_relation(a, c, b, d));
            relations.push_back(four_point_relation(a, d, b, c));
          }
    const auto multipliers = crossing_free_monomials(degree - 1);
    for (const KeelElement& rel : relations) {
      for (const Monomial& mult : multipliers) {
        SparseZRow row;
        for (const auto& [mono, coeff] : rel.terms) {
          const int cls = mono[0];
          bool ok = true;
          for (int chosen : mult)
            if (crossing_[chosen][cls]) {
              ok = false;
              break;
            }
          if (!ok) continue;  // crossing product vanishes
          Monomial prod = mult;
          prod.insert(std::upper_bound(prod.begin(), prod.end(), cls), cls);
          row.emplace_back(data.index.at(prod),
                           mpz_class(coeff.get_num()));  // coeffs are +-1
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        data.echelon.insert(std::move(row));
      }
    }
  }
  data.echelon.finalize();
  return cache_.emplace(degree, std::move(data)).first->second;
}

long long KeelRing::graded_dimension(int degree) {
  DegreeData& data = degree_data(degree);
  return static_cast<long long>(data.monomials.size()) - data.echelon.rank();
}

std::vector<long long> KeelRing::all_graded_dimensions() {
  std::vector<long long> dims;
  for (int d = 0; d <= top_degree(); ++d) dims.push_back(graded_dimension(d));
  return dims;
}

KeelElement KeelRing::normal_form(const KeelElement& x) {
  check_degree(x.degree);
  DegreeData& data = degree_data(x.degree);
  std::map<int, Rational> vec;
  for (const auto& [mono, coeff] : x.terms) {
    auto it = data.index.find(mono);
    if (it == data.index.end()) continue;  // contains a crossing pair: zero
    vec[it->second] = coeff;
  }
  vec = data.echelon.reduce(std::move(vec));
  KeelElement out;
  out.degree = x.degree;
  for (const auto& [idx, coeff] : vec) out.terms[data.monomials[idx]] = coeff;
  return out;
}

std::vector<Monomial> KeelRing::quotient_basis(int degree) {
  DegreeData& data = degree_data(degree);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < data.monomials.size(); ++i)
    if (!data.echelon.has_pivot(static_cast<int>(i)))
      out.push_back(data.monomials[i]);
  return out;
}

std::string KeelRing::class_str(int class_index) const {
  const DivisorClass& c = classes_.at(class_index);
  std::ostringstream os;
  os << "D{";
  bool first = true;
  for (int i : c.rep_indices()) {
    if (!first) os << ",";
    os << labels_.name(i);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string KeelRing::monomial_str(const Monomial& m) const {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "*";
    out += class_str(m[i]);
  }
  return out;
}

}  // namespace m0n
