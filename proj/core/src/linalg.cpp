#include "m0n/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace m0n {

namespace {

int leading_col(const std::vector<Rational>& row, int dim) {
  for (int i = 0; i < dim; ++i)
    if (row[i] != 0) return i;
  return -1;
}

void content_normalize(SparseZRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) v /= g;
}

}  // namespace

std::vector<Rational> LinSystem::reduce(std::vector<Rational> row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& f = row[pivots_[r]];
    if (f == 0) continue;
    Rational factor = f;  // pivot entries are normalized to 1
    for (int c = 0; c <= dim_; ++c) row[c] -= factor * rows_[r][c];
  }
  return row;
}

LinSystem::AddResult LinSystem::add_constraint(
    const std::vector<Rational>& normal, const Rational& offset) {
  if (static_cast<int>(normal.size()) != dim_)
    throw std::invalid_argument("constraint dimension mismatch");
  std::vector<Rational> row = normal;
  row.push_back(offset);
  row = reduce(std::move(row));
  int lead = leading_col(row, dim_);
  if (lead < 0) {
    return row[dim_] == 0 ? AddResult::Redundant : AddResult::Inconsistent;
  }
  Rational inv = 1 / row[lead];
  for (int c = 0; c <= dim_; ++c) row[c] *= inv;
  // eliminate the new pivot from existing rows to stay fully reduced
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = rows_[r][lead];
    if (f == 0) continue;
    for (int c = 0; c <= dim_; ++c) rows_[r][c] -= f * row[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return AddResult::Added;
}

bool LinSystem::implies(const std::vector<Rational>& normal,
                        const Rational& offset) const {
  std::vector<Rational> row = normal;
  row.push_back(offset);
  row = reduce(std::move(row));
  if (leading_col(row, dim_) >= 0) return false;
  return row[dim_] == 0;
}

bool LinSystem::contains_point(const std::vector<Rational>& x) const {
  for (const auto& row : rows_) {
    Rational acc = -row[dim_];
    for (int c = 0; c < dim_; ++c) acc += row[c] * x[c];
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Rational> LinSystem::basepoint() const {
  std::vector<Rational> x(dim_, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = rows_[r][dim_];
  return x;
}

std::vector<std::vector<Rational>> LinSystem::null_basis() const {
  std::vector<bool> is_pivot(dim_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < dim_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(dim_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      v[pivots_[r]] = -rows_[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseZRow row_combine(const mpz_class& a, const SparseZRow& x,
                       const mpz_class& b, const SparseZRow& y) {
  SparseZRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      mpz_class v = a * x[i].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      mpz_class v = b * y[j].second;
      if (v != 0) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      mpz_class v = a * x[i].second + b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool SparseEchelon::insert(SparseZRow row) {
  if (finalized_) throw std::logic_error("echelon already finalized");
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      content_normalize(row);
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    const mpz_class& a = row.front().second;
    const mpz_class& b = it->second.front().second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // (b/g)*row - (a/g)*pivot kills the leading column
    row = row_combine(b / g, row, -a / g, it->second);
    content_normalize(row);
  }
  return false;
}

void SparseEchelon::finalize() {
  if (finalized_) return;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseZRow& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto p = pivots_.find(row[k].first);
        if (p == pivots_.end()) continue;
        const mpz_class& a = row[k].second;
        const mpz_class& b = p->second.front().second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        row = row_combine(b / g, row, -a / g, p->second);
        content_normalize(row);
        changed = true;
        break;
      }
    }
  }
  finalized_ = true;
}

std::map<int, Rational> SparseEchelon::reduce(std::map<int, Rational> x) const {
  if (!finalized_) throw std::logic_error("echelon not finalized");
  for (const auto& [col, row] : pivots_) {
    auto it = x.find(col);
    if (it == x.end() || it->second == 0) continue;
    Rational factor = it->second / Rational(row.front().second);
    for (const auto& [c, v] : row) {
      Rational& slot = x[c];
      slot -= factor * Rational(v);
      if (slot == 0) x.erase(c);
    }
  }
  return x;
}

}  // namespace m0n
