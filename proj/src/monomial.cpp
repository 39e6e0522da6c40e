#include "vexil/monomial.hpp"

#include <algorithm>

namespace vexil {

std::string VarId::str() const {
  switch (kind()) {
    case VarKind::X: return "x" + std::to_string(index());
    case VarKind::Y: return "y" + std::to_string(index());
    case VarKind::Z: return "z" + std::to_string(row()) + "_" + std::to_string(col());
    case VarKind::Aux: return "t" + std::to_string(index());
  }
  return "?";
}

Monomial Monomial::var(VarId v, int exp) {
  Monomial m;
  if (exp != 0) m.e_.push_back({v, exp});
  m.check();
  return m;
}

void Monomial::check() const {
  for (auto &[v, e] : e_)
    if (e < 0 && !v.is_y())
      throw std::invalid_argument("Monomial: negative exponent on non-y variable " + v.str());
}

Monomial Monomial::from_sorted(std::vector<Entry> e) {
  Monomial m;
  m.e_ = std::move(e);
  m.check();
  return m;
}

int Monomial::exp(VarId v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), v,
                             [](const Entry &a, VarId b) { return a.first < b; });
  return (it != e_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (auto &[v, e] : e_) d += e;
  return d;
}

int Monomial::degree_in(VarKind k) const {
  int d = 0;
  for (auto &[v, e] : e_)
    if (v.kind() == k) d += e;
  return d;
}

int Monomial::degree_in(const std::vector<VarId> &vars) const {
  int d = 0;
  for (auto v : vars) d += exp(v);
  return d;
}

bool Monomial::has_negative() const {
  for (auto &[v, e] : e_)
    if (e < 0) return true;
  return false;
}

std::vector<VarId> Monomial::support() const {
  std::vector<VarId> s;
  s.reserve(e_.size());
  for (auto &[v, e] : e_) s.push_back(v);
  return s;
}

// Merge two sorted exponent vectors with a combining sign on the second.
static std::vector<Monomial::Entry> merge(const std::vector<Monomial::Entry> &a,
                                          const std::vector<Monomial::Entry> &b, int sign) {
  std::vector<Monomial::Entry> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back({b[j].first, sign * b[j].second});
      ++j;
    } else {
      int e = a[i].second + sign * b[j].second;
      if (e != 0) r.push_back({a[i].first, e});
      ++i, ++j;
    }
  }
  return r;
}

Monomial Monomial::operator*(const Monomial &o) const { return from_sorted(merge(e_, o.e_, +1)); }

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Monomial::pow: negative power");
  std::vector<Entry> r;
  for (auto &[v, e] : e_)
    if (e * k != 0) r.push_back({v, e * k});
  return from_sorted(std::move(r));
}

Monomial Monomial::div_laurent(const Monomial &o) const { return from_sorted(merge(e_, o.e_, -1)); }

bool Monomial::divisible_by(const Monomial &o) const {
  size_t i = 0;
  for (auto &[v, e] : o.e_) {
    while (i < e_.size() && e_[i].first < v) ++i;
    if (i == e_.size() || e_[i].first != v || e_[i].second < e) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::try_div(const Monomial &o) const {
  if (!divisible_by(o)) return std::nullopt;
  return div_laurent(o);
}

Monomial Monomial::lcm(const Monomial &o) const {
  std::vector<Entry> r;
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
      r.push_back(e_[i++]);
    else if (i == e_.size() || o.e_[j].first < e_[i].first)
      r.push_back(o.e_[j++]);
    else {
      r.push_back({e_[i].first, std::max(e_[i].second, o.e_[j].second)});
      ++i, ++j;
    }
  }
  return from_sorted(std::move(r));
}

Monomial Monomial::gcd(const Monomial &o) const {
  std::vector<Entry> r;
  size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    if (e_[i].first < o.e_[j].first)
      ++i;
    else if (o.e_[j].first < e_[i].first)
      ++j;
    else {
      int e = std::min(e_[i].second, o.e_[j].second);
      if (e != 0) r.push_back({e_[i].first, e});
      ++i, ++j;
    }
  }
  return from_sorted(std::move(r));
}

bool Monomial::coprime(const Monomial &o) const { return gcd(o).is_one(); }

bool Monomial::is_squarefree() const {
  for (auto &[v, e] : e_)
    if (e != 1) return false;
  return true;
}

Monomial Monomial::squarefree_part() const {
  std::vector<Entry> r;
  for (auto &[v, e] : e_) {
    if (e < 0) throw std::invalid_argument("squarefree_part: Laurent monomial");
    if (e > 0) r.push_back({v, 1});
  }
  return from_sorted(std::move(r));
}

Monomial Monomial::without(VarId v) const {
  std::vector<Entry> r;
  for (auto &en : e_)
    if (en.first != v) r.push_back(en);
  return from_sorted(std::move(r));
}

Monomial Monomial::subst_var(VarId from, VarId to) const {
  int e = exp(from);
  if (e == 0) return *this;
  return without(from) * Monomial::var(to, e);
}

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::string s;
  for (auto &[v, e] : e_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace vexil
