#include "vexil/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vexil/numeric.hpp"

namespace vexil {

static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[i].divisible_by(gens[j]) && !(gens[j].divisible_by(gens[i]) && j > i))
        redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  for (auto &m : gens)
    if (m.has_negative()) throw std::invalid_argument("MonomialIdeal: Laurent monomial");
  g_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial &m) const {
  for (auto &g : g_)
    if (m.divisible_by(g)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal &o) const {
  for (auto &g : o.g_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::is_squarefree() const {
  for (auto &g : g_)
    if (!g.is_squarefree()) return false;
  return true;
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal &o) const {
  std::vector<Monomial> gens = g_;
  gens.insert(gens.end(), o.g_.begin(), o.g_.end());
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal &o) const {
  std::vector<Monomial> gens;
  for (auto &a : g_)
    for (auto &b : o.g_) gens.push_back(a.lcm(b));
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> gens;
  for (auto &g : g_) gens.push_back(g.squarefree_part());
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(VarId v) const {
  std::vector<Monomial> gens;
  for (auto &g : g_)
    gens.push_back(g.exp(v) > 0 ? *g.try_div(Monomial::var(v)) : g);
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal MonomialIdeal::saturate(VarId v) const {
  std::vector<Monomial> gens;
  for (auto &g : g_) gens.push_back(g.without(v));
  return MonomialIdeal(std::move(gens));
}

std::vector<std::set<VarId>> MonomialIdeal::minimal_primes() const {
  if (is_unit()) return {};
  // Transversals of the generator supports, built by branching on the
  // variables of one generator at a time, then pruned to minimal ones.
  std::vector<std::vector<VarId>> supports;
  for (auto &g : g_) supports.push_back(g.support());
  std::vector<std::set<VarId>> found;
  std::set<VarId> current;
  constexpr size_t kCap = 200000;
  auto rec = [&](auto &&self, size_t idx) -> void {
    if (found.size() > kCap) throw BudgetExhausted("minimal_primes: too many branches");
    while (idx < supports.size()) {
      bool hit = false;
      for (auto v : supports[idx])
        if (current.count(v)) hit = true;
      if (!hit) break;
      ++idx;
    }
    if (idx == supports.size()) {
      found.push_back(current);
      return;
    }
    for (auto v : supports[idx]) {
      current.insert(v);
      self(self, idx + 1);
      current.erase(v);
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::set<VarId>> minimal;
  for (auto &p : found) {
    bool keep = true;
    for (auto &q : found)
      if (q != p && std::includes(p.begin(), p.end(), q.begin(), q.end())) keep = false;
    if (keep) minimal.push_back(p);
  }
  return minimal;
}

std::vector<Poly> MonomialIdeal::polys() const {
  std::vector<Poly> out;
  for (auto &g : g_) out.push_back(Poly(g));
  return out;
}

std::vector<VarId> MonomialIdeal::support() const {
  std::set<VarId> s;
  for (auto &g : g_)
    for (auto v : g.support()) s.insert(v);
  return {s.begin(), s.end()};
}

std::vector<Int> series_add(const std::vector<Int> &a, const std::vector<Int> &b) {
  std::vector<Int> out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<Int> series_shift(const std::vector<Int> &a, int k) {
  if (a.empty()) return a;
  std::vector<Int> out(a.size() + static_cast<size_t>(k), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i + static_cast<size_t>(k)] = a[i];
  return out;
}

std::vector<Int> hilbert_numerator(const MonomialIdeal &I) {
  if (I.is_unit()) return {};
  const auto &gens = I.gens();
  // Pivot on a variable shared by two generators; without one the
  // generators are pairwise coprime and R/I is a complete intersection.
  std::map<VarId, int> uses;
  for (const auto &g : gens)
    for (VarId v : g.support()) ++uses[v];
  const std::pair<const VarId, int> *pivot = nullptr;
  for (const auto &e : uses)
    if (e.second >= 2 && (!pivot || e.second > pivot->second)) pivot = &e;
  if (!pivot) {
    std::vector<Int> num{Int(1)};
    for (const auto &g : gens) {
      // Multiply by 1 - s^deg.
      auto shifted = series_shift(num, g.degree());
      for (auto &c : shifted) c = -c;
      num = series_add(num, shifted);
    }
    return num;
  }
  VarId v = pivot->first;
  // 0 -> R/(I:v) -> R/I -> R/(I+<v>) -> 0 with the first map of degree 1.
  auto plus_v = I.plus(MonomialIdeal({Monomial::var(v)}));
  return series_add(hilbert_numerator(plus_v), series_shift(hilbert_numerator(I.colon(v)), 1));
}

}  // namespace vexil
