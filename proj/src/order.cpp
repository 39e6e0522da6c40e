#include "vexil/order.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace vexil {

TermOrder TermOrder::lex(std::vector<VarId> priority) {
  TermOrder o(Kind::Lex);
  o.priority_ = std::move(priority);
  o.name_ = "lex";
  return o;
}

TermOrder TermOrder::grlex(std::vector<VarId> priority) {
  TermOrder o(Kind::GrLex);
  o.priority_ = std::move(priority);
  o.name_ = "grlex";
  return o;
}

TermOrder TermOrder::block(std::vector<VarId> front, TermOrder inner) {
  TermOrder o(Kind::Block);
  o.front_ = std::move(front);
  o.inner_ = std::make_shared<TermOrder>(std::move(inner));
  o.name_ = "block(" + o.inner_->name_ + ")";
  return o;
}

TermOrder TermOrder::with_name(std::string n) const {
  TermOrder o = *this;
  o.name_ = std::move(n);
  return o;
}

// Lex along priority_, then canonical VarId order for the rest. Works on
// Laurent monomials as well (exponent comparison is plain integer order).
std::strong_ordering TermOrder::lex_compare(const Monomial &a, const Monomial &b) const {
  for (VarId v : priority_) {
    int ea = a.exp(v), eb = b.exp(v);
    if (ea != eb) return ea <=> eb;
  }
  if (priority_.empty()) {
    // Fast path: walk both sorted exponent vectors.
    const auto &ea = a.entries();
    const auto &eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
      if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first))
        return ea[i].second <=> 0;
      if (i == ea.size() || eb[j].first < ea[i].first) return 0 <=> eb[j].second;
      if (ea[i].second != eb[j].second) return ea[i].second <=> eb[j].second;
      ++i, ++j;
    }
    return std::strong_ordering::equal;
  }
  std::set<VarId> listed(priority_.begin(), priority_.end());
  std::set<VarId> rest;
  for (auto &[v, e] : a.entries())
    if (!listed.count(v)) rest.insert(v);
  for (auto &[v, e] : b.entries())
    if (!listed.count(v)) rest.insert(v);
  for (VarId v : rest) {
    int ea = a.exp(v), eb = b.exp(v);
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial &a, const Monomial &b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::GrLex: {
      if (int da = a.degree(), db = b.degree(); da != db) return da <=> db;
      return lex_compare(a, b);
    }
    case Kind::Block: {
      if (int da = a.degree_in(front_), db = b.degree_in(front_); da != db) return da <=> db;
      return inner_->compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

TermOrder diagonal_order(int n) {
  std::vector<VarId> p;
  p.reserve(n * n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) p.push_back(VarId::z(r, c));
  return TermOrder::lex(std::move(p)).with_name("diagonal");
}

TermOrder antidiagonal_order(int n) {
  std::vector<VarId> p;
  p.reserve(n * n);
  for (int r = 1; r <= n; ++r)
    for (int c = n; c >= 1; --c) p.push_back(VarId::z(r, c));
  return TermOrder::lex(std::move(p)).with_name("antidiagonal");
}

TermOrder random_diagonal_order(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> remaining;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) remaining.push_back({r, c});
  std::vector<VarId> p;
  p.reserve(n * n);
  while (!remaining.empty()) {
    // Boxes all of whose (weak) northwest predecessors are already placed.
    std::vector<size_t> ready;
    for (size_t i = 0; i < remaining.size(); ++i) {
      auto [r, c] = remaining[i];
      bool ok = true;
      for (auto [r2, c2] : remaining)
        if ((r2 < r && c2 <= c) || (r2 <= r && c2 < c)) ok = false;
      if (ok) ready.push_back(i);
    }
    size_t pick = ready[std::uniform_int_distribution<size_t>(0, ready.size() - 1)(rng)];
    auto [r, c] = remaining[pick];
    p.push_back(VarId::z(r, c));
    remaining.erase(remaining.begin() + static_cast<long>(pick));
  }
  return TermOrder::lex(std::move(p)).with_name("seed:" + std::to_string(seed));
}

TermOrder order_from_flag(const std::string &flag, int n) {
  if (flag == "diagonal") return diagonal_order(n);
  if (flag == "antidiagonal") return antidiagonal_order(n);
  if (flag.rfind("seed:", 0) == 0) {
    uint64_t seed = std::stoull(flag.substr(5));
    return random_diagonal_order(n, seed);
  }
  throw std::invalid_argument("unknown order flag: " + flag +
                              " (expected diagonal|antidiagonal|seed:<int>)");
}

}  // namespace vexil
