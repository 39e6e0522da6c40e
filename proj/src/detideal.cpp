#include "vexil/detideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace vexil {

Poly generic_minor(const std::vector<int> &rows, const std::vector<int> &cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("generic_minor: not square");
  const int m = static_cast<int>(rows.size());
  if (m == 0) return Poly(Rat(1));
  std::vector<int> idx(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
  Poly det;
  // Leibniz sum; sign from the explicit inversion count of each arrangement.
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (idx[static_cast<size_t>(i)] > idx[static_cast<size_t>(j)]) ++inv;
    Monomial mono;
    for (int i = 0; i < m; ++i)
      mono = mono * Monomial::var(VarId::z(rows[static_cast<size_t>(i)],
                                           cols[static_cast<size_t>(idx[static_cast<size_t>(i)])]));
    det += Poly(mono, Rat(inv % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return det;
}

namespace {

void subsets_rec(int lo, int hi, int k, std::vector<int> &cur,
                 std::vector<std::vector<int>> &out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi - k + 1; ++v) {
    cur.push_back(v);
    subsets_rec(v + 1, hi, k - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(1, n, k, cur, out);
  return out;
}

}  // namespace

std::vector<Poly> corner_minors(const Perm &pi, int p, int q) {
  const int m = 1 + pi.rank(p, q);
  std::vector<Poly> out;
  if (m > std::min(p, q)) return out;
  for (const auto &rows : subsets(p, m))
    for (const auto &cols : subsets(q, m)) out.push_back(generic_minor(rows, cols));
  return out;
}

std::vector<Poly> schubert_ideal(const Perm &pi) {
  std::vector<Poly> gens;
  for (Box b : pi.essential())
    for (auto &f : corner_minors(pi, b.row, b.col)) gens.push_back(std::move(f));
  return gens;
}

std::vector<Poly> schubert_ideal_all_boxes(const Perm &pi) {
  std::vector<Poly> gens;
  for (int p = 1; p <= pi.n(); ++p)
    for (int q = 1; q <= pi.n(); ++q)
      for (auto &f : corner_minors(pi, p, q)) gens.push_back(std::move(f));
  return gens;
}

MonomialIdeal diagonal_terms(const Perm &pi) {
  std::vector<Monomial> lts;
  for (Box b : pi.essential()) {
    const int m = 1 + pi.rank(b.row, b.col);
    if (m > std::min(b.row, b.col)) continue;
    for (const auto &rows : subsets(b.row, m))
      for (const auto &cols : subsets(b.col, m)) {
        Monomial diag;
        for (int i = 0; i < m; ++i)
          diag = diag * Monomial::var(VarId::z(rows[static_cast<size_t>(i)],
                                               cols[static_cast<size_t>(i)]));
        lts.push_back(diag);
      }
  }
  return MonomialIdeal(std::move(lts));
}

DiagonalGBVerdict verify_diagonal_gb(const Perm &pi, const TermOrder &ord, const Budget &budget) {
  DiagonalGBVerdict v;
  v.vexillary = pi.is_vexillary();
  v.witness = check_groebner(schubert_ideal(pi), ord, budget);
  v.is_gb = v.witness.is_gb;
  return v;
}

}  // namespace vexil
