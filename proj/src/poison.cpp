#include "vexil/poison.hpp"

#include <algorithm>
#include <stdexcept>

#include "vexil/detideal.hpp"

namespace vexil {

namespace {

void ensure(bool ok, const char *msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::vector<std::vector<int>> index_sets(int limit, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, int next) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    int missing = size - static_cast<int>(cur.size());
    for (int v = next; v <= limit - missing + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

void minors_at(const Perm &pi, int p, int q, std::vector<MinorSpec> &out) {
  int size = 1 + pi.rank(p, q);
  if (size > std::min(p, q)) return;
  for (const auto &rows : index_sets(p, size))
    for (const auto &cols : index_sets(q, size)) out.push_back({rows, cols});
}

}  // namespace

Diagonal::Diagonal(std::vector<Box> b) : boxes(std::move(b)) {
  for (const Box &bx : boxes) ensure(bx.row >= 1 && bx.col >= 1, "diagonal box out of grid");
  for (size_t i = 1; i < boxes.size(); ++i)
    ensure(boxes[i - 1].row < boxes[i].row && boxes[i - 1].col < boxes[i].col,
           "diagonal must increase in rows and columns");
}

Monomial Diagonal::product() const {
  Monomial m;
  for (const Box &b : boxes) m = m * Monomial::var(VarId::z(b.row, b.col));
  return m;
}

Diagonal MinorSpec::main_diagonal() const {
  ensure(rows.size() == cols.size(), "minor needs equal row and column counts");
  std::vector<Box> b;
  b.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) b.push_back({rows[i], cols[i]});
  return Diagonal(std::move(b));
}

PipeDream cross_diagram(const Perm &pi) {
  PipeDream pd;
  pd.rows = pd.cols = pi.n();
  for (const Box &b : pi.diagram()) pd.crosses.insert(b);
  return pd;
}

std::vector<MinorSpec> essential_minors(const Perm &pi) {
  std::vector<MinorSpec> out;
  for (const Box &e : pi.essential()) minors_at(pi, e.row, e.col, out);
  return out;
}

std::vector<MinorSpec> grid_minors(const Perm &pi) {
  std::vector<MinorSpec> out;
  for (int p = 1; p <= pi.n(); ++p)
    for (int q = 1; q <= pi.n(); ++q) minors_at(pi, p, q, out);
  return out;
}

bool poisons(const PipeDream &pd, const Diagonal &d) {
  for (const Box &b : d.boxes)
    if (pd.crosses.count(b)) return true;
  return false;
}

bool poisons(const PipeDream &pd, const MinorSpec &m) { return poisons(pd, m.main_diagonal()); }

int max_unpoisoned_diagonal(const PipeDream &pd, int p, int q) {
  // best[r][c] = longest cross-free chain inside the top-left r x c corner.
  std::vector<std::vector<int>> best(p + 1, std::vector<int>(q + 1, 0));
  for (int r = 1; r <= p; ++r)
    for (int c = 1; c <= q; ++c) {
      int here = pd.crosses.count(Box{r, c}) ? 0 : 1 + best[r - 1][c - 1];
      best[r][c] = std::max({best[r - 1][c], best[r][c - 1], here});
    }
  return best[p][q];
}

bool poisons_essential(const PipeDream &pd, const Perm &pi) {
  for (const Box &e : pi.essential())
    if (max_unpoisoned_diagonal(pd, e.row, e.col) > pi.rank(e.row, e.col)) return false;
  return true;
}

Minimality is_minimal_poisoning(const PipeDream &pd, const Perm &pi) {
  ensure(poisons_essential(pd, pi), "pipe dream must poison every essential minor");
  for (const Box &c : pd.crosses) {
    PipeDream less = pd;
    less.crosses.erase(c);
    if (poisons_essential(less, pi)) return {false, c};
  }
  return {true, std::nullopt};
}

bool diagonal_divisibility(const Perm &pi) {
  MonomialIdeal diag = diagonal_terms(pi);
  for (const MinorSpec &m : grid_minors(pi))
    if (!diag.contains(m.main_diagonal().product())) return false;
  return true;
}

SharpnessCertificate sharpness_certificate(const Perm &pi) {
  ensure(!pi.is_vexillary(), "sharpness certificate needs a non-vexillary permutation");
  // Diagram boxes whose strict northwest region holds a descent of dots, i.e.
  // two dots in antidiagonal position.
  std::vector<Box> cands;
  for (const Box &b : pi.diagram()) {
    bool anti = false;
    for (int i = 1; i < b.row && !anti; ++i) {
      if (pi(i) >= b.col) continue;
      for (int k = i + 1; k < b.row && !anti; ++k)
        if (pi(k) < pi(i)) anti = true;
    }
    if (anti) cands.push_back(b);
  }
  if (cands.empty()) throw std::logic_error("non-vexillary diagram must contain a candidate box");
  // A maximally northwest candidate is removable.
  std::vector<Box> maximal;
  for (const Box &c : cands) {
    bool dominated = false;
    for (const Box &o : cands)
      if (o != c && o.row <= c.row && o.col <= c.col) dominated = true;
    if (!dominated) maximal.push_back(c);
  }
  std::sort(maximal.begin(), maximal.end());
  PipeDream pd = cross_diagram(pi);
  pd.crosses.erase(maximal.front());
  if (!poisons_essential(pd, pi))
    throw std::logic_error("removing the candidate cross must keep the poisoning");
  // Explicit containment: each essential diagonal term lies in the ideal of
  // the surviving cross variables.
  std::vector<Monomial> vars;
  for (const Box &c : pd.crosses) vars.push_back(Monomial::var(VarId::z(c.row, c.col)));
  MonomialIdeal cross_ideal(vars);
  for (const MinorSpec &m : essential_minors(pi))
    if (!cross_ideal.contains(m.main_diagonal().product()))
      throw std::logic_error("poisoning must cover every essential diagonal term");
  return {pi, pi.length(), {pd.crosses.begin(), pd.crosses.end()},
          static_cast<int>(pd.crosses.size())};
}

}  // namespace vexil
