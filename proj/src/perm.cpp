#include "vexil/perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vexil {

namespace {
void ensure(bool cond, const char *msg) {
  if (!cond) throw std::logic_error(std::string("invariant violated: ") + msg);
}
}  // namespace

RankArray::RankArray(const Perm &p) : n_(p.n()), r_(static_cast<size_t>(n_ + 1) * (n_ + 1), 0) {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      r_[static_cast<size_t>(i) * (n_ + 1) + j] =
          r_[static_cast<size_t>(i - 1) * (n_ + 1) + j] + (p(i) <= j ? 1 : 0);
}

RankArray::RankArray(int n, std::vector<int> table) : n_(n), r_(std::move(table)) {
  if (r_.size() != static_cast<size_t>(n + 1) * (n + 1))
    throw std::invalid_argument("RankArray: wrong table size");
}

std::optional<Perm> RankArray::reconstruct(const RankArray &r) {
  int n = r.n();
  std::vector<int> w(static_cast<size_t>(n), 0);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  for (int p = 0; p <= n; ++p)
    if (r(p, 0) != 0) return std::nullopt;
  for (int q = 0; q <= n; ++q)
    if (r(0, q) != 0) return std::nullopt;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      int d = r(p, q) - r(p - 1, q) - r(p, q - 1) + r(p - 1, q - 1);
      if (d != 0 && d != 1) return std::nullopt;
      if (d == 1) {
        if (w[static_cast<size_t>(p) - 1] != 0 || used[static_cast<size_t>(q)])
          return std::nullopt;
        w[static_cast<size_t>(p) - 1] = q;
        used[static_cast<size_t>(q)] = true;
      }
    }
  for (int v : w)
    if (v == 0) return std::nullopt;
  Perm perm(w);
  if (!(RankArray(perm) == r)) return std::nullopt;
  return perm;
}

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  if (w_.empty()) throw std::invalid_argument("Perm: empty one-line notation");
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n() || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Perm: not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i) - 1] = i;
  return Perm(w);
}

Perm Perm::w0(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i) - 1] = n + 1 - i;
  return Perm(w);
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.w_[static_cast<size_t>(a) - 1], p.w_[static_cast<size_t>(b) - 1]);
  return p;
}

std::string Perm::str() const {
  std::ostringstream os;
  for (int i = 1; i <= n(); ++i) os << (i > 1 ? " " : "") << (*this)(i);
  return os.str();
}

Perm Perm::inverse() const {
  std::vector<int> w(w_.size());
  for (int i = 1; i <= n(); ++i) w[static_cast<size_t>((*this)(i)) - 1] = i;
  return Perm(w);
}

Perm Perm::operator*(const Perm &o) const {
  int m = std::max(n(), o.n());
  Perm a = embed(m), b = o.embed(m);
  std::vector<int> w(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) w[static_cast<size_t>(i) - 1] = a(b(i));
  return Perm(w);
}

Perm Perm::swap_positions(int a, int b) const {
  int m = std::max({n(), a, b});
  Perm p = embed(m);
  std::swap(p.w_[static_cast<size_t>(a) - 1], p.w_[static_cast<size_t>(b) - 1]);
  return p;
}

Perm Perm::embed(int m) const {
  if (m < n()) throw std::invalid_argument("Perm::embed: shrinking");
  std::vector<int> w = w_;
  for (int i = n() + 1; i <= m; ++i) w.push_back(i);
  return Perm(w);
}

Perm Perm::reduced() const {
  std::vector<int> w = w_;
  while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
  return Perm(w);
}

int Perm::length() const {
  int l = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if ((*this)(i) > (*this)(j)) ++l;
  return l;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<int> Perm::descents() const {
  std::vector<int> d;
  for (int i = 1; i < n(); ++i)
    if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
  return d;
}

int Perm::max_descent() const {
  auto d = descents();
  return d.empty() ? 0 : d.back();
}

int Perm::rank(int p, int q) const {
  int r = 0;
  for (int i = 1; i <= std::min(p, n()); ++i)
    if ((*this)(i) <= q) ++r;
  return r;
}

std::vector<Box> Perm::diagram() const {
  Perm inv = inverse();
  std::vector<Box> d;
  for (int p = 1; p <= n(); ++p)
    for (int q = 1; q <= n(); ++q)
      if ((*this)(p) > q && inv(q) > p) d.push_back({p, q});
  return d;
}

std::vector<Box> Perm::essential() const {
  auto d = diagram();
  std::set<Box> in(d.begin(), d.end());
  std::vector<Box> e;
  for (auto b : d)
    if (!in.count({b.row + 1, b.col}) && !in.count({b.row, b.col + 1})) e.push_back(b);
  return e;
}

std::vector<int> Perm::lambda() const {
  std::map<int, int> rows;
  for (auto b : diagram()) ++rows[b.row];
  std::vector<int> l;
  for (auto &[r, c] : rows) l.push_back(c);
  std::sort(l.rbegin(), l.rend());
  return l;
}

std::vector<int> Perm::mu() const {
  auto ess = essential();
  int maxrow = 0;
  for (auto b : ess) maxrow = std::max(maxrow, b.row);
  std::vector<int> m;
  for (int p = 1; p <= maxrow; ++p) {
    int width = 0;
    for (auto b : ess)
      if (b.row >= p) width = std::max(width, b.col);
    m.push_back(width);
  }
  return m;
}

std::vector<int> Perm::flag() const {
  ensure(is_vexillary(), "flag requires a vexillary permutation");
  auto lam = lambda();
  auto m = mu();
  auto in_mu = [&](int r, int c) {
    return r >= 1 && c >= 1 && r <= static_cast<int>(m.size()) &&
           c <= m[static_cast<size_t>(r) - 1];
  };
  std::vector<int> f;
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i) {
    int li = lam[static_cast<size_t>(i) - 1];
    ensure(in_mu(i, li), "shape is contained in its essential rectangle union");
    int r = i;
    while (in_mu(r + 1, r + 1 + (li - i))) ++r;
    f.push_back(r);
  }
  return f;
}

bool Perm::is_vexillary() const {
  // (1) 2143 pattern avoidance.
  bool pattern_free = true;
  for (int i = 1; i <= n() && pattern_free; ++i)
    for (int j = i + 1; j <= n() && pattern_free; ++j)
      for (int k = j + 1; k <= n() && pattern_free; ++k)
        for (int l = k + 1; l <= n() && pattern_free; ++l)
          if ((*this)(j) < (*this)(i) && (*this)(i) < (*this)(l) && (*this)(l) < (*this)(k))
            pattern_free = false;
  // (2) No essential box strictly northwest of another.
  auto ess = essential();
  bool ess_chain = true;
  for (auto a : ess)
    for (auto b : ess)
      if (a.row < b.row && a.col < b.col) ess_chain = false;
  // (3) At every diagram box the dots strictly northwest of it form a
  // diagonal (rows and columns both increasing).
  bool diag_dots = true;
  for (auto b : diagram()) {
    std::vector<int> cols;  // dots (i, pi(i)) with i < row, pi(i) < col, by row
    for (int i = 1; i < b.row; ++i)
      if ((*this)(i) < b.col) cols.push_back((*this)(i));
    for (size_t t = 1; t < cols.size(); ++t)
      if (cols[t] <= cols[t - 1]) diag_dots = false;
  }
  ensure(pattern_free == ess_chain && ess_chain == diag_dots,
         "the three vexillarity criteria agree");
  return pattern_free;
}

bool Perm::is_dominant() const {
  for (auto b : essential())
    if (rank(b.row, b.col) != 0) return false;
  return true;
}

std::vector<std::vector<Box>> box_components(const std::vector<Box> &boxes) {
  std::set<Box> todo(boxes.begin(), boxes.end());
  std::vector<std::vector<Box>> comps;
  while (!todo.empty()) {
    std::vector<Box> comp, stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
      Box b = stack.back();
      stack.pop_back();
      comp.push_back(b);
      for (Box nb : {Box{b.row + 1, b.col}, Box{b.row - 1, b.col}, Box{b.row, b.col + 1},
                     Box{b.row, b.col - 1}}) {
        auto it = todo.find(nb);
        if (it != todo.end()) {
          todo.erase(it);
          stack.push_back(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<Box> Perm::accessible_boxes() const {
  auto d = diagram();
  auto e = essential();
  std::set<Box> ess(e.begin(), e.end());
  std::vector<Box> acc;
  for (auto b : d) {
    if (rank(b.row, b.col) == 0) continue;
    bool se_free = true;
    for (auto o : d)
      if (o != b && o.row >= b.row && o.col >= b.col) se_free = false;
    if (se_free) {
      ensure(ess.count(b) > 0, "accessible boxes are essential");
      acc.push_back(b);
    }
  }
  return acc;
}

Descend Perm::descend_PC(Box box) const {
  ensure(is_vexillary(), "descend_PC requires a vexillary permutation");
  auto acc = accessible_boxes();
  if (std::find(acc.begin(), acc.end(), box) == acc.end())
    throw std::invalid_argument("descend_PC: box is not accessible");
  const int p = box.row, q = box.col;
  const int piq = inverse()(q), pp = (*this)(p);

  Perm perm_P = swap_positions(p, piq);

  // Rectangle of component boxes weakly northwest of the pivot.
  auto d = diagram();
  std::vector<Box> comp;
  for (auto &c : box_components(d))
    if (std::find(c.begin(), c.end(), box) != c.end()) comp = c;
  std::vector<Box> rect;
  int a = p, b = q;
  for (auto bx : comp)
    if (bx.row <= p && bx.col <= q) {
      rect.push_back(bx);
      a = std::min(a, bx.row);
      b = std::min(b, bx.col);
    }
  ensure(static_cast<int>(rect.size()) == (p - a + 1) * (q - b + 1),
         "boxes weakly northwest of the pivot in its component form a rectangle");
  const int t = a - 1;
  ensure(t >= 1 && (*this)(t) == b - 1, "dot sits just northwest of the rectangle");

  Perm perm_C = perm_P.swap_positions(t, p);

  // (a) P-diagram drops exactly the pivot box.
  {
    auto dp = perm_P.diagram();
    std::vector<Box> expect = d;
    expect.erase(std::remove(expect.begin(), expect.end(), box), expect.end());
    ensure(dp == expect, "P-step diagram loses exactly the pivot box");
  }
  // (b) C-diagram slides the rectangle one step northwest.
  {
    std::set<Box> expect(d.begin(), d.end());
    for (auto bx : rect) expect.erase(bx);
    for (auto bx : rect) expect.insert({bx.row - 1, bx.col - 1});
    auto dc = perm_C.diagram();
    ensure(std::set<Box>(dc.begin(), dc.end()) == expect,
           "C-step diagram slides the rectangle northwest");
  }
  // (c), (d) Rank tables change exactly on the predicted windows.
  {
    for (int i = 1; i <= n(); ++i)
      for (int j = 1; j <= n(); ++j) {
        int bump = (p <= i && i < piq && q <= j && j < pp) ? 1 : 0;
        int dip = (t <= i && i < p && b - 1 <= j && j < q) ? 1 : 0;
        ensure(perm_P.rank(i, j) == rank(i, j) + bump, "P-step rank window");
        ensure(perm_C.rank(i, j) == rank(i, j) + bump - dip, "C-step rank window");
      }
  }
  // (e), (f) Essential sets transform as predicted.
  {
    auto ve = essential(), vp = perm_P.essential(), vc = perm_C.essential();
    std::set<Box> e(ve.begin(), ve.end());
    std::set<Box> ep(vp.begin(), vp.end());
    std::set<Box> ec(vc.begin(), vc.end());
    std::set<Box> base = e;
    base.erase(box);
    for (auto bx : base) ensure(ep.count(bx) > 0, "P-step keeps the other essential boxes");
    for (auto bx : ep)
      ensure(base.count(bx) || bx == Box{p - 1, q} || bx == Box{p, q - 1},
             "P-step adds essential boxes only beside the pivot");
    std::set<Box> expect_c = base;
    expect_c.insert({p - 1, q - 1});
    ensure(ec == expect_c, "C-step essential set is the prediction");
  }
  // (g) Both children stay vexillary.
  ensure(perm_P.is_vexillary() && perm_C.is_vexillary(), "children stay vexillary");

  return {box, perm_P, perm_C, t, Box{a, b}};
}

namespace {

// One inverse C-step anchored at the essential box (h, j) of s0: slide a
// diagram rectangle southeast by exchanging three dots, so that descending
// back at the new accessible box (h+1, j+1) recovers s0. Returns nothing if
// this box does not support a valid step.
std::optional<std::pair<Perm, Box>> chain_step(const Perm &s0, Box hj, const std::vector<int> &lam,
                                               int k) {
  const int h = hj.row, j = hj.col;
  Perm s = s0;
  if (s(h + 1) > j) return std::nullopt;            // dot below must sit weakly left
  if (s.inverse()(j + 1) > h) return std::nullopt;  // dot right must sit weakly above
  const int p = s.inverse()(j + 1);
  for (auto b : s.diagram())
    if (b.row > h && b.col > j) return std::nullopt;  // nothing strictly southeast
  // Northwest-most dot strictly southeast of (h, j), growing the ambient
  // size when none exists yet.
  int c = 0;
  for (int tries = 0; tries < 2 && c == 0; ++tries) {
    for (int r = h + 1; r <= s.n(); ++r)
      if (s(r) > j) {
        c = r;
        break;
      }
    if (c == 0) s = s.embed(s.n() + 1);
  }
  if (c == 0) return std::nullopt;
  for (int r = c + 1; r <= s.n(); ++r)
    if (s(r) > j && s(r) < s(c)) return std::nullopt;  // southeast dots form an antidiagonal

  Perm s2 = s.swap_positions(p, h + 1).swap_positions(h + 1, c);
  if (!s2.is_vexillary() || s2.lambda() != lam || s2.max_descent() != k) return std::nullopt;
  Box acc{h + 1, j + 1};
  auto bs = s2.accessible_boxes();
  if (std::find(bs.begin(), bs.end(), acc) == bs.end()) return std::nullopt;
  if (!(s2.descend_PC(acc).perm_C.reduced() == s.reduced())) return std::nullopt;
  return std::make_pair(s2, acc);
}

}  // namespace

Grassmannianized Perm::grassmannianize() const {
  ensure(is_vexillary(), "grassmannianize requires a vexillary permutation");
  Grassmannianized out{*this, max_descent(), 0, {}};
  Perm sigma = *this;
  const auto lam = lambda();
  const int k = max_descent();
  // Each step pushes a diagram rectangle strictly south, and boxes never
  // leave rows 1..k, so the chain length is bounded.
  const int cap = k * diagram_size() + n() + 8;
  int rounds = 0;
  while (!sigma.is_grassmannian()) {
    ensure(++rounds <= cap, "the chain of inverse C-steps terminates");
    std::optional<std::pair<Perm, Box>> found;
    for (Box hj : sigma.essential()) {
      found = chain_step(sigma, hj, lam, k);
      if (found) break;
    }
    ensure(found.has_value(), "some essential box admits an inverse C-step");
    out.steps.push_back(*found);
    sigma = found->first;
  }
  const int N = k + (lam.empty() ? 0 : lam[0]);
  Perm pt = sigma.reduced();
  ensure(pt.n() <= std::max(N, 1), "Grassmannian form fits in the ambient size");
  out.pi_tilde = N >= pt.n() ? pt.embed(N) : pt;
  out.N = N;
  // Predicted essential data of the Grassmannian form.
  {
    std::set<Box> expect;
    for (auto bx : essential()) expect.insert({k, k - bx.row + bx.col});
    auto et = out.pi_tilde.essential();
    ensure(std::set<Box>(et.begin(), et.end()) == expect,
           "essential boxes of the Grassmannian form sit in row k as predicted");
    for (auto bx : essential())
      ensure(out.pi_tilde.rank(k, k - bx.row + bx.col) == k - bx.row + rank(bx.row, bx.col),
             "essential ranks of the Grassmannian form match the prediction");
  }
  return out;
}

}  // namespace vexil
