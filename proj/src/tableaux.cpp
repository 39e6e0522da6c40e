#include "vexil/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vexil {

namespace {

void ensure(bool ok, const char *what) {
  if (!ok) throw std::logic_error(std::string("invariant violated: ") + what);
}

void check_shape(const std::vector<int> &shape) {
  for (size_t i = 0; i < shape.size(); ++i) {
    ensure(shape[i] > 0, "shape parts must be positive");
    if (i) ensure(shape[i] <= shape[i - 1], "shape must weakly decrease");
  }
}

}  // namespace

int SetValuedTableau::excess() const {
  int total = 0;
  for (const auto &[b, s] : cells) total += static_cast<int>(s.size());
  return total - static_cast<int>(cells.size());
}

bool SetValuedTableau::single_valued() const { return excess() == 0; }

const std::set<int> &SetValuedTableau::at(int r, int c) const {
  auto it = cells.find(Box{r, c});
  ensure(it != cells.end(), "tableau box out of shape");
  return it->second;
}

std::string SetValuedTableau::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < shape.size(); ++r) {
    for (int c = 1; c <= shape[r]; ++c) {
      if (c > 1) os << ' ';
      const auto &s = at(static_cast<int>(r) + 1, c);
      bool first = true;
      for (int v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string semistandard_violation(const SetValuedTableau &t) {
  check_shape(t.shape);
  int boxes = 0;
  for (int p : t.shape) boxes += p;
  ensure(static_cast<int>(t.cells.size()) == boxes, "tableau must fill its shape exactly");
  auto tag = [](Box b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
  };
  for (const auto &[b, s] : t.cells) {
    ensure(!s.empty(), "tableau boxes must be nonempty");
    ensure(*s.begin() >= 1, "tableau entries must be positive");
    ensure(b.row >= 1 && b.row <= static_cast<int>(t.shape.size()) && b.col >= 1 &&
               b.col <= t.shape[static_cast<size_t>(b.row) - 1],
           "tableau box out of shape");
    if (b.col > 1) {
      const auto &left = t.at(b.row, b.col - 1);
      if (*left.rbegin() > *s.begin())
        return "row " + std::to_string(b.row) + " decreases between " + tag({b.row, b.col - 1}) +
               " and " + tag(b);
    }
    if (b.row > 1 && b.col <= t.shape[static_cast<size_t>(b.row) - 2]) {
      const auto &up = t.at(b.row - 1, b.col);
      if (*up.rbegin() >= *s.begin())
        return "column " + std::to_string(b.col) + " fails to increase between " +
               tag({b.row - 1, b.col}) + " and " + tag(b);
    }
  }
  return "";
}

bool is_semistandard(const SetValuedTableau &t) { return semistandard_violation(t).empty(); }

bool respects_flag(const SetValuedTableau &t, const std::vector<int> &flag) {
  ensure(flag.size() >= t.shape.size(), "flag shorter than shape");
  for (const auto &[b, s] : t.cells)
    if (*s.rbegin() > flag[static_cast<size_t>(b.row) - 1]) return false;
  return true;
}

std::vector<SetValuedTableau> flagged_tableaux(const std::vector<int> &shape,
                                               const std::vector<int> &flag, bool set_valued) {
  check_shape(shape);
  ensure(flag.size() >= shape.size(), "flag shorter than shape");
  for (size_t i = 0; i < flag.size(); ++i) {
    ensure(flag[i] >= 1, "flag entries must be positive");
    if (i) ensure(flag[i] >= flag[i - 1], "flag must weakly increase");
  }

  std::vector<Box> order;
  for (size_t r = 0; r < shape.size(); ++r)
    for (int c = 1; c <= shape[r]; ++c) order.push_back({static_cast<int>(r) + 1, c});

  std::vector<SetValuedTableau> out;
  SetValuedTableau cur;
  cur.shape = shape;

  auto rec = [&](auto &&self, size_t idx) -> void {
    if (idx == order.size()) {
      ensure(is_semistandard(cur), "enumeration produced a non-semistandard filling");
      out.push_back(cur);
      return;
    }
    Box b = order[idx];
    int lo = 1;
    if (b.col > 1) lo = std::max(lo, *cur.at(b.row, b.col - 1).rbegin());
    if (b.row > 1) lo = std::max(lo, *cur.at(b.row - 1, b.col).rbegin() + 1);
    int hi = flag[static_cast<size_t>(b.row) - 1];
    if (lo > hi) return;
    int w = hi - lo + 1;
    auto &slot = cur.cells[b];
    if (set_valued) {
      for (unsigned mask = 1; mask < (1u << w); ++mask) {
        slot.clear();
        for (int i = 0; i < w; ++i)
          if (mask >> i & 1) slot.insert(lo + i);
        self(self, idx + 1);
      }
    } else {
      for (int v = lo; v <= hi; ++v) {
        slot = {v};
        self(self, idx + 1);
      }
    }
    cur.cells.erase(b);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetValuedTableau> flagged_tableaux(const Perm &pi, bool set_valued) {
  ensure(pi.is_vexillary(), "flagged tableaux need a vexillary permutation");
  return flagged_tableaux(pi.lambda(), pi.flag(), set_valued);
}

PipeDream omega(const SetValuedTableau &t, int k, int N) {
  ensure(semistandard_violation(t).empty(), "omega needs a semistandard tableau");
  PipeDream d;
  d.rows = k;
  d.cols = N;
  for (const auto &[b, s] : t.cells)
    for (int v : s) {
      Box cross{v, v + b.col - b.row};
      ensure(cross.row >= 1 && cross.row <= k && cross.col >= 1 && cross.col <= N,
             "omega cross leaves the grid");
      ensure(d.crosses.insert(cross).second, "omega crosses collide");
    }
  return d;
}

SetValuedTableau omega_inverse(const PipeDream &d, const std::vector<int> &shape,
                               const std::optional<std::vector<int>> &flag) {
  check_shape(shape);
  // Boxes and crosses per diagonal c - r; boxes northwest-first.
  std::map<int, std::vector<Box>> diag_boxes;
  for (size_t r = 0; r < shape.size(); ++r)
    for (int c = 1; c <= shape[r]; ++c)
      diag_boxes[c - static_cast<int>(r) - 1].push_back({static_cast<int>(r) + 1, c});
  std::map<int, std::vector<int>> diag_rows;
  for (Box b : d.crosses) diag_rows[b.col - b.row].push_back(b.row);
  for (auto &[dg, rows] : diag_rows)
    if (!diag_boxes.count(dg))
      throw std::logic_error("invariant violated: cross on a diagonal missing from the shape");

  std::vector<std::pair<std::vector<Box>, std::vector<int>>> diags;
  for (auto &[dg, bs] : diag_boxes) {
    auto &rows = diag_rows[dg];
    std::sort(rows.begin(), rows.end());
    ensure(rows.size() >= bs.size(), "too few crosses on a diagonal");
    diags.emplace_back(bs, rows);
  }

  std::vector<SetValuedTableau> found;
  SetValuedTableau cur;
  cur.shape = shape;
  // Split each diagonal's sorted cross rows into consecutive nonempty blocks.
  auto rec = [&](auto &&self, size_t di) -> void {
    if (di == diags.size()) {
      if (!is_semistandard(cur)) return;
      if (flag && !respects_flag(cur, *flag)) return;
      found.push_back(cur);
      return;
    }
    const auto &[bs, rows] = diags[di];
    size_t t = bs.size(), m = rows.size();
    std::vector<size_t> cuts(t + 1);
    cuts[0] = 0;
    cuts[t] = m;
    // Choose the internal cuts 1..t-1; block i is rows[cuts[i]..cuts[i+1]).
    auto place = [&](auto &&go, size_t bi) -> void {
      if (bi == t) {
        for (size_t i = 0; i < t; ++i)
          cur.cells[bs[i]] = std::set<int>(rows.begin() + static_cast<long>(cuts[i]),
                                           rows.begin() + static_cast<long>(cuts[i + 1]));
        self(self, di + 1);
        for (const Box &b : bs) cur.cells.erase(b);
        return;
      }
      for (size_t nxt = cuts[bi - 1] + 1; nxt + (t - bi) <= m; ++nxt) {
        cuts[bi] = nxt;
        go(go, bi + 1);
      }
    };
    place(place, 1);
  };
  rec(rec, 0);
  ensure(!found.empty(), "no semistandard redistribution of the crosses");
  ensure(found.size() == 1, "cross redistribution is not unique");
  return found[0];
}

}  // namespace vexil
