#include "vexil/subword.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vexil/numeric.hpp"

namespace vexil {

namespace {

void ensure(bool cond, const char *msg) {
  if (!cond) throw std::logic_error(std::string("invariant violated: ") + msg);
}

void check_word(const Word &w) {
  ensure(w.letters.size() == w.boxes.size(), "letters and boxes run parallel");
  std::set<Box> seen(w.boxes.begin(), w.boxes.end());
  ensure(seen.size() == w.boxes.size(), "word boxes are distinct");
  for (int l : w.letters) ensure(l >= 1 && l + 1 <= w.ambient, "letters fit the ambient group");
}

// u s_i if that is longer, else u.
Perm hecke_right(const Perm &u, int i) {
  Perm v = u.n() > i ? u : u.embed(i + 1);
  return v(i) < v(i + 1) ? v.swap_positions(i, i + 1) : v;
}

// s_i u if that is longer, else u.
Perm hecke_left(int i, const Perm &u) {
  Perm v = u.n() > i ? u : u.embed(i + 1);
  Perm vi = v.inverse();
  return vi(i) < vi(i + 1) ? vi.swap_positions(i, i + 1).inverse() : v;
}

Perm hecke_mul(Perm u, const Perm &v) {
  for (int i : reduced_word(v)) u = hecke_right(u, i);
  return u;
}

void check_cap(const Word &w, int max_word) {
  if (w.size() > max_word) {
    std::ostringstream os;
    os << "face enumeration budget: word length " << w.size() << " exceeds cap " << max_word;
    throw BudgetExhausted(os.str());
  }
}

}  // namespace

Word word_of_mu(const Perm &pi) {
  ensure(pi.is_vexillary(), "word of mu requires a vexillary permutation");
  auto mu = pi.mu();
  int k = static_cast<int>(mu.size());
  ensure(k == pi.max_descent(), "mu has exactly max-descent many rows");
  Word w;
  for (int p = k; p >= 1; --p)
    for (int q = mu[static_cast<size_t>(p) - 1]; q >= 1; --q) {
      w.letters.push_back(k - p + q);
      w.boxes.push_back({p, q});
    }
  w.ambient = k == 0 ? 1 : k + mu[0];
  check_word(w);
  return w;
}

Word rectangle_word(int k, int N) {
  ensure(k >= 0 && N >= 0, "rectangle dimensions are nonnegative");
  Word w;
  for (int p = k; p >= 1; --p)
    for (int q = N; q >= 1; --q) {
      w.letters.push_back(k - p + q);
      w.boxes.push_back({p, q});
    }
  w.ambient = (k == 0 || N == 0) ? 1 : k + N;
  check_word(w);
  return w;
}

Word staircase_word(int n) {
  ensure(n >= 1, "staircase needs n >= 1");
  Word w;
  for (int p = 1; p <= n - 1; ++p)
    for (int q = n - p; q >= 1; --q) {
      w.letters.push_back(p + q - 1);
      w.boxes.push_back({p, q});
    }
  w.ambient = n;
  check_word(w);
  return w;
}

Perm demazure_product(const Word &w) {
  Perm u = Perm::identity(w.ambient);
  for (int i : w.letters) u = hecke_right(u, i);
  return u;
}

std::vector<int> reduced_word(const Perm &p) {
  std::vector<int> out;
  Perm v = p;
  for (;;) {
    int i = 0;
    for (int j = 1; j < v.n(); ++j)
      if (v(j) > v(j + 1)) {
        i = j;
        break;
      }
    if (i == 0) break;
    out.push_back(i);
    v = v.swap_positions(i, i + 1);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Perm &u, const Perm &v) {
  int m = std::max(u.n(), v.n());
  RankArray ru(u.embed(m)), rv(v.embed(m));
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q)
      if (ru(p, q) < rv(p, q)) return false;
  return true;
}

bool contains(const Word &w, const Perm &rho) { return bruhat_leq(rho, demazure_product(w)); }

SubwordComplex gamma_complex(const Perm &pi) {
  auto g = pi.grassmannianize();
  return {word_of_mu(pi), g.pi_tilde};
}

SubwordComplex rectangle_complex(const Perm &grassmannian) {
  ensure(grassmannian.is_grassmannian(), "rectangle complex wants a Grassmannian target");
  auto g = grassmannian.grassmannianize();
  ensure(g.steps.empty(), "a Grassmannian permutation is its own endpoint");
  return {rectangle_word(g.k, g.N), g.pi_tilde};
}

SubwordComplex staircase_complex(const Perm &pi) { return {staircase_word(pi.n()), pi}; }

namespace {

struct FaceSearch {
  const Word &word;
  Perm rho;
  int m;
  std::vector<Perm> suffix;  // suffix[i] = Demazure product of letters i..end
  std::vector<std::set<Box>> out;
  std::vector<Box> chosen;

  FaceSearch(const SubwordComplex &c, int max_word) : word(c.word), rho(c.target) {
    check_cap(word, max_word);
    m = std::max(word.ambient, rho.n());
    rho = rho.embed(m);
    suffix.assign(static_cast<size_t>(word.size()) + 1, Perm::identity(m));
    for (int i = word.size() - 1; i >= 0; --i)
      suffix[static_cast<size_t>(i)] =
          hecke_left(word.letters[static_cast<size_t>(i)], suffix[static_cast<size_t>(i) + 1]);
  }

  void record() { out.emplace_back(chosen.begin(), chosen.end()); }

  // Reduced subwords representing rho.
  void facets_dfs(int i, const Perm &u) {
    Perm rest = u.inverse() * rho;
    if (u.length() + rest.length() != rho.length()) return;
    if (!bruhat_leq(rest, suffix[static_cast<size_t>(i)])) return;
    if (i == word.size()) {
      ensure(u == rho, "exhausted prefix below rho ends at rho");
      record();
      return;
    }
    int l = word.letters[static_cast<size_t>(i)];
    if (u(l) < u(l + 1)) {
      chosen.push_back(word.boxes[static_cast<size_t>(i)]);
      facets_dfs(i + 1, u.swap_positions(l, l + 1));
      chosen.pop_back();
    }
    facets_dfs(i + 1, u);
  }

  // Subwords whose Demazure product equals rho.
  void interior_dfs(int i, const Perm &u) {
    if (!bruhat_leq(u, rho)) return;
    if (!bruhat_leq(rho, hecke_mul(u, suffix[static_cast<size_t>(i)]))) return;
    if (i == word.size()) {
      if (u == rho) record();
      return;
    }
    int l = word.letters[static_cast<size_t>(i)];
    chosen.push_back(word.boxes[static_cast<size_t>(i)]);
    interior_dfs(i + 1, hecke_right(u, l));
    chosen.pop_back();
    interior_dfs(i + 1, u);
  }
};

}  // namespace

std::vector<std::set<Box>> facets(const SubwordComplex &c, int max_word) {
  FaceSearch fs(c, max_word);
  fs.facets_dfs(0, Perm::identity(fs.m));
  std::sort(fs.out.begin(), fs.out.end());
  return fs.out;
}

std::vector<std::set<Box>> interior_faces(const SubwordComplex &c, int max_word) {
  FaceSearch fs(c, max_word);
  fs.interior_dfs(0, Perm::identity(fs.m));
  std::sort(fs.out.begin(), fs.out.end());
  return fs.out;
}

MonomialIdeal stanley_reisner(const SubwordComplex &c, const std::function<VarId(Box)> &var_of,
                              int max_word) {
  auto facs = facets(c, max_word);
  if (facs.empty()) return MonomialIdeal({Monomial::one()});
  bool first = true;
  MonomialIdeal result;
  for (const auto &P : facs) {
    std::vector<Monomial> gens;
    gens.reserve(P.size());
    for (const Box &b : P) gens.push_back(Monomial::var(var_of(b)));
    MonomialIdeal prime(gens);
    result = first ? prime : result.intersect(prime);
    first = false;
  }
  return result;
}

MonomialIdeal stanley_reisner(const SubwordComplex &c, int max_word) {
  return stanley_reisner(
      c, [](Box b) { return VarId::z(b.row, b.col); }, max_word);
}

namespace {

std::vector<std::set<Box>> shelling_rec(const Perm &pi) {
  ensure(pi.is_vexillary(), "shelling recursion requires a vexillary permutation");
  auto acc = pi.accessible_boxes();
  if (acc.empty()) {
    ensure(pi.is_dominant(), "no accessible box only for dominant permutations");
    auto d = pi.diagram();
    return {std::set<Box>(d.begin(), d.end())};
  }
  Descend d = pi.descend_PC(acc.front());
  std::vector<std::set<Box>> out;
  for (auto S : shelling_rec(d.perm_P)) {
    ensure(S.insert(acc.front()).second, "deletion facets gain the accessible box");
    out.push_back(std::move(S));
  }
  for (auto &S : shelling_rec(d.perm_C)) {
    ensure(S.count(acc.front()) == 0, "cone facets avoid the accessible box");
    out.push_back(std::move(S));
  }
  return out;
}

}  // namespace

std::vector<std::set<Box>> vertex_decompose(const Perm &pi, int max_word) {
  auto shell = shelling_rec(pi);

  auto direct = facets(gamma_complex(pi), max_word);
  auto sorted = shell;
  std::sort(sorted.begin(), sorted.end());
  ensure(sorted == direct, "recursion facets match the direct enumeration");

  for (size_t i = 1; i < shell.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      bool covered = false;
      for (size_t jp = 0; jp < i && !covered; ++jp) {
        std::vector<Box> extra;
        std::set_difference(shell[jp].begin(), shell[jp].end(), shell[i].begin(), shell[i].end(),
                            std::back_inserter(extra));
        if (extra.size() != 1) continue;
        covered = std::all_of(shell[jp].begin(), shell[jp].end(), [&](const Box &b) {
          return shell[i].count(b) > 0 || shell[j].count(b) > 0;
        });
      }
      ensure(covered, "each earlier overlap lies in a codimension-one overlap");
    }
  }
  return shell;
}

std::string PipeDream::ascii() const {
  std::string s;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) s += crosses.count({r, c}) ? '+' : '.';
    s += '\n';
  }
  return s;
}

PipeRouting route_pipes(const PipeDream &d) {
  for (const Box &b : d.crosses)
    ensure(b.row >= 1 && b.row <= d.rows && b.col >= 1 && b.col <= d.cols,
           "crosses lie inside the grid");
  PipeRouting rt;
  rt.south_exit.assign(static_cast<size_t>(d.rows) + 1, 0);
  auto run = [&](int pipe, int r, int c, bool east) {
    while (r <= d.rows && c <= d.cols) {
      Box here{r, c};
      if (d.crosses.count(here)) {
        auto &slot = rt.cross_pipes[here];
        (east ? slot.first : slot.second) = pipe;
      } else {
        auto &slot = rt.elbow_pipes[here];
        (east ? slot.first : slot.second) = pipe;
        east = !east;
      }
      (east ? c : r) += 1;
    }
    if (r > d.rows && pipe <= d.rows) rt.south_exit[static_cast<size_t>(pipe)] = c;
  };
  for (int r = 1; r <= d.rows; ++r) run(r, r, 1, true);
  for (int c = 1; c <= d.cols; ++c) run(d.rows + c, 1, c, false);
  return rt;
}

std::set<Box> absorbable_elbows(const PipeDream &d) {
  PipeRouting rt = route_pipes(d);
  std::map<std::pair<int, int>, std::vector<Box>> crossings;
  for (const auto &[box, pipes] : rt.cross_pipes)
    crossings[std::minmax(pipes.first, pipes.second)].push_back(box);
  std::set<Box> out;
  for (const auto &[box, pipes] : rt.elbow_pipes) {
    auto it = crossings.find(std::minmax(pipes.first, pipes.second));
    if (it == crossings.end()) continue;
    for (const Box &c : it->second)
      if (c.row < box.row && c.col < box.col) {
        out.insert(box);
        break;
      }
  }
  return out;
}

std::vector<std::set<Box>> interior_via_absorbable(const Perm &pi, int max_word) {
  auto g = pi.grassmannianize();
  auto mu = pi.mu();
  auto in_mu = [&](const Box &b) {
    return b.row >= 1 && b.row <= static_cast<int>(mu.size()) &&
           b.col <= mu[static_cast<size_t>(b.row) - 1];
  };
  std::set<std::set<Box>> all;
  for (const auto &P : facets(gamma_complex(pi), max_word)) {
    PipeDream d{g.k, g.N, P};
    std::vector<Box> abs;
    for (const Box &b : absorbable_elbows(d))
      if (in_mu(b)) abs.push_back(b);
    ensure(abs.size() <= 20, "absorbable subset enumeration stays small");
    for (size_t mask = 0; mask < (size_t{1} << abs.size()); ++mask) {
      std::set<Box> face = P;
      for (size_t t = 0; t < abs.size(); ++t)
        if (mask >> t & 1) face.insert(abs[t]);
      all.insert(std::move(face));
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace vexil
