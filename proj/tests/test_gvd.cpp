#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vexil/detideal.hpp"
#include "vexil/gvd.hpp"
#include "vexil/subword.hpp"

using namespace vexil;

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Poly box_product(const std::set<Box> &s) {
  Poly p = Poly::constant(1);
  for (Box b : s) p = p * Poly::var(VarId::z(b.row, b.col));
  return p;
}

// Minimal nonfaces of the complex with the given facets, over the given
// ground set (a nonface all of whose proper subsets are faces).
std::vector<Poly> sr_gens(const std::vector<Box> &ground, const std::vector<std::set<Box>> &fac) {
  int n = static_cast<int>(ground.size());
  auto is_face = [&](unsigned mask) {
    for (const auto &f : fac) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if ((mask >> i & 1) && !f.count(ground[i])) inside = false;
      if (inside) return true;
    }
    return false;
  };
  std::vector<Poly> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (is_face(mask)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i)
      if ((mask >> i & 1) && !is_face(mask & ~(1u << i))) minimal = false;
    if (!minimal) continue;
    std::set<Box> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(ground[i]);
    out.push_back(box_product(s));
  }
  return out;
}

// Facets of the complex as vertex sets (the reported cross sets are the
// complements within the word's boxes).
std::vector<std::set<Box>> simplicial_facets(const SubwordComplex &c) {
  std::vector<std::set<Box>> out;
  for (const auto &crosses : facets(c)) {
    std::set<Box> f;
    for (Box b : c.word.boxes)
      if (!crosses.count(b)) f.insert(b);
    out.push_back(f);
  }
  return out;
}

// The degenerate decomposition at the monomial level, choosing accessible
// boxes by the given strategy; dominant leaves contribute their diagram
// variables. Every strategy must rebuild the diagonal term ideal.
MonomialIdeal rebuild(const Perm &p, int mode, std::mt19937 &rng) {
  if (p.is_dominant()) return diagonal_terms(p);
  auto acc = p.accessible_boxes();
  Box b = mode == 0 ? acc.front() : mode == 1 ? acc.back() : acc[rng() % acc.size()];
  auto d = p.descend_PC(b);
  MonomialIdeal at_y({Monomial::var(VarId::z(b.row, b.col))});
  return rebuild(d.perm_C, mode, rng).intersect(rebuild(d.perm_P, mode, rng).plus(at_y));
}

}  // namespace

TEST_SUITE("gvd") {
  TEST_CASE("hyperbola splits into its asymptote pair") {
    auto s = split_CP({Poly::parse("x1 x2 - 1")}, VarId::x(2), TermOrder::canonical());
    REQUIRE(s.gb.size() == 1);
    CHECK(s.gb[0] == Poly::parse("x1 x2 - 1"));
    CHECK(s.degrees == std::vector<int>{1});
    CHECK(s.I_prime == std::vector<Poly>{Poly::parse("x1 x2")});
    CHECK(ideal_equal(s.C, {Poly::parse("x1")}));
    CHECK(ideal_equal(s.P, {Poly::parse("x2")}));
    CHECK(s.is_gvd);
    // The series comparison needs a homogeneous ideal.
    CHECK_THROWS_AS(hilbert_check(s), std::invalid_argument);
  }

  TEST_CASE("hyperbola union axes degenerates non-geometrically") {
    auto gens = intersect_ideals({Poly::parse("x1 x2 - 1")},
                                 {Poly::parse("x1"), Poly::parse("x2")});
    CHECK(ideal_equal(gens, {Poly::parse("x1 x2^2 - x2"), Poly::parse("x1^2 x2 - x1")}));
    auto s = split_CP(gens, VarId::x(2), TermOrder::canonical());
    CHECK(ideal_equal(s.I_prime, {Poly::parse("x1 x2^2"), Poly::parse("x1^2 x2")}));
    CHECK(ideal_equal(s.C, {Poly::parse("x1")}));
    CHECK(ideal_equal(s.P, {Poly::parse("x2")}));
    // <x1 x2^2, x1^2 x2> is strictly inside <x1> cap <x2> = <x1 x2>.
    CHECK_FALSE(s.is_gvd);
    auto d = s.degrees;
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 2});
    CHECK_THROWS_AS(hilbert_check(s), std::invalid_argument);
  }

  TEST_CASE("hilbert series detect the failed monomial split") {
    auto s = split_CP({Poly::parse("x2^2 x1"), Poly::parse("x2 x1^2")}, VarId::x(2),
                      TermOrder::canonical());
    CHECK_FALSE(s.is_gvd);
    auto hc = hilbert_check(s);
    CHECK_FALSE(hc.equal);
    CHECK(hc.num_I == std::vector<Int>{1, 0, 0, -2, 1});
    CHECK(hc.num_C == std::vector<Int>{1, -1});
    CHECK(hc.num_P == std::vector<Int>{1, -1});
  }

  TEST_CASE("a split variable absent from the ideal is trivially geometric") {
    auto s = split_CP({Poly::parse("x1")}, VarId::x(2), TermOrder::canonical());
    CHECK(s.degrees == std::vector<int>{0});
    CHECK(ideal_equal(s.I_prime, {Poly::parse("x1")}));
    CHECK(ideal_equal(s.C, {Poly::parse("x1")}));
    CHECK(ideal_equal(s.P, {Poly::parse("x1"), Poly::parse("x2")}));
    CHECK(s.is_gvd);
    auto hc = hilbert_check(s);
    CHECK(hc.equal);
    CHECK(hc.num_I == std::vector<Int>{1, -1});
    CHECK(hc.num_P == std::vector<Int>{1, -2, 1});
    CHECK(hc.num_C == std::vector<Int>{1, -1});
  }

  TEST_CASE("stanley-reisner splits are deletion and star") {
    // Splitting a squarefree monomial ideal at a vertex leaves it unchanged
    // (I' = I) and decomposes the complex: C cuts out the star of the
    // vertex, P the deletion.
    struct Case {
      Perm pi;
      Box v;
    };
    for (const auto &[pi, v] : {Case{Perm({4, 1, 3, 2, 5}), {2, 1}},
                                Case{Perm({1, 4, 3, 2}), {1, 1}}}) {
      auto c = gamma_complex(pi);
      auto fac = simplicial_facets(c);
      std::vector<Poly> I = sr_gens(c.word.boxes, fac);
      // The helper agrees with the library's Stanley-Reisner ideal.
      MonomialIdeal sr = stanley_reisner(c);
      std::vector<Poly> lib;
      for (const Monomial &m : sr.gens()) lib.push_back(Poly(m));
      CHECK(ideal_equal(I, lib));

      VarId y = VarId::z(v.row, v.col);
      auto s = split_CP(I, y, diagonal_order(pi.n()));
      CHECK(s.is_gvd);
      CHECK(*std::max_element(s.degrees.begin(), s.degrees.end()) <= 1);
      CHECK(ideal_equal(s.I_prime, I));

      std::vector<std::set<Box>> star, del;
      for (const auto &f : fac)
        if (f.count(v)) star.push_back(f);
      for (auto f : fac) {
        f.erase(v);
        bool maximal = true;
        for (const auto &g : fac)
          if (!g.count(v) && g != f && std::includes(g.begin(), g.end(), f.begin(), f.end()))
            maximal = false;
        if (maximal && !std::count(del.begin(), del.end(), f)) del.push_back(f);
      }
      std::vector<Box> ground_minus_v;
      for (Box b : c.word.boxes)
        if (!(b == v)) ground_minus_v.push_back(b);
      CHECK(ideal_equal(s.C, sr_gens(c.word.boxes, star)));
      std::vector<Poly> del_plus_y = sr_gens(ground_minus_v, del);
      del_plus_y.push_back(Poly::var(y));
      CHECK(ideal_equal(s.P, del_plus_y));
    }
  }

  TEST_CASE("schubert step identifies the two descent ideals") {
    auto st = gvd_step_schubert(Perm({4, 1, 3, 2, 5}), {3, 2});
    CHECK(st.box == Box{3, 2});
    CHECK(st.pi_P == Perm({4, 1, 2, 3, 5}));
    CHECK(st.pi_C == Perm({4, 2, 1, 3, 5}));
    CHECK(st.split.y == VarId::z(3, 2));
    CHECK(st.split.is_gvd);
    CHECK(st.hilbert_equal);
    CHECK(ideal_equal(st.split.C, schubert_ideal(Perm({4, 2, 1, 3, 5}))));
    auto p_side = schubert_ideal(Perm({4, 1, 2, 3, 5}));
    p_side.push_back(Poly::var(VarId::z(3, 2)));
    CHECK(ideal_equal(st.split.P, p_side));
  }

  TEST_CASE("grassmannian steps stay vexillary") {
    // A nonidentity grassmannian permutation has a single accessible box.
    CHECK(Perm({1, 3, 5, 2, 4}).accessible_boxes() == std::vector<Box>{{3, 4}});
    auto a = gvd_step_schubert(Perm({1, 3, 5, 2, 4}), {3, 4});
    CHECK(a.pi_P == Perm({1, 3, 4, 2, 5}));
    CHECK(a.pi_C == Perm({1, 4, 3, 2, 5}));
    CHECK(a.pi_P.is_vexillary());
    CHECK(a.pi_C.is_vexillary());

    CHECK(Perm({1, 3, 6, 2, 4, 5}).accessible_boxes() == std::vector<Box>{{3, 5}});
    auto b = gvd_step_schubert(Perm({1, 3, 6, 2, 4, 5}), {3, 5});
    CHECK(b.pi_P == Perm({1, 3, 5, 2, 4, 6}));
    CHECK(b.pi_C == Perm({1, 5, 3, 2, 4, 6}));
    CHECK(b.pi_P.is_vexillary());
    CHECK(b.pi_C.is_vexillary());
  }

  TEST_CASE("a large step pins the cone permutation") {
    auto st = gvd_step_schubert(Perm({8, 7, 1, 6, 2, 9, 5, 3, 4}), {7, 4});
    CHECK(st.pi_C == Perm({8, 7, 1, 6, 4, 9, 2, 3, 5}));
    CHECK(st.pi_P == Perm({8, 7, 1, 6, 2, 9, 4, 3, 5}));
    CHECK(st.split.is_gvd);
    CHECK(st.hilbert_equal);
  }

  TEST_CASE("iterated decomposition reaches the diagonal term ideal") {
    auto tr = iterate_gvd(Perm({4, 1, 3, 2, 5}));
    REQUIRE(tr.steps.size() == 1);
    CHECK(tr.steps[0].box == Box{3, 2});
    CHECK(tr.final_monomial ==
          MonomialIdeal({Monomial::var(VarId::z(1, 1)), Monomial::var(VarId::z(1, 2)),
                         Monomial::var(VarId::z(1, 3)),
                         Monomial::var(VarId::z(2, 1)) * Monomial::var(VarId::z(3, 2))}));
    CHECK(tr.final_monomial == diagonal_terms(Perm({4, 1, 3, 2, 5})));

    auto id = iterate_gvd(Perm::identity(4));
    CHECK(id.steps.empty());
    CHECK(id.final_monomial.is_zero());

    auto t2 = iterate_gvd(Perm({1, 4, 3, 2}));
    CHECK(t2.steps.size() == 4);
    CHECK(t2.final_monomial.is_squarefree());
    CHECK(t2.final_monomial.minimal_primes().size() == 5);
    CHECK(t2.final_monomial == diagonal_terms(Perm({1, 4, 3, 2})));
  }

  TEST_CASE("every vexillary trace in s4 terminates correctly") {
    for (const Perm &p : all_perms(4)) {
      if (!p.is_vexillary()) continue;
      auto tr = iterate_gvd(p);
      CHECK(tr.final_monomial == diagonal_terms(p));
      for (const auto &st : tr.steps) {
        CHECK(st.split.is_gvd);
        CHECK(st.hilbert_equal);
      }
    }
  }

  TEST_CASE("the monomial limit is independent of the box order") {
    std::mt19937 rng(17);
    for (const Perm &p : all_perms(5)) {
      if (!p.is_vexillary()) continue;
      for (int mode : {0, 1, 2}) CHECK(rebuild(p, mode, rng) == diagonal_terms(p));
    }
  }

  TEST_CASE("budgets propagate out of the degeneration") {
    Budget tiny;
    tiny.max_pairs = 1;
    CHECK_THROWS_AS(
        split_CP(schubert_ideal(Perm({4, 1, 3, 2, 5})), VarId::z(3, 2), diagonal_order(5), tiny),
        BudgetExhausted);
  }
}
