#include <algorithm>
#include <vector>

#include "doctest.h"
#include "vexil/detideal.hpp"
#include "vexil/groebner.hpp"
#include "vexil/order.hpp"
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

Monomial mono(const std::string &s) { return Poly::parse(s).terms().begin()->first; }

bool in_list(const std::vector<Poly> &gens, const Poly &f) {
  return std::find(gens.begin(), gens.end(), f) != gens.end();
}

}  // namespace

TEST_SUITE("detideal") {
  TEST_CASE("generic minors expand with leibniz signs") {
    CHECK(generic_minor({2}, {3}) == Poly::parse("z2_3"));
    CHECK(generic_minor({1, 2}, {1, 2}) == Poly::parse("z1_1 z2_2 - z1_2 z2_1"));
    Poly det3 = generic_minor({1, 2, 3}, {1, 2, 3});
    CHECK(det3.size() == 6);
    CHECK(det3.leading(diagonal_order(3)).mono == mono("z1_1 z2_2 z3_3"));
    CHECK(det3.leading(diagonal_order(3)).coef == Rat(1));
    CHECK(det3.leading(antidiagonal_order(3)).mono == mono("z1_3 z2_2 z3_1"));
    CHECK(generic_minor({}, {}) == Poly::constant(1));
  }

  TEST_CASE("corner minors follow the rank function") {
    Perm p({2, 1, 4, 3});
    auto one = corner_minors(p, 1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Poly::parse("z1_1"));
    auto big = corner_minors(p, 3, 3);
    REQUIRE(big.size() == 1);
    CHECK(big[0] == generic_minor({1, 2, 3}, {1, 2, 3}));
    // Minor size exceeding the corner yields nothing.
    CHECK(corner_minors(p, 2, 2).empty());
    CHECK(corner_minors(Perm::identity(3), 2, 3).empty());
  }

  TEST_CASE("schubert determinantal generators at essential boxes") {
    auto a2143 = schubert_ideal(Perm({2, 1, 4, 3}));
    REQUIRE(a2143.size() == 2);
    CHECK(a2143[0] == Poly::parse("z1_1"));
    CHECK(a2143[1] == generic_minor({1, 2, 3}, {1, 2, 3}));

    auto a = schubert_ideal(Perm({4, 1, 3, 2, 5}));
    REQUIRE(a.size() == 6);
    CHECK(in_list(a, Poly::parse("z1_1")));
    CHECK(in_list(a, Poly::parse("z1_2")));
    CHECK(in_list(a, Poly::parse("z1_3")));
    CHECK(in_list(a, Poly::parse("z1_1 z2_2 - z1_2 z2_1")));
    CHECK(in_list(a, Poly::parse("z1_1 z3_2 - z1_2 z3_1")));
    CHECK(in_list(a, Poly::parse("z2_1 z3_2 - z2_2 z3_1")));

    CHECK(schubert_ideal(Perm::identity(4)).empty());

    // Dominant: the ideal is generated by the variables in the diagram.
    auto dom = schubert_ideal(Perm({3, 2, 1}));
    for (const auto &f : dom) CHECK(f.is_monomial());
    CHECK(ideal_equal(dom, {Poly::parse("z1_1"), Poly::parse("z1_2"), Poly::parse("z2_1")}));
  }

  TEST_CASE("all-box generators define the same ideal") {
    for (const Perm &p : {Perm({2, 1, 4, 3}), Perm({4, 1, 3, 2, 5}), Perm({1, 4, 3, 2})}) {
      auto a = schubert_ideal(p);
      auto b = schubert_ideal_all_boxes(p);
      for (const auto &f : a) CHECK(in_list(b, f));
      CHECK(ideal_equal(a, b));
    }
  }

  TEST_CASE("diagonal terms of the essential minors") {
    MonomialIdeal dt = diagonal_terms(Perm({4, 1, 3, 2, 5}));
    MonomialIdeal expect({mono("z1_1"), mono("z1_2"),
                          mono("z1_3"), mono("z2_1 z3_2")});
    CHECK(dt == expect);
    CHECK(diagonal_terms(Perm({2, 1, 4, 3})) == MonomialIdeal({mono("z1_1")}));
    CHECK(diagonal_terms(Perm::identity(3)).is_zero());
  }

  TEST_CASE("vexillary essential minors are a diagonal groebner basis") {
    auto v = verify_diagonal_gb(Perm({4, 1, 3, 2, 5}), diagonal_order(5));
    CHECK(v.vexillary);
    CHECK(v.is_gb);
    CHECK(initial_ideal(schubert_ideal(Perm({4, 1, 3, 2, 5})), diagonal_order(5)) ==
          diagonal_terms(Perm({4, 1, 3, 2, 5})));

    // Stability under other diagonal-type orders.
    for (uint64_t seed : {1, 5, 9}) {
      CHECK(verify_diagonal_gb(Perm({4, 1, 3, 2, 5}), random_diagonal_order(5, seed)).is_gb);
      CHECK(verify_diagonal_gb(Perm({1, 4, 3, 2}), random_diagonal_order(4, seed)).is_gb);
    }
  }

  TEST_CASE("the 2143 minors fail every diagonal order tried") {
    Perm p({2, 1, 4, 3});
    auto v = verify_diagonal_gb(p, diagonal_order(4));
    CHECK(!v.vexillary);
    CHECK(!v.is_gb);
    REQUIRE(!v.witness.remainder.is_zero());
    CHECK(v.witness.remainder ==
          Poly::parse("z1_2 z2_1 z3_3 - z1_2 z2_3 z3_1 - z1_3 z2_1 z3_2 + z1_3 z2_2 z3_1"));
    // The remainder still lies in the ideal: it reduces to zero against a
    // genuine basis.
    auto gb = buchberger(schubert_ideal(p), diagonal_order(4));
    CHECK(normal_form(v.witness.remainder, gb, diagonal_order(4)).is_zero());
    // No term of the remainder is divisible by a generator's leading term.
    MonomialIdeal lt = diagonal_terms(p);
    for (const auto &[m, c] : v.witness.remainder.terms()) CHECK(!lt.contains(m));

    for (uint64_t seed : {2, 7, 13}) CHECK(!verify_diagonal_gb(p, random_diagonal_order(4, seed)).is_gb);
    // Adding the minors at every box does not repair the failure.
    CHECK(!check_groebner(schubert_ideal_all_boxes(p), diagonal_order(4)).is_gb);
  }

  TEST_CASE("antidiagonal orders always give a groebner basis") {
    for (const Perm &p : all_perms(4))
      CHECK(check_groebner(schubert_ideal(p), antidiagonal_order(4)).is_gb);
    CHECK(check_groebner(schubert_ideal(Perm({2, 1, 5, 4, 3})), antidiagonal_order(5)).is_gb);
  }

  TEST_CASE("diagonal groebner property characterizes vexillarity") {
    for (const Perm &p : all_perms(4)) {
      auto v = verify_diagonal_gb(p, diagonal_order(4));
      CHECK(v.vexillary == p.is_vexillary());
      CHECK(v.is_gb == p.is_vexillary());
    }
    for (const Perm &p : all_perms(5)) {
      auto v = verify_diagonal_gb(p, diagonal_order(5));
      CHECK(v.is_gb == p.is_vexillary());
      if (!v.is_gb) CHECK(!v.witness.remainder.is_zero());
    }
  }

  TEST_CASE("initial ideal equals the stanley-reisner ideal of the subword complex") {
    for (const Perm &p : all_perms(4)) {
      if (!p.is_vexillary()) continue;
      CHECK(initial_ideal(schubert_ideal(p), diagonal_order(4)) ==
            stanley_reisner(gamma_complex(p)));
    }
    for (const Perm &p : {Perm({4, 1, 3, 2, 5}), Perm({3, 5, 1, 4, 2}), Perm({1, 5, 4, 3, 2})}) {
      REQUIRE(p.is_vexillary());
      CHECK(initial_ideal(schubert_ideal(p), diagonal_order(5)) ==
            stanley_reisner(gamma_complex(p)));
      CHECK(initial_ideal(schubert_ideal(p), diagonal_order(5)) == diagonal_terms(p));
    }
  }

  TEST_CASE("all-box generators stay a groebner basis in the vexillary case") {
    for (const Perm &p : {Perm({4, 1, 3, 2, 5}), Perm({1, 4, 3, 2})}) {
      auto b = schubert_ideal_all_boxes(p);
      CHECK(check_groebner(b, diagonal_order(p.n())).is_gb);
    }
  }
}
