#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vexil/detideal.hpp"
#include "vexil/groebner.hpp"
#include "vexil/order.hpp"
#include "vexil/poison.hpp"

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

}  // namespace

TEST_SUITE("poison") {
  TEST_CASE("cross diagrams sit on the diagram") {
    CHECK(cross_diagram(Perm::identity(4)).crosses.empty());
    CHECK(cross_diagram(Perm({4, 1, 3, 2, 5})).crosses ==
          std::set<Box>{{1, 1}, {1, 2}, {1, 3}, {3, 2}});
    CHECK(cross_diagram(Perm({2, 1, 4, 3})).crosses == std::set<Box>{{1, 1}, {3, 3}});
    for (const Perm &p : all_perms(4))
      CHECK(static_cast<int>(cross_diagram(p).crosses.size()) == p.length());
  }

  TEST_CASE("diagonals increase in both coordinates") {
    CHECK(Diagonal({{1, 1}, {2, 2}}).product() == mono("z1_1 z2_2"));
    CHECK(Diagonal({}).product() == Monomial::one());
    CHECK_THROWS_AS(Diagonal({{2, 2}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Diagonal({{1, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Diagonal({{0, 1}}), std::invalid_argument);
    CHECK(MinorSpec{{1, 2, 3}, {1, 2, 3}}.main_diagonal() == Diagonal({{1, 1}, {2, 2}, {3, 3}}));
    CHECK(MinorSpec{{1, 3}, {2, 4}}.main_diagonal().product() == mono("z1_2 z3_4"));
  }

  TEST_CASE("minor enumerations") {
    auto ess = essential_minors(Perm({4, 1, 3, 2, 5}));
    REQUIRE(ess.size() == 6);
    std::set<Monomial> diags;
    for (const MinorSpec &m : ess) diags.insert(m.main_diagonal().product());
    CHECK(diags == std::set<Monomial>{mono("z1_1"), mono("z1_2"), mono("z1_3"),
                                      mono("z1_1 z2_2"), mono("z1_1 z3_2"), mono("z2_1 z3_2")});

    // For this permutation the grid contributes nothing beyond the essential
    // corners: a 1 x 1 minor and the full 3 x 3 determinant.
    auto grid = grid_minors(Perm({2, 1, 4, 3}));
    REQUIRE(grid.size() == 2);
    CHECK(grid[0] == MinorSpec{{1}, {1}});
    CHECK(grid[1] == MinorSpec{{1, 2, 3}, {1, 2, 3}});
    CHECK(essential_minors(Perm({2, 1, 4, 3})) == grid);

    CHECK(grid_minors(Perm::identity(3)).empty());

    // Every essential minor is also a grid minor.
    for (const Perm &p : all_perms(4)) {
      auto a = essential_minors(p);
      auto b = grid_minors(p);
      for (const MinorSpec &m : a) CHECK(std::count(b.begin(), b.end(), m) >= 1);
    }
  }

  TEST_CASE("poisoning detects crosses on diagonals") {
    PipeDream empty;
    CHECK(!poisons(empty, Diagonal({{1, 1}})));
    CHECK(poisons(cross_diagram(Perm({4, 1, 3, 2, 5})), Diagonal({{1, 1}, {2, 2}})));
    CHECK(poisons(cross_diagram(Perm({2, 1, 4, 3})), MinorSpec{{1, 2, 3}, {1, 2, 3}}));
    CHECK(!poisons(cross_diagram(Perm({2, 1, 4, 3})), Diagonal({{1, 2}, {2, 3}})));

    CHECK(max_unpoisoned_diagonal(empty, 3, 3) == 3);
    CHECK(max_unpoisoned_diagonal(cross_diagram(Perm({2, 1, 4, 3})), 3, 3) == 2);
    CHECK(max_unpoisoned_diagonal(cross_diagram(Perm({2, 1, 4, 3})), 1, 1) == 0);
  }

  TEST_CASE("cross diagram poisons the essential minors, minimally iff vexillary") {
    for (int n = 2; n <= 6; ++n)
      for (const Perm &p : all_perms(n)) {
        PipeDream pd = cross_diagram(p);
        CHECK(poisons_essential(pd, p));
        // The unpoisoned-diagonal bound agrees with the minor-level meaning.
        for (const MinorSpec &m : essential_minors(p)) CHECK(poisons(pd, m));
        CHECK(is_minimal_poisoning(pd, p).minimal == p.is_vexillary());
      }
  }

  TEST_CASE("minimality witnesses") {
    CHECK(is_minimal_poisoning(cross_diagram(Perm({4, 1, 3, 2, 5})), Perm({4, 1, 3, 2, 5})).minimal);
    CHECK(is_minimal_poisoning(cross_diagram(Perm::identity(4)), Perm::identity(4)).minimal);
    auto res = is_minimal_poisoning(cross_diagram(Perm({2, 1, 4, 3})), Perm({2, 1, 4, 3}));
    CHECK(!res.minimal);
    CHECK(res.removable == Box{3, 3});
    PipeDream empty;
    CHECK_THROWS_AS(is_minimal_poisoning(empty, Perm({2, 1, 4, 3})), std::invalid_argument);
  }

  TEST_CASE("grid diagonal terms divide down to essential ones") {
    CHECK(diagonal_divisibility(Perm::identity(4)));
    CHECK(diagonal_divisibility(Perm({4, 1, 3, 2, 5})));
    for (const Perm &p : all_perms(4)) CHECK(diagonal_divisibility(p));
    for (const Perm &p : all_perms(5)) CHECK(diagonal_divisibility(p));
  }

  TEST_CASE("sharpness certificate for the smallest non-vexillary permutation") {
    Perm pi({2, 1, 4, 3});
    auto cert = sharpness_certificate(pi);
    CHECK(cert.perm == pi);
    CHECK(cert.length == 2);
    CHECK(cert.poison_crosses == std::vector<Box>{{1, 1}});
    CHECK(cert.codim == 1);

    CHECK_THROWS_AS(sharpness_certificate(Perm({4, 1, 3, 2, 5})), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_certificate(Perm::identity(3)), std::invalid_argument);

    // The certificate's consequence: the diagonal terms have a component of
    // codimension below the length, so they cannot be the initial ideal.
    auto primes = diagonal_terms(pi).minimal_primes();
    size_t min_size = primes.front().size();
    for (const auto &pr : primes) min_size = std::min(min_size, pr.size());
    CHECK(static_cast<int>(min_size) == cert.codim);
    CHECK(initial_ideal(schubert_ideal(pi), diagonal_order(4)) != diagonal_terms(pi));
  }

  TEST_CASE("certificates exist for every non-vexillary permutation through s5") {
    int seen = 0;
    for (int n = 4; n <= 5; ++n)
      for (const Perm &p : all_perms(n)) {
        if (p.is_vexillary()) continue;
        ++seen;
        auto cert = sharpness_certificate(p);
        CHECK(cert.codim == p.length() - 1);
        CHECK(static_cast<int>(cert.poison_crosses.size()) == cert.codim);
        auto diag = p.diagram();
        for (const Box &b : cert.poison_crosses)
          CHECK(std::count(diag.begin(), diag.end(), b) == 1);
        // No diagonal-type order certifies the essential minors.
        CHECK(!verify_diagonal_gb(p, diagonal_order(n)).is_gb);
        CHECK(!verify_diagonal_gb(p, random_diagonal_order(n, 3)).is_gb);
        CHECK(!verify_diagonal_gb(p, random_diagonal_order(n, 11)).is_gb);
      }
    CHECK(seen == 1 + 17);
  }

  TEST_CASE("diagonal term codimension matches length exactly for vexillary") {
    for (const Perm &p : all_perms(4)) {
      if (p.is_identity()) continue;
      auto primes = diagonal_terms(p).minimal_primes();
      size_t min_size = primes.front().size();
      for (const auto &pr : primes) min_size = std::min(min_size, pr.size());
      if (p.is_vexillary())
        CHECK(static_cast<int>(min_size) == p.length());
      else
        CHECK(static_cast<int>(min_size) < p.length());
    }
  }
}
