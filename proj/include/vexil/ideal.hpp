#pragma once

#include <set>
#include <vector>

#include "vexil/poly.hpp"

namespace vexil {

// Monomial ideal kept as its unique minimal generating set, canonically
// sorted; equality of ideals is equality of the representation. Laurent
// monomials are rejected.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial> &gens() const { return g_; }
  bool is_zero() const { return g_.empty(); }
  bool is_unit() const { return g_.size() == 1 && g_[0].is_one(); }
  bool contains(const Monomial &m) const;
  bool contains(const MonomialIdeal &o) const;
  bool is_squarefree() const;

  MonomialIdeal plus(const MonomialIdeal &o) const;
  MonomialIdeal intersect(const MonomialIdeal &o) const;  // pairwise lcms
  MonomialIdeal radical() const;                          // squarefree parts
  MonomialIdeal colon(VarId v) const;
  MonomialIdeal saturate(VarId v) const;

  // Minimal primes, each a set of variables. For squarefree ideals the
  // complements of these supports are the facets of the associated complex.
  std::vector<std::set<VarId>> minimal_primes() const;

  std::vector<Poly> polys() const;
  std::vector<VarId> support() const;

  friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

 private:
  std::vector<Monomial> g_;
};

// Plain generator list; the ambient ring is implied by the variables.
struct Ideal {
  std::vector<Poly> gens;
};

// Numerator of the Hilbert series of R/I over (1-s)^{#vars}, all variables
// in degree 1; entry d is the coefficient of s^d. The numerator does not
// depend on the ambient variable count.
std::vector<Int> hilbert_numerator(const MonomialIdeal &I);

// Coefficientwise sum and the shift h(s) -> s^k h(s).
std::vector<Int> series_add(const std::vector<Int> &a, const std::vector<Int> &b);
std::vector<Int> series_shift(const std::vector<Int> &a, int k);

// Ring header for the ideal file format: x1..xk, y1..ym, z is n x n.
struct RingDecl {
  int nx = 0, ny = 0, zn = 0;
  int num_vars() const { return nx + ny + zn * zn; }
  friend bool operator==(const RingDecl &, const RingDecl &) = default;
};

}  // namespace vexil
