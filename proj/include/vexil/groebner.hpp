#pragma once

#include <optional>
#include <vector>

#include "vexil/ideal.hpp"
#include "vexil/order.hpp"
#include "vexil/poly.hpp"

namespace vexil {

// Work caps for Buchberger-type loops; exceeding one throws BudgetExhausted.
struct Budget {
  long max_pairs = 500000;
  long max_terms = 2000000;  // cap on term count of any intermediate polynomial
};

Poly s_poly(const Poly &f, const Poly &g, const TermOrder &ord);

// Full reduction of f modulo basis: every term of the remainder is reducible
// by no leading term.  f - remainder lies in the ideal of basis.
Poly normal_form(const Poly &f, const std::vector<Poly> &basis, const TermOrder &ord,
                 const Budget &budget = {});

// Reduced Groebner basis: pairwise S-polynomials reduce to zero, no term of
// any element is divisible by another leading term, elements are primitive
// integer with positive leading coefficient, sorted by leading monomial.
std::vector<Poly> buchberger(std::vector<Poly> gens, const TermOrder &ord,
                             const Budget &budget = {});

struct GBCheck {
  bool is_gb = true;
  // On failure: the witness S-pair (indices into the input) and its nonzero
  // remainder after full reduction.
  int i = -1, j = -1;
  Poly spair, remainder;
};

// Decides whether gens already form a Groebner basis by reducing every
// S-polynomial (coprime leading terms skipped, which is sound both ways).
GBCheck check_groebner(const std::vector<Poly> &gens, const TermOrder &ord,
                       const Budget &budget = {});

MonomialIdeal initial_ideal(const std::vector<Poly> &gens, const TermOrder &ord,
                            const Budget &budget = {});

// Intersection of the ideals generated by a and b (tag-variable elimination;
// monomial inputs take the lcm shortcut).
std::vector<Poly> intersect_ideals(const std::vector<Poly> &a, const std::vector<Poly> &b,
                                   const Budget &budget = {});

// (I : v) and (I : v^infinity) for a single variable v.
std::vector<Poly> colon_var(const std::vector<Poly> &gens, VarId v, const Budget &budget = {});
std::vector<Poly> saturate_var(const std::vector<Poly> &gens, VarId v, const Budget &budget = {});

// Equality of ideals via reduced Groebner bases under a fixed canonical order.
bool ideal_equal(const std::vector<Poly> &a, const std::vector<Poly> &b,
                 const Budget &budget = {});

bool ideal_contains(const std::vector<Poly> &gens, const Poly &f, const Budget &budget = {});

}  // namespace vexil
