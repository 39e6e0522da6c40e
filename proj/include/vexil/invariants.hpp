#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vexil/groebner.hpp"
#include "vexil/ideal.hpp"
#include "vexil/perm.hpp"

namespace vexil {

// Hilbert series of a quotient by a monomial ideal, all variables in degree
// one: numerator over (1-s)^denominator_power, reduced so the numerator is
// not divisible by 1-s. Entry d of the numerator is the coefficient of s^d.
struct RationalSeries {
  std::vector<Int> numerator;
  int denominator_power = 0;

  friend bool operator==(const RationalSeries &, const RationalSeries &) = default;
  std::string str() const;
};

RationalSeries hilbert_series(const MonomialIdeal &I, int num_vars);

// Coefficients of the series expansion up to degree maxdeg inclusive.
std::vector<Int> series_coefficients(const RationalSeries &h, int maxdeg);

// Multiplicative weight of each grid variable: z_{pq} carries x_p - y_q in
// ordinary (co)homological degree and the Laurent monomial x_p/y_q in
// K-theory.
struct GradedWeights {
  std::function<Poly(VarId)> weight_of;
  static GradedWeights ordinary();
  static GradedWeights k_theory();
};

// K-polynomial (multigraded Hilbert numerator) of the quotient by a
// monomial ideal. Computed by the colon/sum recursion; for squarefree
// ideals it is recomputed as the face sum of the Stanley-Reisner complex
// and the two answers are required to agree.
Poly k_polynomial(const MonomialIdeal &I, const GradedWeights &w);

// Multidegree of the quotient: the sum over top-dimensional components
// (minimal primes of least cardinality) of their multiplicity times the
// product of the weights of their variables. Cross-checked against the
// lowest-degree form of the K-polynomial at t_v -> 1 - weight(v).
Poly multidegree(const MonomialIdeal &I, const GradedWeights &w);

enum class SchubertMethod { tableau, pipedream, divided_difference, multidegree };
enum class GrothendieckMethod { tableau, interior_faces, k_polynomial, demazure };

// Double Schubert polynomial of pi, by any of four routes: the flagged
// tableau sum (vexillary only), the reduced pipe dream sum, the divided
// difference recursion down from the longest element, or the multidegree
// of the initial Schubert determinantal ideal.
Poly schubert(const Perm &pi, SchubertMethod method, const Budget &budget = {});

// Double Grothendieck polynomial, Laurent in y: the signed flagged
// set-valued tableau sum (vexillary only), the signed interior face sum of
// Gamma_pi (vexillary only), the K-polynomial of the initial ideal, or the
// Demazure operator recursion.
Poly grothendieck(const Perm &pi, GrothendieckMethod method, const Budget &budget = {});

// The specialization x_p -> 1-x_p, y_q -> 1, turning a Grothendieck
// polynomial into a polynomial in x alone.
Poly buch_specialize(const Poly &g);

// Lowest homogeneous component of g(1-x, 1-y) expanded as a series in
// positive powers of x and y; `degree` names that lowest degree and every
// part below it must cancel.
Poly schubert_from_grothendieck(const Poly &g, int degree);

}  // namespace vexil
