#pragma once

#include <vector>

#include "vexil/groebner.hpp"
#include "vexil/ideal.hpp"
#include "vexil/perm.hpp"
#include "vexil/poly.hpp"

namespace vexil {

// Determinant of the submatrix of the generic n x n matrix (z_ij) on the
// given 1-based rows and columns (Leibniz expansion; rows.size() small).
Poly generic_minor(const std::vector<int> &rows, const std::vector<int> &cols);

// All (1+r) x (1+r) minors of the northwest p x q corner, r = rank(p, q).
std::vector<Poly> corner_minors(const Perm &pi, int p, int q);

// Schubert determinantal ideal: corner minors at the essential boxes only.
std::vector<Poly> schubert_ideal(const Perm &pi);

// The larger generating set running over every box of the n x n grid
// (boxes whose minor size exceeds the corner are skipped).
std::vector<Poly> schubert_ideal_all_boxes(const Perm &pi);

// Main-diagonal leading terms of the essential minors.
MonomialIdeal diagonal_terms(const Perm &pi);

struct DiagonalGBVerdict {
  bool vexillary = false;
  bool is_gb = false;
  GBCheck witness;  // populated when is_gb is false
};

// Checks whether the essential minors form a Groebner basis under the given
// diagonal-type order; for vexillary permutations they must, and otherwise
// the witness records a concrete S-pair with nonzero remainder.
DiagonalGBVerdict verify_diagonal_gb(const Perm &pi, const TermOrder &ord,
                                     const Budget &budget = {});

}  // namespace vexil
