#pragma once

#include <vector>

#include "vexil/detideal.hpp"
#include "vexil/groebner.hpp"
#include "vexil/ideal.hpp"
#include "vexil/order.hpp"
#include "vexil/perm.hpp"

namespace vexil {

// One-variable degeneration data: with a reduced Groebner basis
// {y^{d_i} q_i + r_i} of the input under the y-block order (y not dividing
// q_i), the split consists of
//   I' = <y^{d_i} q_i>,  C = <q_i>,  P = <q_i : d_i = 0> + <y>,
// and the decomposition is geometric when I' = C intersect P.
struct GvdSplit {
  VarId y = VarId::x(1);
  TermOrder order = TermOrder::canonical();  // the y-block order used
  std::vector<Poly> gb;
  std::vector<int> degrees;
  std::vector<Poly> I_prime, C, P;
  bool is_gvd = false;
};

// Computes the split and certifies the degeneration package: the produced
// generating sets are Groebner bases; when max d_i <= 1 the intersection
// identity I' = C cap P and the initial-ideal additivity of C + P hold;
// the radicals of the initial ideals satisfy rad I' = rad C cap rad P; and
// C is the y-saturation of I'.
GvdSplit split_CP(const std::vector<Poly> &gens, VarId y, const TermOrder &inner,
                  const Budget &budget = {});

// Hilbert series numerators over (1-s)^{#vars} for R/I, R/P, R/C. Requires
// a homogeneous input ideal; `equal` reports h_I = h_P + s h_C, which holds
// exactly when the split is geometric.
struct HilbertComparison {
  std::vector<Int> num_I, num_P, num_C;
  bool equal = false;
};
HilbertComparison hilbert_check(const GvdSplit &split);

// Degeneration of a Schubert determinantal ideal at an accessible essential
// box (p,q), splitting along y = z_pq: C and P are identified with the
// ideals of the two descent permutations, the cone ideal's essential minors
// stay a diagonal Groebner basis, and the split is geometric.
struct SchubertStep {
  Box box;
  Perm pi_P = Perm::identity(1), pi_C = Perm::identity(1);
  GvdSplit split;
  bool hilbert_equal = false;
};
SchubertStep gvd_step_schubert(const Perm &pi, Box box, const Budget &budget = {});

// Full decomposition tree: repeatedly split at the southeast-most accessible
// box, recursing into the projection side then the cone side, until the
// permutations are dominant (monomial ideals). Along the way the degenerate
// splits of the initial ideals are checked to stay squarefree geometric
// vertex decompositions mirroring the polynomial ones.
struct GvdTrace {
  std::vector<SchubertStep> steps;
  MonomialIdeal final_monomial;  // initial ideal of the input's Schubert ideal
};
GvdTrace iterate_gvd(const Perm &pi, const Budget &budget = {});

}  // namespace vexil
