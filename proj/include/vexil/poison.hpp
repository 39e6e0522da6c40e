#pragma once

#include <optional>
#include <vector>

#include "vexil/ideal.hpp"
#include "vexil/perm.hpp"
#include "vexil/subword.hpp"

namespace vexil {

// Chain of boxes strictly increasing in both coordinates, identified with the
// product of the matching matrix variables.
struct Diagonal {
  std::vector<Box> boxes;
  explicit Diagonal(std::vector<Box> b);
  Monomial product() const;
  friend bool operator==(const Diagonal &, const Diagonal &) = default;
};

// Square minor of the generic matrix, named by its index sets.
struct MinorSpec {
  std::vector<int> rows, cols;  // strictly increasing, equal sizes
  Diagonal main_diagonal() const;
  friend bool operator==(const MinorSpec &, const MinorSpec &) = default;
};

// Crosses at exactly the diagram boxes; the cross count is the length.
PipeDream cross_diagram(const Perm &pi);

// Defining minors of the Schubert determinantal ideal: size 1 + rank at each
// essential box, or at every box of the grid that admits that size.
std::vector<MinorSpec> essential_minors(const Perm &pi);
std::vector<MinorSpec> grid_minors(const Perm &pi);

// A pipe dream poisons a diagonal (or a minor) when one of its crosses lies
// on it (or on the minor's main diagonal).
bool poisons(const PipeDream &pd, const Diagonal &d);
bool poisons(const PipeDream &pd, const MinorSpec &m);

// Longest diagonal in the northwest p x q corner avoiding every cross.
int max_unpoisoned_diagonal(const PipeDream &pd, int p, int q);

// Whether pd poisons every essential minor: equivalently, no unpoisoned
// diagonal in an essential corner exceeds the rank there.
bool poisons_essential(const PipeDream &pd, const Perm &pi);

struct Minimality {
  bool minimal = false;
  std::optional<Box> removable;  // set when not minimal
};

// Requires pd to poison every essential minor. Minimal when dropping any
// single cross breaks that; otherwise reports the first removable cross.
// For the cross diagram this decides vexillarity.
Minimality is_minimal_poisoning(const PipeDream &pd, const Perm &pi);

// Every grid minor's diagonal term is divisible by an essential one, so both
// generating sets have the same ideal of diagonal terms.
bool diagonal_divisibility(const Perm &pi);

// For non-vexillary pi: the cross diagram minus one removable cross. The
// surviving cross variables still contain every essential diagonal term, so
// those terms cut out a locus of codimension strictly below the length; no
// diagonal term order can then make the essential minors a Groebner basis.
struct SharpnessCertificate {
  Perm perm;
  int length = 0;
  std::vector<Box> poison_crosses;
  int codim = 0;
};
SharpnessCertificate sharpness_certificate(const Perm &pi);

}  // namespace vexil
