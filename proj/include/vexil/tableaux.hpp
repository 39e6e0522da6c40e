#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vexil/perm.hpp"
#include "vexil/subword.hpp"

namespace vexil {

// Set-valued filling of a Ferrers shape: every box of the shape carries a
// nonempty finite set of positive integers. Single-valued fillings are the
// classical tableaux.
struct SetValuedTableau {
  std::vector<int> shape;            // weakly decreasing positive parts
  std::map<Box, std::set<int>> cells;

  int excess() const;  // total number of entries minus number of boxes
  bool single_valued() const;
  const std::set<int> &at(int r, int c) const;
  std::string str() const;

  friend auto operator<=>(const SetValuedTableau &, const SetValuedTableau &) = default;
};

// Empty string when rows weakly increase (max of a box at most min of its
// right neighbor) and columns strictly increase (max of a box below min of
// the box beneath it); otherwise a description of the first violation.
std::string semistandard_violation(const SetValuedTableau &t);
bool is_semistandard(const SetValuedTableau &t);

// Every entry in row i is at most flag[i - 1].
bool respects_flag(const SetValuedTableau &t, const std::vector<int> &flag);

// All semistandard fillings of the shape with row bounds `flag`, set-valued
// or single-valued, in sorted order.
std::vector<SetValuedTableau> flagged_tableaux(const std::vector<int> &shape,
                                               const std::vector<int> &flag, bool set_valued);

// Shape lambda(pi) with the flag of pi; requires pi vexillary.
std::vector<SetValuedTableau> flagged_tableaux(const Perm &pi, bool set_valued);

// An entry v in box (r, c) becomes a cross at (v, v + c - r): each box emits
// its set along its own diagonal. The dream lives on a k x N grid.
PipeDream omega(const SetValuedTableau &t, int k, int N);

// Inverse of omega on its image: redistribute the crosses of each diagonal
// into consecutive blocks over the shape's boxes on that diagonal. Exactly
// one semistandard solution (respecting the flag when given) must exist.
SetValuedTableau omega_inverse(const PipeDream &d, const std::vector<int> &shape,
                               const std::optional<std::vector<int>> &flag = std::nullopt);

}  // namespace vexil
