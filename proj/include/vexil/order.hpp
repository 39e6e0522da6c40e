#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "vexil/monomial.hpp"

namespace vexil {

// Monomial order. Three building blocks:
//   lex(priority)    pure lexicographic along an explicit variable priority,
//                    falling through to canonical VarId order for variables
//                    not listed;
//   grlex(priority)  total degree first, then the lex above;
//   block(front, inner)  total degree in `front` first, then `inner`.
// block({v}, o) is the v-block refinement used for vertex decompositions: the
// leading term of any p is the leading term of its highest-v-degree part. A
// block over a full variable group is an elimination order for that group.
class TermOrder {
 public:
  static TermOrder lex(std::vector<VarId> priority);
  static TermOrder grlex(std::vector<VarId> priority = {});
  static TermOrder block(std::vector<VarId> front, TermOrder inner);
  // Serialization order: graded, then canonical x < y < z < aux priority.
  static TermOrder canonical() { return grlex({}); }

  std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
  bool less(const Monomial &a, const Monomial &b) const { return compare(a, b) < 0; }
  bool greater(const Monomial &a, const Monomial &b) const { return compare(a, b) > 0; }

  // Variables forming the front block, empty unless this is a block order.
  const std::vector<VarId> &front_block() const { return front_; }
  bool is_block_over(VarId v) const { return front_.size() == 1 && front_[0] == v; }

  const std::string &name() const { return name_; }
  TermOrder with_name(std::string n) const;

 private:
  enum class Kind { Lex, GrLex, Block };
  TermOrder(Kind k) : kind_(k) {}
  std::strong_ordering lex_compare(const Monomial &a, const Monomial &b) const;

  Kind kind_;
  std::vector<VarId> priority_;
  std::vector<VarId> front_;
  std::shared_ptr<const TermOrder> inner_;
  std::string name_;
};

// Lex order on the n x n grid whose priority lists rows northwest-first
// (z1_1 > z1_2 > ... > z2_1 > ...). Under it the leading term of every minor
// of the generic matrix is its main diagonal product.
TermOrder diagonal_order(int n);

// Mirror image: z1_n highest; picks antidiagonal products of minors.
TermOrder antidiagonal_order(int n);

// Random linear extension of the componentwise partial order on the grid
// (northwest boxes before southeast boxes); every such lex order has the
// diagonal property. Deterministic in the seed.
TermOrder random_diagonal_order(int n, uint64_t seed);

// Parse an --order flag value: "diagonal" | "antidiagonal" | "seed:<int>".
TermOrder order_from_flag(const std::string &flag, int n);

}  // namespace vexil
