#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vexil {

// Grid box, 1-based (row, col).
struct Box {
  int row = 0, col = 0;
  friend auto operator<=>(const Box &, const Box &) = default;
};

class Perm;
struct Descend;
struct Grassmannianized;

// Dense prefix-count table: r(p,q) = #{i <= p : pi(i) <= q}, r(0,*) = 0.
// A permutation is recoverable from its table; reconstruct() validates.
class RankArray {
 public:
  explicit RankArray(const Perm &p);
  RankArray(int n, std::vector<int> table);  // row-major (n+1)x(n+1)
  int n() const { return n_; }
  int operator()(int p, int q) const { return r_[static_cast<size_t>(p) * (n_ + 1) + q]; }
  static std::optional<Perm> reconstruct(const RankArray &r);
  friend bool operator==(const RankArray &, const RankArray &) = default;

 private:
  int n_;
  std::vector<int> r_;
};

class Perm {
 public:
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int n);
  static Perm w0(int n);
  static Perm transposition(int n, int a, int b);
  static Perm s(int n, int i) { return transposition(n, i, i + 1); }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<size_t>(i) - 1]; }
  const std::vector<int> &one_line() const { return w_; }
  std::string str() const;  // space-separated one-line

  Perm inverse() const;
  // Composition: (a*b)(i) = a(b(i)); operands embed to a common size.
  Perm operator*(const Perm &o) const;
  // Right multiplication by the transposition of positions a, b (swaps the
  // two one-line values).
  Perm swap_positions(int a, int b) const;
  Perm embed(int m) const;
  Perm reduced() const;  // strip trailing fixed points, keep size >= 1
  friend bool operator==(const Perm &a, const Perm &b) { return a.w_ == b.w_; }
  friend auto operator<=>(const Perm &a, const Perm &b) { return a.w_ <=> b.w_; }

  int length() const;  // inversion count
  bool is_identity() const;
  std::vector<int> descents() const;
  int max_descent() const;  // 0 for the identity
  bool is_grassmannian() const { return descents().size() <= 1; }
  bool is_dominant() const;

  RankArray ranks() const { return RankArray(*this); }
  int rank(int p, int q) const;

  std::vector<Box> diagram() const;
  std::vector<Box> essential() const;
  int diagram_size() const { return static_cast<int>(diagram().size()); }
  // Row sizes of the diagram, sorted weakly decreasing, zero rows dropped.
  std::vector<int> lambda() const;
  // Union of the northwest rectangles of the essential boxes, as a partition.
  std::vector<int> mu() const;
  // Flag: f(i) = row of the southeastern-most box of mu on the diagonal
  // through (i, lambda_i). Requires vexillary.
  std::vector<int> flag() const;

  // Vexillary = 2143-avoiding. Three equivalent tests are evaluated and
  // asserted to agree: pattern avoidance, no essential box strictly
  // northwest of another, and northwest-dot diagonality at every diagram box.
  bool is_vexillary() const;

  // Diagram boxes with nonzero rank and no other diagram box weakly
  // southeast. Each is essential (asserted).
  std::vector<Box> accessible_boxes() const;

  // Downward induction step at an accessible box of a vexillary
  // permutation. Asserts the combinatorial facts the step rests on: the P
  // diagram loses exactly `box`, the C diagram slides the rectangle one step
  // northwest, both rank tables change on the predicted windows, essential
  // sets transform as predicted, and both children stay vexillary.
  Descend descend_PC(Box box) const;

  // Vexillary -> Grassmannian with the same shape and maximal descent,
  // growing the ambient size lazily. Asserts shape/descent preservation at
  // every step and the predicted essential set of the result.
  Grassmannianized grassmannianize() const;

 private:
  std::vector<int> w_;
};

struct Descend {
  Box box;
  Perm perm_P;  // one-line positions p, pi^{-1}(q) exchanged
  Perm perm_C;  // perm_P with positions t, p exchanged
  int t;        // row of the dot just northwest of the moved rectangle
  Box rect_nw;  // northwest corner of the rectangle that moves
};

struct Grassmannianized {
  Perm pi_tilde;
  int k;  // common maximal descent
  int N;  // ambient size k + lambda_1
  // Chain from pi up to pi_tilde: steps[j].first is the permutation built
  // at step j, steps[j].second its accessible box; applying descend_PC
  // there yields the previous chain element as perm_C.
  std::vector<std::pair<Perm, Box>> steps;
};

// Connected components (4-adjacency) of a set of boxes.
std::vector<std::vector<Box>> box_components(const std::vector<Box> &boxes);

}  // namespace vexil
