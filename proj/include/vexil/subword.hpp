#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vexil/ideal.hpp"
#include "vexil/perm.hpp"

namespace vexil {

// Ordered sequence of simple reflections s_i acting on S_{ambient}, each
// letter pinned to a distinct grid box for pipe dream rendering.
struct Word {
  std::vector<int> letters;
  std::vector<Box> boxes;
  int ambient = 1;

  int size() const { return static_cast<int>(letters.size()); }
};

// Boxes of mu(pi) read bottom row first, right to left within each row; box
// (p,q) carries s_{k-p+q} where k = #rows of mu = maximal descent.
Word word_of_mu(const Perm &pi);
// The same conventions on the full k x N rectangle.
Word rectangle_word(int k, int N);
// Staircase boxes {p+q <= n} read top row first, right to left within each
// row; box (p,q) carries s_{p+q-1}. Its Demazure product is w0.
Word staircase_word(int n);

// Left-to-right fold u <- u s_i, keeping only length-increasing steps.
Perm demazure_product(const Word &w);
// Reduced word for p, peeling the leftmost descent off the right end.
std::vector<int> reduced_word(const Perm &p);
// Entrywise rank-table criterion: u <= v iff r_u >= r_v everywhere.
bool bruhat_leq(const Perm &u, const Perm &v);
// Some subsequence of w represents rho, i.e. demazure_product(w) >= rho.
bool contains(const Word &w, const Perm &rho);

struct SubwordComplex {
  Word word;
  Perm target;
};

// Delta(word of mu(pi), grassmannianization of pi).
SubwordComplex gamma_complex(const Perm &pi);
// Delta(full k x N rectangle word, pi_tilde) for Grassmannian pi_tilde.
SubwordComplex rectangle_complex(const Perm &grassmannian);
// Delta(staircase word of S_n, pi): facets are the reduced pipe dreams.
SubwordComplex staircase_complex(const Perm &pi);

inline constexpr int kMaxWordLen = 24;

// Faces are reported by their complements P, as cross box sets. Facets are
// the reduced subwords representing the target; interior faces are the
// subwords whose Demazure product equals the target. Both lists are sorted.
std::vector<std::set<Box>> facets(const SubwordComplex &c, int max_word = kMaxWordLen);
std::vector<std::set<Box>> interior_faces(const SubwordComplex &c, int max_word = kMaxWordLen);

// Intersection over facets P of <variables of P>; unit ideal for the void
// complex, zero ideal for the full simplex. Default variables are z_{rc}.
MonomialIdeal stanley_reisner(const SubwordComplex &c, int max_word = kMaxWordLen);
MonomialIdeal stanley_reisner(const SubwordComplex &c, const std::function<VarId(Box)> &var_of,
                              int max_word = kMaxWordLen);

// Shelling of Gamma_pi by the descend recursion at the first accessible box:
// facets of pi_P (forced cross at the box) precede facets of pi_C. Asserts
// the result matches the direct enumeration and is a valid shelling.
std::vector<std::set<Box>> vertex_decompose(const Perm &pi, int max_word = kMaxWordLen);

// Cross/elbow tiling of a rows x cols grid; crosses listed, elbows
// everywhere else. The elbow joins W->S and N->E, so pipes only ever travel
// east or south.
struct PipeDream {
  int rows = 0, cols = 0;
  std::set<Box> crosses;
  std::string ascii() const;  // '+' crosses, '.' elbows
};

// Pipes enter west rows 1..rows (ids 1..rows, top to bottom) and north
// columns 1..cols (ids rows+1..rows+cols, left to right).
struct PipeRouting {
  // Cross strands: (west-to-east pipe, north-to-south pipe).
  std::map<Box, std::pair<int, int>> cross_pipes;
  // Elbow strands: (west-to-south pipe, north-to-east pipe).
  std::map<Box, std::pair<int, int>> elbow_pipes;
  // For west pipes 1..rows: exit column on the south edge, 0 if east exit.
  std::vector<int> south_exit;
};

PipeRouting route_pipes(const PipeDream &d);

// Elbows whose two strands cross at a tile strictly northwest of the elbow.
std::set<Box> absorbable_elbows(const PipeDream &d);

// Interior faces of Gamma_pi grown pictorially: each facet plus any subset
// of its absorbable elbows inside mu(pi).
std::vector<std::set<Box>> interior_via_absorbable(const Perm &pi, int max_word = kMaxWordLen);

}  // namespace vexil
