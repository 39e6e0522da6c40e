#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vexil/monomial.hpp"
#include "vexil/numeric.hpp"
#include "vexil/order.hpp"

namespace vexil {

struct Term {
  Monomial mono;
  Rat coef;
};

struct InitPart;

// Sparse polynomial with exact coefficients, Laurent only in y. Terms are
// kept in a canonical map so iteration order never depends on a term order;
// leading-term queries take the order as an argument.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat &c);
  explicit Poly(const Monomial &m);
  Poly(const Monomial &m, const Rat &c);
  static Poly var(VarId v, int exp = 1) { return Poly(Monomial::var(v, exp)); }
  static Poly constant(long c) { return Poly(Rat(c)); }

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::map<Monomial, Rat> &terms() const { return t_; }
  Rat coeff(const Monomial &m) const;
  bool is_monomial() const { return t_.size() == 1; }
  bool is_integral() const;
  bool has_laurent() const;
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator-() const;
  Poly operator*(const Poly &o) const;
  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  friend bool operator==(const Poly &a, const Poly &b) { return a.t_ == b.t_; }

  Poly mul_term(const Monomial &m, const Rat &c) const;
  Poly scale(const Rat &c) const;
  Poly pow(int k) const;

  Term leading(const TermOrder &ord) const;  // throws on zero
  Poly without_leading(const TermOrder &ord) const;

  // Highest-degree part in variable v, with v divided out d times:
  // p = v^d * init + rest, v not dividing every term of init.
  InitPart initial_in(VarId v) const;

  int total_degree() const;  // max over terms; throws on zero
  bool is_homogeneous() const;
  std::optional<int> min_degree() const;
  Poly homogeneous_part(int d) const;
  Poly lowest_degree_part() const;

  std::vector<VarId> support() const;
  int degree_in(VarId v) const;

  // var^k -> value^k for k >= 0; negative k requires value be a single term.
  Poly substitute(VarId var, const Poly &value) const;
  Poly swap_x(int i, int j) const;  // exchange x_i and x_j

  // Content (gcd of coefficients as a positive rational scale) and the
  // primitive integer form with positive leading coefficient under ord.
  Rat content() const;
  Poly primitive(const TermOrder &ord) const;

  std::string str() const;
  static Poly parse(const std::string &s);

 private:
  void add_term(const Monomial &m, const Rat &c);
  std::map<Monomial, Rat> t_;
};

// Decomposition p = v^d * init + rest where d is the top v-degree, init is
// v-free and rest has v-degree < d.
struct InitPart {
  int d;
  Poly init;
  Poly rest;
};

// Newton divided difference in x_i, x_{i+1}: (f - f|swap) / (x_i - x_{i+1}).
// Exact; preserves integrality.
Poly divided_difference(int i, const Poly &f);

// Idempotent Demazure operator in x_i, x_{i+1}:
//   (x_{i+1} f - x_i f|swap) / (x_{i+1} - x_i).
// Fixes symmetric polynomials; composes to Grothendieck recursions.
Poly demazure_operator(int i, const Poly &f);

}  // namespace vexil
