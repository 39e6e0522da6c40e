#include "vexil/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "vexil/detideal.hpp"
#include "vexil/order.hpp"
#include "vexil/subword.hpp"
#include "vexil/tableaux.hpp"

namespace vexil {

namespace {

void ensure(bool ok, const char *msg) {
  if (!ok) throw std::logic_error(msg);
}

// Exact division by 1-s; requires the coefficients to sum to zero.
std::vector<Int> divide_one_minus_s(const std::vector<Int> &a) {
  std::vector<Int> q(a.size(), Int(0));
  Int run(0);
  for (size_t i = 0; i < a.size(); ++i) {
    run += a[i];
    q[i] = run;
  }
  ensure(run == 0, "series not divisible by 1-s");
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

Int sum_coeffs(const std::vector<Int> &a) {
  Int s(0);
  for (const Int &c : a) s += c;
  return s;
}

Poly weight_of_monomial(const Monomial &m, const GradedWeights &w) {
  Poly p = Poly::constant(1);
  for (const auto &[v, e] : m.entries()) p = p * w.weight_of(v).pow(e);
  return p;
}

// Multigraded Hilbert numerator of R/I with variable v contributing the
// factor weight(v); the same colon/sum recursion as the coarse series.
Poly k_numerator(const MonomialIdeal &I, const GradedWeights &w) {
  if (I.is_unit()) return {};
  const auto &gens = I.gens();
  std::map<VarId, int> uses;
  for (const auto &g : gens)
    for (VarId v : g.support()) ++uses[v];
  const std::pair<const VarId, int> *pivot = nullptr;
  for (const auto &e : uses)
    if (e.second >= 2 && (!pivot || e.second > pivot->second)) pivot = &e;
  if (!pivot) {
    Poly num = Poly::constant(1);
    for (const auto &g : gens) num = num * (Poly::constant(1) - weight_of_monomial(g, w));
    return num;
  }
  VarId v = pivot->first;
  auto plus_v = I.plus(MonomialIdeal({Monomial::var(v)}));
  return k_numerator(plus_v, w) + w.weight_of(v) * k_numerator(I.colon(v), w);
}

// Face sum of the Stanley-Reisner complex on the support variables; free
// ambient variables contribute the factor 1.
Poly k_face_sum(const MonomialIdeal &I, const GradedWeights &w) {
  std::vector<VarId> supp = I.support();
  int n = static_cast<int>(supp.size());
  ensure(n <= 24, "face sum support too large");
  std::vector<unsigned> gen_masks;
  for (const auto &g : I.gens()) {
    unsigned m = 0;
    for (int i = 0; i < n; ++i)
      if (g.exp(supp[i]) > 0) m |= 1u << i;
    gen_masks.push_back(m);
  }
  Poly total;
  for (unsigned face = 0; face < (1u << n); ++face) {
    bool ok = true;
    for (unsigned gm : gen_masks)
      if ((gm & face) == gm) ok = false;
    if (!ok) continue;
    Poly term = Poly::constant(1);
    for (int i = 0; i < n; ++i)
      term = term * (face >> i & 1 ? w.weight_of(supp[i])
                                   : Poly::constant(1) - w.weight_of(supp[i]));
    total += term;
  }
  return total;
}

// Length of the artinian localization of I at the coordinate subspace cut
// out by the prime: variables outside the prime are inverted (set to one).
Int prime_multiplicity(const MonomialIdeal &I, const std::set<VarId> &prime) {
  std::vector<Monomial> local;
  for (const auto &g : I.gens()) {
    Monomial m;
    for (const auto &[v, e] : g.entries())
      if (prime.count(v)) m = m * Monomial::var(v, e);
    local.push_back(m);
  }
  std::vector<Int> num = hilbert_numerator(MonomialIdeal(local));
  for (size_t i = 0; i < prime.size(); ++i) num = divide_one_minus_s(num);
  return sum_coeffs(num);
}

int first_ascent(const Perm &p) {
  auto w = p.one_line();
  for (int i = 1; i < static_cast<int>(w.size()); ++i)
    if (w[i - 1] < w[i]) return i;
  return 0;
}

Perm swap_positions(const Perm &p, int i) {
  auto w = p.one_line();
  std::swap(w[i - 1], w[i]);
  return Perm(w);
}

Poly staircase_product(int n, bool k_theory) {
  Poly f = Poly::constant(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      Poly factor = k_theory ? Poly::constant(1) -
                                   Poly(Monomial::var(VarId::x(i)) * Monomial::var(VarId::y(j), -1))
                             : Poly::var(VarId::x(i)) - Poly::var(VarId::y(j));
      f = f * factor;
    }
  return f;
}

Poly tableau_term(const SetValuedTableau &t, bool k_theory) {
  Poly term = Poly::constant(1);
  for (const auto &[box, vals] : t.cells) {
    int j = box.col - box.row;
    for (int v : vals) {
      Poly factor = k_theory
                        ? Poly::constant(1) - Poly(Monomial::var(VarId::x(v)) *
                                                   Monomial::var(VarId::y(v + j), -1))
                        : Poly::var(VarId::x(v)) - Poly::var(VarId::y(v + j));
      term = term * factor;
    }
  }
  return term;
}

MonomialIdeal initial_schubert(const Perm &pi, const Budget &budget) {
  return initial_ideal(schubert_ideal(pi), diagonal_order(pi.n()), budget);
}

// Drop every term of total degree above the cap.
Poly truncate_degree(const Poly &p, int cap) {
  Poly out;
  for (const auto &[m, c] : p.terms())
    if (m.degree() <= cap) out += Poly(m, c);
  return out;
}

}  // namespace

std::string RationalSeries::str() const {
  std::string num;
  if (numerator.empty()) num = "0";
  for (size_t i = 0; i < numerator.size(); ++i) {
    const Int &c = numerator[i];
    if (c == 0) continue;
    Int a = c > 0 ? c : Int(-c);
    if (num.empty())
      num += c < 0 ? "-" : "";
    else
      num += c < 0 ? " - " : " + ";
    if (a != 1 || i == 0) num += a.get_str();
    if (i > 0) {
      if (a != 1) num += "*";
      num += "s";
      if (i > 1) num += "^" + std::to_string(i);
    }
  }
  if (num.empty()) num = "0";
  if (denominator_power == 0) return num;
  return "(" + num + ") / (1-s)^" + std::to_string(denominator_power);
}

RationalSeries hilbert_series(const MonomialIdeal &I, int num_vars) {
  ensure(num_vars >= 0, "variable count must be nonnegative");
  RationalSeries h;
  h.numerator = hilbert_numerator(I);
  h.denominator_power = num_vars;
  while (h.denominator_power > 0 && sum_coeffs(h.numerator) == 0 && !h.numerator.empty()) {
    h.numerator = divide_one_minus_s(h.numerator);
    --h.denominator_power;
  }
  if (h.numerator.empty()) h.denominator_power = 0;  // the zero series
  return h;
}

std::vector<Int> series_coefficients(const RationalSeries &h, int maxdeg) {
  std::vector<Int> out(maxdeg + 1, Int(0));
  int d = h.denominator_power;
  for (size_t i = 0; i < h.numerator.size(); ++i) {
    for (int k = static_cast<int>(i); k <= maxdeg; ++k) {
      // Coefficient of s^{k-i} in (1-s)^{-d}.
      Int binom;
      if (d == 0)
        binom = (k == static_cast<int>(i)) ? 1 : 0;
      else
        mpz_bin_uiui(binom.get_mpz_t(), k - i + d - 1, d - 1);
      out[k] += h.numerator[i] * binom;
    }
  }
  return out;
}

GradedWeights GradedWeights::ordinary() {
  GradedWeights w;
  w.weight_of = [](VarId v) {
    ensure(v.kind() == VarKind::Z, "weights are defined on grid variables");
    return Poly::var(VarId::x(v.row())) - Poly::var(VarId::y(v.col()));
  };
  return w;
}

GradedWeights GradedWeights::k_theory() {
  GradedWeights w;
  w.weight_of = [](VarId v) {
    ensure(v.kind() == VarKind::Z, "weights are defined on grid variables");
    return Poly(Monomial::var(VarId::x(v.row())) * Monomial::var(VarId::y(v.col()), -1));
  };
  return w;
}

Poly k_polynomial(const MonomialIdeal &I, const GradedWeights &w) {
  Poly k = k_numerator(I, w);
  if (I.is_squarefree() && !I.is_zero()) {
    ensure(k == k_face_sum(I, w), "recursion and face sum disagree on the K-polynomial");
  }
  return k;
}

Poly multidegree(const MonomialIdeal &I, const GradedWeights &w) {
  if (I.is_zero()) return Poly::constant(1);
  if (I.is_unit()) return {};
  auto primes = I.minimal_primes();
  size_t codim = SIZE_MAX;
  for (const auto &p : primes) codim = std::min(codim, p.size());
  Poly by_components;
  for (const auto &p : primes) {
    if (p.size() != codim) continue;
    Poly term(Rat(prime_multiplicity(I, p)));
    for (VarId v : p) term = term * w.weight_of(v);
    by_components += term;
  }
  GradedWeights shifted;
  shifted.weight_of = [&w](VarId v) { return Poly::constant(1) - w.weight_of(v); };
  Poly from_k = k_numerator(I, shifted).lowest_degree_part();
  ensure(by_components == from_k, "component sum and K-polynomial multidegrees disagree");
  return by_components;
}

Poly schubert(const Perm &pi, SchubertMethod method, const Budget &budget) {
  switch (method) {
    case SchubertMethod::tableau: {
      if (!pi.is_vexillary())
        throw std::invalid_argument("tableau formula requires a vexillary permutation");
      Poly total;
      for (const auto &t : flagged_tableaux(pi, false)) total += tableau_term(t, false);
      return total;
    }
    case SchubertMethod::pipedream: {
      Poly total;
      for (const auto &crosses : facets(staircase_complex(pi))) {
        Poly term = Poly::constant(1);
        for (Box b : crosses)
          term = term * (Poly::var(VarId::x(b.row)) - Poly::var(VarId::y(b.col)));
        total += term;
      }
      return total;
    }
    case SchubertMethod::divided_difference: {
      int i = first_ascent(pi);
      if (i == 0) return staircase_product(pi.n(), false);
      return divided_difference(i, schubert(swap_positions(pi, i), method, budget));
    }
    case SchubertMethod::multidegree:
      return multidegree(initial_schubert(pi, budget), GradedWeights::ordinary());
  }
  throw std::logic_error("unreachable");
}

Poly grothendieck(const Perm &pi, GrothendieckMethod method, const Budget &budget) {
  switch (method) {
    case GrothendieckMethod::tableau: {
      if (!pi.is_vexillary())
        throw std::invalid_argument("tableau formula requires a vexillary permutation");
      Poly total;
      for (const auto &t : flagged_tableaux(pi, true)) {
        Poly term = tableau_term(t, true);
        total += t.excess() % 2 ? -term : term;
      }
      return total;
    }
    case GrothendieckMethod::interior_faces: {
      if (!pi.is_vexillary())
        throw std::invalid_argument("interior face formula requires a vexillary permutation");
      int ell = pi.length();
      Poly total;
      for (const auto &crosses : interior_faces(gamma_complex(pi))) {
        Poly term = Poly::constant(1);
        for (Box b : crosses)
          term = term * (Poly::constant(1) - Poly(Monomial::var(VarId::x(b.row)) *
                                                  Monomial::var(VarId::y(b.col), -1)));
        total += (static_cast<int>(crosses.size()) - ell) % 2 ? -term : term;
      }
      return total;
    }
    case GrothendieckMethod::k_polynomial:
      return k_polynomial(initial_schubert(pi, budget), GradedWeights::k_theory());
    case GrothendieckMethod::demazure: {
      int i = first_ascent(pi);
      if (i == 0) return staircase_product(pi.n(), true);
      return demazure_operator(i, grothendieck(swap_positions(pi, i), method, budget));
    }
  }
  throw std::logic_error("unreachable");
}

Poly buch_specialize(const Poly &g) {
  Poly out = g;
  for (VarId v : g.support())
    if (v.kind() == VarKind::Y) out = out.substitute(v, Poly::constant(1));
  for (VarId v : out.support())
    if (v.kind() == VarKind::X)
      out = out.substitute(v, Poly::constant(1) - Poly::var(v));
  return out;
}

Poly schubert_from_grothendieck(const Poly &g, int degree) {
  Poly total;
  for (const auto &[m, c] : g.terms()) {
    Poly acc(c);
    for (const auto &[v, e] : m.entries()) {
      if (e >= 0) {
        // x^e or y^e picks up (1 - var)^e exactly.
        Poly base = Poly::constant(1) - Poly::var(v);
        acc = truncate_degree(acc * base.pow(e), degree);
      } else {
        // y^{-b} becomes the series (1-y)^{-b}, truncated.
        ensure(v.is_y(), "negative exponent on a non-y variable");
        int b = -e;
        Poly series;
        for (int t = 0; t <= degree; ++t) {
          Int binom;
          mpz_bin_uiui(binom.get_mpz_t(), b - 1 + t, t);
          series += Poly(Monomial::var(v, t), Rat(binom));
        }
        acc = truncate_degree(acc * series, degree);
      }
    }
    total += acc;
  }
  for (int d = 0; d < degree; ++d)
    ensure(total.homogeneous_part(d).is_zero(), "terms below the lowest degree must cancel");
  return total.homogeneous_part(degree);
}

}  // namespace vexil
