#include "vexil/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "vexil/numeric.hpp"

namespace vexil {

Poly s_poly(const Poly &f, const Poly &g, const TermOrder &ord) {
  Term lf = f.leading(ord), lg = g.leading(ord);
  Monomial l = lf.mono.lcm(lg.mono);
  Poly a = f.mul_term(*l.try_div(lf.mono), Rat(1) / lf.coef);
  Poly b = g.mul_term(*l.try_div(lg.mono), Rat(1) / lg.coef);
  return a - b;
}

Poly normal_form(const Poly &f, const std::vector<Poly> &basis, const TermOrder &ord,
                 const Budget &budget) {
  // Cache leading terms once; skip zero basis elements.
  std::vector<Term> lts;
  std::vector<const Poly *> gs;
  for (auto &g : basis) {
    if (g.is_zero()) continue;
    lts.push_back(g.leading(ord));
    gs.push_back(&g);
  }
  Poly p = f, r;
  while (!p.is_zero()) {
    if (static_cast<long>(p.size()) > budget.max_terms)
      throw BudgetExhausted("normal_form: term budget exhausted");
    Term lp = p.leading(ord);
    bool reduced = false;
    for (size_t i = 0; i < gs.size(); ++i) {
      auto q = lp.mono.try_div(lts[i].mono);
      if (!q) continue;
      p -= gs[i]->mul_term(*q, lp.coef / lts[i].coef);
      reduced = true;
      break;
    }
    if (!reduced) {
      r += Poly(lp.mono, lp.coef);
      p -= Poly(lp.mono, lp.coef);
    }
  }
  return r;
}

namespace {

struct SPair {
  int i, j;
  Monomial l;  // lcm of the two leading monomials
};

// Gebauer-Moeller pair update: appends pairs of the incoming element (index
// G.size(), leading monomial ltf) against G, pruning by the lcm-divisibility
// and coprimality criteria, and drops stale old pairs whose lcm the new
// leading term strictly refines.
void update_pairs(std::vector<SPair> &pairs, const std::vector<Poly> &G,
                  const std::vector<Monomial> &lts, const Monomial &ltf) {
  int t = static_cast<int>(G.size());
  std::vector<SPair> cand;
  for (int i = 0; i < t; ++i) cand.push_back({i, t, lts[i].lcm(ltf)});

  std::vector<char> keep(cand.size(), 1);
  for (size_t a = 0; a < cand.size(); ++a) {
    if (lts[cand[a].i].coprime(ltf)) continue;  // handled below, kept for pruning power
    for (size_t b = 0; b < cand.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (cand[a].l.divisible_by(cand[b].l) && cand[a].l != cand[b].l) {
        keep[a] = 0;
        break;
      }
    }
  }
  // Among survivors with equal lcm keep one, preferring to drop the whole
  // class when some member has coprime leading terms.
  for (size_t a = 0; a < cand.size(); ++a) {
    if (!keep[a]) continue;
    bool coprime_in_class = lts[cand[a].i].coprime(ltf);
    for (size_t b = a + 1; b < cand.size(); ++b) {
      if (!keep[b] || cand[b].l != cand[a].l) continue;
      keep[b] = 0;
      if (lts[cand[b].i].coprime(ltf)) coprime_in_class = true;
    }
    if (coprime_in_class) keep[a] = 0;
  }

  std::vector<SPair> next;
  for (auto &p : pairs) {
    Monomial lold = p.l;
    bool drop = lold.divisible_by(ltf) && lts[p.i].lcm(ltf) != lold && lts[p.j].lcm(ltf) != lold;
    if (!drop) next.push_back(p);
  }
  for (size_t a = 0; a < cand.size(); ++a)
    if (keep[a]) next.push_back(cand[a]);
  pairs = std::move(next);
}

size_t pick_pair(const std::vector<SPair> &pairs, const TermOrder &ord) {
  size_t best = 0;
  for (size_t i = 1; i < pairs.size(); ++i) {
    int da = pairs[i].l.degree(), db = pairs[best].l.degree();
    if (da < db || (da == db && ord.less(pairs[i].l, pairs[best].l))) best = i;
  }
  return best;
}

}  // namespace

std::vector<Poly> buchberger(std::vector<Poly> gens, const TermOrder &ord, const Budget &budget) {
  std::vector<Poly> G;
  std::vector<Monomial> lts;
  std::vector<SPair> pairs;
  auto add = [&](const Poly &f) {
    Monomial lt = f.leading(ord).mono;
    update_pairs(pairs, G, lts, lt);
    G.push_back(f.primitive(ord));
    lts.push_back(lt);
  };
  for (auto &g : gens)
    if (!g.is_zero()) add(g);

  long processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget.max_pairs) throw BudgetExhausted("buchberger: pair budget exhausted");
    size_t k = pick_pair(pairs, ord);
    SPair p = pairs[k];
    pairs.erase(pairs.begin() + k);
    Poly r = normal_form(s_poly(G[p.i], G[p.j], ord), G, ord, budget);
    if (!r.is_zero()) add(r);
  }

  // Minimal basis: ascending leading monomials, keep only underivable ones.
  std::sort(G.begin(), G.end(),
            [&](const Poly &a, const Poly &b) { return ord.less(a.leading(ord).mono, b.leading(ord).mono); });
  std::vector<Poly> minimal;
  std::vector<Monomial> mlts;
  for (auto &g : G) {
    Monomial lt = g.leading(ord).mono;
    bool redundant = false;
    for (auto &m : mlts)
      if (lt.divisible_by(m)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      minimal.push_back(g);
      mlts.push_back(lt);
    }
  }
  // Interreduce tails; leading terms are stable because the basis is minimal.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others, ord, budget).primitive(ord);
  }
  return minimal;
}

GBCheck check_groebner(const std::vector<Poly> &gens, const TermOrder &ord, const Budget &budget) {
  std::vector<Poly> nz;
  for (auto &g : gens)
    if (!g.is_zero()) nz.push_back(g);
  std::vector<Monomial> lts;
  for (auto &g : nz) lts.push_back(g.leading(ord).mono);
  long processed = 0;
  for (size_t i = 0; i < nz.size(); ++i)
    for (size_t j = i + 1; j < nz.size(); ++j) {
      if (lts[i].coprime(lts[j])) continue;
      if (++processed > budget.max_pairs)
        throw BudgetExhausted("check_groebner: pair budget exhausted");
      Poly s = s_poly(nz[i], nz[j], ord);
      Poly r = normal_form(s, nz, ord, budget);
      if (!r.is_zero()) {
        GBCheck out;
        out.is_gb = false;
        out.i = static_cast<int>(i);
        out.j = static_cast<int>(j);
        out.spair = s;
        out.remainder = r;
        return out;
      }
    }
  return {};
}

MonomialIdeal initial_ideal(const std::vector<Poly> &gens, const TermOrder &ord,
                            const Budget &budget) {
  std::vector<Monomial> lts;
  for (auto &g : buchberger(gens, ord, budget)) lts.push_back(g.leading(ord).mono);
  return MonomialIdeal(std::move(lts));
}

static bool all_monomial(const std::vector<Poly> &gens) {
  for (auto &g : gens)
    if (!g.is_zero() && !g.is_monomial()) return false;
  return true;
}

static MonomialIdeal as_monomial_ideal(const std::vector<Poly> &gens) {
  std::vector<Monomial> ms;
  for (auto &g : gens)
    if (!g.is_zero()) ms.push_back(g.terms().begin()->first);
  return MonomialIdeal(std::move(ms));
}

std::vector<Poly> intersect_ideals(const std::vector<Poly> &a, const std::vector<Poly> &b,
                                   const Budget &budget) {
  if (all_monomial(a) && all_monomial(b))
    return as_monomial_ideal(a).intersect(as_monomial_ideal(b)).polys();
  // Tag-variable elimination: I cap J = (t I + (1 - t) J) cap k[vars].
  VarId tv = VarId::aux(1);
  Poly t = Poly::var(tv);
  Poly omt = Poly(Rat(1)) - t;
  std::vector<Poly> big;
  for (auto &f : a) big.push_back(t * f);
  for (auto &f : b) big.push_back(omt * f);
  TermOrder elim = TermOrder::block({tv}, TermOrder::canonical());
  std::vector<Poly> out;
  for (auto &g : buchberger(big, elim, budget)) {
    bool has_t = false;
    for (auto v : g.support())
      if (v == tv) has_t = true;
    if (!has_t) out.push_back(g);
  }
  return out;
}

static Poly divide_by_var(const Poly &f, VarId v) {
  Monomial mv = Monomial::var(v);
  Poly out;
  for (auto &[m, c] : f.terms()) {
    auto q = m.try_div(mv);
    if (!q) throw std::logic_error("divide_by_var: term not divisible");
    out += Poly(*q, c);
  }
  return out;
}

std::vector<Poly> colon_var(const std::vector<Poly> &gens, VarId v, const Budget &budget) {
  if (all_monomial(gens)) return as_monomial_ideal(gens).colon(v).polys();
  std::vector<Poly> cap = intersect_ideals(gens, {Poly::var(v)}, budget);
  std::vector<Poly> out;
  for (auto &f : cap) out.push_back(divide_by_var(f, v));
  return out;
}

std::vector<Poly> saturate_var(const std::vector<Poly> &gens, VarId v, const Budget &budget) {
  if (all_monomial(gens)) return as_monomial_ideal(gens).saturate(v).polys();
  std::vector<Poly> cur = buchberger(gens, TermOrder::canonical(), budget);
  for (int round = 0; round < 256; ++round) {
    std::vector<Poly> next = buchberger(colon_var(cur, v, budget), TermOrder::canonical(), budget);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw BudgetExhausted("saturate_var: no stabilization");
}

bool ideal_equal(const std::vector<Poly> &a, const std::vector<Poly> &b, const Budget &budget) {
  TermOrder ord = TermOrder::canonical();
  return buchberger(a, ord, budget) == buchberger(b, ord, budget);
}

bool ideal_contains(const std::vector<Poly> &gens, const Poly &f, const Budget &budget) {
  if (f.is_zero()) return true;
  TermOrder ord = TermOrder::canonical();
  return normal_form(f, buchberger(gens, ord, budget), ord, budget).is_zero();
}

}  // namespace vexil
