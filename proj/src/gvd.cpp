#include "vexil/gvd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vexil {

namespace {

void ensure(bool ok, const char *what) {
  if (!ok) throw std::logic_error(std::string("invariant violated: ") + what);
}

MonomialIdeal leading_ideal(const std::vector<Poly> &gb, const TermOrder &ord) {
  std::vector<Monomial> lts;
  for (const auto &g : gb) lts.push_back(g.leading(ord).mono);
  return MonomialIdeal(std::move(lts));
}

}  // namespace

GvdSplit split_CP(const std::vector<Poly> &gens, VarId y, const TermOrder &inner,
                  const Budget &budget) {
  GvdSplit s;
  s.y = y;
  s.order = TermOrder::block({y}, inner);
  s.gb = buchberger(gens, s.order, budget);

  int max_d = 0;
  for (const auto &g : s.gb) {
    InitPart ip = g.initial_in(y);
    // Order compatibility: the leading term of g is a term of its initial
    // y-form. The block order guarantees this; verify rather than assume.
    Poly init_y = ip.init.mul_term(Monomial::var(y, ip.d), Rat(1));
    ensure(g.leading(s.order).mono == init_y.leading(s.order).mono,
           "order is not compatible with the y-splitting");
    s.degrees.push_back(ip.d);
    max_d = std::max(max_d, ip.d);
    s.I_prime.push_back(init_y);
    s.C.push_back(ip.init);
    if (ip.d == 0) s.P.push_back(ip.init);
  }
  s.P.push_back(Poly::var(y));

  // The produced generating sets are Groebner bases under the same order.
  ensure(check_groebner(s.I_prime, s.order, budget).is_gb, "initial y-forms are not a basis");
  ensure(check_groebner(s.C, s.order, budget).is_gb, "cone generators are not a basis");
  ensure(check_groebner(s.P, s.order, budget).is_gb, "projection generators are not a basis");

  s.is_gvd = ideal_equal(s.I_prime, intersect_ideals(s.C, s.P, budget), budget);

  if (max_d <= 1) {
    ensure(s.is_gvd, "a linear y-splitting must be a geometric vertex decomposition");
    std::vector<Poly> cp = s.C;
    cp.insert(cp.end(), s.P.begin(), s.P.end());
    ensure(initial_ideal(cp, s.order, budget) ==
               leading_ideal(s.C, s.order).plus(leading_ideal(s.P, s.order)),
           "initial ideal of C + P must split");
  }

  // Radicals of the initial ideals agree with the decomposition, and C is
  // the y-saturation of I'.
  ensure(leading_ideal(s.I_prime, s.order).radical() ==
             leading_ideal(s.C, s.order).radical().intersect(
                 leading_ideal(s.P, s.order).radical()),
         "radical of the initial ideal must intersect");
  ensure(ideal_equal(saturate_var(s.I_prime, y, budget), s.C, budget),
         "cone ideal must be the y-saturation");
  return s;
}

HilbertComparison hilbert_check(const GvdSplit &split) {
  for (const auto &g : split.gb)
    if (!g.is_zero() && !g.is_homogeneous())
      throw std::invalid_argument("hilbert check requires a homogeneous ideal");
  HilbertComparison hc;
  hc.num_I = hilbert_numerator(leading_ideal(split.gb, split.order));
  hc.num_P = hilbert_numerator(leading_ideal(split.P, split.order));
  hc.num_C = hilbert_numerator(leading_ideal(split.C, split.order));
  hc.equal = hc.num_I == series_add(hc.num_P, series_shift(hc.num_C, 1));
  ensure(hc.equal == split.is_gvd, "hilbert equality must match the decomposition verdict");
  return hc;
}

SchubertStep gvd_step_schubert(const Perm &pi, Box box, const Budget &budget) {
  ensure(pi.is_vexillary(), "schubert splits need a vexillary permutation");
  auto acc = pi.accessible_boxes();
  ensure(std::find(acc.begin(), acc.end(), box) != acc.end(), "box is not accessible");
  const TermOrder diag = diagonal_order(pi.n());
  ensure(verify_diagonal_gb(pi, diag, budget).is_gb, "essential minors must be a diagonal basis");

  SchubertStep st;
  st.box = box;
  VarId y = VarId::z(box.row, box.col);
  st.split = split_CP(schubert_ideal(pi), y, diag, budget);

  Descend d = pi.descend_PC(box);
  st.pi_P = d.perm_P;
  st.pi_C = d.perm_C;
  ensure(ideal_equal(st.split.C, schubert_ideal(d.perm_C), budget),
         "cone ideal must match the C-descent");
  std::vector<Poly> p_expect = schubert_ideal(d.perm_P);
  p_expect.push_back(Poly::var(y));
  ensure(ideal_equal(st.split.P, p_expect, budget), "projection ideal must match the P-descent");

  // The split's C and P generators, and the essential minors of the cone
  // permutation, are all diagonal Groebner bases.
  ensure(check_groebner(st.split.C, diag, budget).is_gb, "cone basis fails diagonally");
  ensure(check_groebner(st.split.P, diag, budget).is_gb, "projection basis fails diagonally");
  ensure(verify_diagonal_gb(d.perm_C, diag, budget).is_gb, "cone essential minors fail diagonally");
  ensure(st.split.is_gvd, "schubert split must be a geometric vertex decomposition");

  st.hilbert_equal = hilbert_check(st.split).equal;
  ensure(st.hilbert_equal, "hilbert series must be additive across the split");
  return st;
}

GvdTrace iterate_gvd(const Perm &pi, const Budget &budget) {
  ensure(pi.is_vexillary(), "decomposition traces need a vexillary permutation");
  const TermOrder diag = diagonal_order(pi.n());
  GvdTrace tr;
  std::map<std::vector<int>, MonomialIdeal> inits;
  auto init_of = [&](const Perm &p) -> const MonomialIdeal & {
    auto key = p.one_line();
    auto it = inits.find(key);
    if (it == inits.end())
      it = inits.emplace(key, initial_ideal(schubert_ideal(p), diag, budget)).first;
    return it->second;
  };

  auto rec = [&](auto &&self, const Perm &p) -> void {
    if (p.is_dominant()) return;  // the ideal is already monomial
    auto acc = p.accessible_boxes();
    ensure(!acc.empty(), "non-dominant vexillary permutations have an accessible box");
    Box box = *std::max_element(acc.begin(), acc.end());
    tr.steps.push_back(gvd_step_schubert(p, box, budget));
    // Copies: recursive calls push more steps and may reallocate tr.steps.
    const Perm pi_P = tr.steps.back().pi_P;
    const Perm pi_C = tr.steps.back().pi_C;

    // The degenerate split of the initial ideal mirrors the polynomial one:
    // everything stays squarefree, so it is again a geometric vertex
    // decomposition (deletion and cone of the complex at the vertex).
    VarId y = VarId::z(box.row, box.col);
    const MonomialIdeal &J = init_of(p);
    ensure(J.is_squarefree(), "initial ideals along the trace must be squarefree");
    MonomialIdeal c_mono = J.saturate(y);
    MonomialIdeal p_mono = J.plus(MonomialIdeal({Monomial::var(y)}));
    ensure(c_mono == init_of(pi_C), "monomial cone must descend");
    ensure(p_mono == init_of(pi_P).plus(MonomialIdeal({Monomial::var(y)})),
           "monomial projection must descend");
    ensure(J == c_mono.intersect(p_mono), "monomial split must be geometric");

    self(self, pi_P);
    self(self, pi_C);
  };
  rec(rec, pi);

  tr.final_monomial = init_of(pi);
  ensure(tr.final_monomial.is_squarefree(), "final monomial ideal must be squarefree");
  ensure(tr.final_monomial == diagonal_terms(pi),
         "final monomial ideal must be the diagonal term ideal");
  return tr;
}

}  // namespace vexil
