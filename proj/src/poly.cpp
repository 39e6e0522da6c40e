#include "vexil/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace vexil {

Poly::Poly(const Rat &c) {
  if (c != 0) t_.emplace(Monomial::one(), c);
}
Poly::Poly(const Monomial &m) { t_.emplace(m, Rat(1)); }
Poly::Poly(const Monomial &m, const Rat &c) {
  if (c != 0) t_.emplace(m, c);
}

Rat Poly::coeff(const Monomial &m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

bool Poly::is_integral() const {
  for (auto &[m, c] : t_)
    if (!is_integer(c)) return false;
  return true;
}

bool Poly::has_laurent() const {
  for (auto &[m, c] : t_)
    if (m.has_negative()) return true;
  return false;
}

void Poly::add_term(const Monomial &m, const Rat &c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly &o) const {
  Poly r = *this;
  r += o;
  return r;
}
Poly &Poly::operator+=(const Poly &o) {
  for (auto &[m, c] : o.t_) add_term(m, c);
  return *this;
}
Poly Poly::operator-(const Poly &o) const {
  Poly r = *this;
  r -= o;
  return r;
}
Poly &Poly::operator-=(const Poly &o) {
  for (auto &[m, c] : o.t_) add_term(m, -c);
  return *this;
}
Poly Poly::operator-() const {
  Poly r;
  for (auto &[m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly &o) const {
  Poly r;
  for (auto &[m1, c1] : t_)
    for (auto &[m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::mul_term(const Monomial &m, const Rat &c) const {
  Poly r;
  if (c == 0) return r;
  for (auto &[m1, c1] : t_) r.t_.emplace(m1 * m, c1 * c);
  return r;
}

Poly Poly::scale(const Rat &c) const { return mul_term(Monomial::one(), c); }

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::pow: negative power");
  Poly r = Poly(Rat(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

Term Poly::leading(const TermOrder &ord) const {
  if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
  auto best = t_.begin();
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

Poly Poly::without_leading(const TermOrder &ord) const {
  Term lt = leading(ord);
  Poly r = *this;
  r.t_.erase(lt.mono);
  return r;
}

InitPart Poly::initial_in(VarId v) const {
  if (t_.empty()) return {0, Poly(), Poly()};
  int d = 0;
  for (auto &[m, c] : t_) d = std::max(d, m.exp(v));
  InitPart p;
  p.d = d;
  for (auto &[m, c] : t_) {
    if (m.exp(v) == d)
      p.init.add_term(m.div_laurent(Monomial::var(v, d)), c);
    else
      p.rest.add_term(m, c);
  }
  return p;
}

int Poly::total_degree() const {
  if (t_.empty()) throw std::logic_error("degree of zero polynomial");
  int d = t_.begin()->first.degree();
  for (auto &[m, c] : t_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_.begin()->first.degree();
  for (auto &[m, c] : t_)
    if (m.degree() != d) return false;
  return true;
}

std::optional<int> Poly::min_degree() const {
  if (t_.empty()) return std::nullopt;
  int d = t_.begin()->first.degree();
  for (auto &[m, c] : t_) d = std::min(d, m.degree());
  return d;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r;
  for (auto &[m, c] : t_)
    if (m.degree() == d) r.t_.emplace(m, c);
  return r;
}

Poly Poly::lowest_degree_part() const {
  auto d = min_degree();
  return d ? homogeneous_part(*d) : Poly();
}

std::vector<VarId> Poly::support() const {
  std::set<VarId> s;
  for (auto &[m, c] : t_)
    for (auto v : m.support()) s.insert(v);
  return {s.begin(), s.end()};
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (auto &[m, c] : t_) d = std::max(d, m.exp(v));
  return d;
}

Poly Poly::substitute(VarId var, const Poly &value) const {
  Poly r;
  for (auto &[m, c] : t_) {
    int k = m.exp(var);
    Poly piece(m.without(var), c);
    if (k > 0) {
      piece = piece * value.pow(k);
    } else if (k < 0) {
      if (value.size() != 1)
        throw std::invalid_argument(
            "substitute: inverse of a non-monomial required for negative exponent on " +
            var.str());
      auto &[vm, vc] = *value.terms().begin();
      Rat cpow(1);
      for (int t = 0; t < -k; ++t) cpow *= vc;
      piece = piece.mul_term(Monomial::one().div_laurent(vm).pow(-k), Rat(1) / cpow);
    }
    r += piece;
  }
  return r;
}

Poly Poly::swap_x(int i, int j) const {
  VarId xi = VarId::x(i), xj = VarId::x(j);
  Poly r;
  for (auto &[m, c] : t_) {
    int ei = m.exp(xi), ej = m.exp(xj);
    Monomial m2 = m.without(xi).without(xj) * Monomial::var(xi, ej) * Monomial::var(xj, ei);
    r.add_term(m2, c);
  }
  return r;
}

Rat Poly::content() const {
  Int g = 0, l = 1;
  for (auto &[m, c] : t_) {
    Int n = c.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    Int d = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  if (g == 0) return Rat(0);
  return Rat(g) / Rat(l);
}

Poly Poly::primitive(const TermOrder &ord) const {
  if (t_.empty()) return *this;
  Rat c = content();
  if (leading(ord).coef < 0) c = -c;
  Poly r;
  for (auto &[m, co] : t_) r.t_.emplace(m, co / c);
  return r;
}

// ---- serialization ----

static std::string coef_str(const Rat &c) {
  if (is_integer(c)) return Int(c.get_num()).get_str();
  return c.get_str();  // "p/q", only reachable on internal rational data
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  TermOrder ord = TermOrder::canonical();
  std::vector<const std::pair<const Monomial, Rat> *> ts;
  for (auto &t : t_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [&](auto *a, auto *b) { return ord.greater(a->first, b->first); });
  std::string s;
  for (auto *t : ts) {
    const auto &[m, c] = *t;
    Rat a = c < 0 ? Rat(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (m.is_one())
      s += coef_str(a);
    else if (a == 1)
      s += m.str();
    else
      s += coef_str(a) + "*" + m.str();
  }
  return s;
}

namespace {

struct Parser {
  const std::string &s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string &msg) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " +
                                msg);
  }
  long integer() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }
  VarId variable() {
    char k = s[i++];
    long a = integer();
    if (k == 'x') return VarId::x(static_cast<int>(a));
    if (k == 'y') return VarId::y(static_cast<int>(a));
    if (k == 'z') {
      skip();
      if (i >= s.size() || s[i] != '_') fail("expected '_' in z variable");
      ++i;
      long b = integer();
      return VarId::z(static_cast<int>(a), static_cast<int>(b));
    }
    fail("unknown variable kind");
  }
  // term := [int] ('*'? factor)* ; factor := var ['^' int]
  Poly term() {
    Rat coef(1);
    Monomial mono;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = Rat(Int(integer()));
      any = true;
    }
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i;
        c = peek();
      }
      if (c != 'x' && c != 'y' && c != 'z') break;
      VarId v = variable();
      int e = 1;
      if (peek() == '^') {
        ++i;
        e = static_cast<int>(integer());
      }
      if (e < 0 && !v.is_y()) fail("negative exponent only allowed on y variables");
      mono = mono * Monomial::var(v, e);
      any = true;
    }
    if (!any) fail("empty term");
    return Poly(mono, coef);
  }
  Poly poly() {
    Poly r;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    while (true) {
      r += term().scale(Rat(sign));
      if (eof()) break;
      char c = peek();
      if (c == '+')
        sign = 1;
      else if (c == '-')
        sign = -1;
      else
        fail("expected '+' or '-'");
      ++i;
    }
    return r;
  }
};

}  // namespace

Poly Poly::parse(const std::string &s) {
  Parser p{s};
  if (p.eof()) throw std::invalid_argument("polynomial parse error: empty input");
  return p.poly();
}

// ---- divided differences ----

// Divide g by (x_i - x_j) exactly via synthetic division in x_i; the
// remainder must vanish (g antisymmetric-derived), else throws.
static Poly div_linear_x(const Poly &g, int i, int j) {
  if (g.is_zero()) return g;
  VarId xi = VarId::x(i), xj = VarId::x(j);
  std::map<int, Poly> by_deg;
  int top = 0;
  for (auto &[m, c] : g.terms()) {
    int k = m.exp(xi);
    top = std::max(top, k);
    by_deg[k] += Poly(m.without(xi), c);
  }
  Poly xjp = Poly::var(xj);
  std::map<int, Poly> q;
  Poly carry;  // b_k during descent
  for (int k = top; k >= 1; --k) {
    Poly bk = (k == top ? Poly() : carry * xjp);
    auto it = by_deg.find(k);
    Poly ck = it == by_deg.end() ? Poly() : it->second;
    bk = (k == top) ? ck : bk + ck;
    q[k - 1] = bk;
    carry = bk;
  }
  Poly rem = carry * xjp;
  if (auto it = by_deg.find(0); it != by_deg.end()) rem += it->second;
  if (top == 0) rem = by_deg.count(0) ? by_deg[0] : Poly();
  if (!rem.is_zero()) throw std::logic_error("div_linear_x: nonzero remainder");
  Poly result;
  for (auto &[k, p] : q) result += p.mul_term(Monomial::var(xi, k), Rat(1));
  return result;
}

Poly divided_difference(int i, const Poly &f) {
  if (i < 1) throw std::invalid_argument("divided_difference: index must be >= 1");
  Poly g = f - f.swap_x(i, i + 1);
  return div_linear_x(g, i, i + 1);
}

Poly demazure_operator(int i, const Poly &f) {
  if (i < 1) throw std::invalid_argument("demazure_operator: index must be >= 1");
  Poly num = Poly::var(VarId::x(i + 1)) * f - Poly::var(VarId::x(i)) * f.swap_x(i, i + 1);
  return -div_linear_x(num, i, i + 1);
}

}  // namespace vexil
