#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vexil {

enum class VarKind : uint8_t { X = 0, Y = 1, Z = 2, Aux = 3 };

// Packed variable identifier. Z variables carry a 1-based (row, col); the
// others a 1-based index. Canonical order: all x < all y < all z < all aux,
// then by index resp. (row, col).
class VarId {
 public:
  static constexpr int kMaxIndex = (1 << 13) - 1;

  static VarId x(int i) { return make(VarKind::X, 0, i); }
  static VarId y(int i) { return make(VarKind::Y, 0, i); }
  static VarId z(int row, int col) { return make(VarKind::Z, row, col); }
  static VarId aux(int i) { return make(VarKind::Aux, 0, i); }

  VarKind kind() const { return static_cast<VarKind>(code_ >> 28); }
  bool is_y() const { return kind() == VarKind::Y; }
  // x/y/aux index.
  int index() const { return static_cast<int>(code_ & 0x3fff); }
  int row() const { return static_cast<int>((code_ >> 14) & 0x3fff); }
  int col() const { return static_cast<int>(code_ & 0x3fff); }

  std::string str() const;

  friend auto operator<=>(VarId a, VarId b) { return a.code_ <=> b.code_; }
  friend bool operator==(VarId a, VarId b) { return a.code_ == b.code_; }

 private:
  explicit VarId(uint32_t code) : code_(code) {}
  static VarId make(VarKind k, int a, int b) {
    if (a < 0 || a > kMaxIndex || b < 0 || b > kMaxIndex)
      throw std::invalid_argument("VarId: index out of range");
    return VarId((static_cast<uint32_t>(k) << 28) | (static_cast<uint32_t>(a) << 14) |
                 static_cast<uint32_t>(b));
  }
  uint32_t code_;
};

// Exponent vector, sparse and sorted by VarId. Negative exponents are legal
// only on y variables (Laurent monomials in y); every mutator checks this.
class Monomial {
 public:
  using Entry = std::pair<VarId, int>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(VarId v, int exp = 1);

  bool is_one() const { return e_.empty(); }
  int exp(VarId v) const;
  // Total degree; negative y exponents contribute negatively.
  int degree() const;
  int degree_in(VarKind k) const;
  int degree_in(const std::vector<VarId> &vars) const;
  bool has_negative() const;
  size_t num_vars() const { return e_.size(); }
  const std::vector<Entry> &entries() const { return e_; }
  std::vector<VarId> support() const;

  Monomial operator*(const Monomial &o) const;
  Monomial pow(int k) const;
  // Exponentwise difference, may go negative only on y.
  Monomial div_laurent(const Monomial &o) const;
  // Divisibility in the polynomial (non-Laurent) sense: all exponents of o
  // are <= ours. Requires both sides non-negative.
  bool divisible_by(const Monomial &o) const;
  std::optional<Monomial> try_div(const Monomial &o) const;
  Monomial lcm(const Monomial &o) const;
  Monomial gcd(const Monomial &o) const;
  bool coprime(const Monomial &o) const;
  bool is_squarefree() const;
  Monomial squarefree_part() const;
  // Drop a variable entirely (exponent to zero).
  Monomial without(VarId v) const;
  Monomial subst_var(VarId from, VarId to) const;

  friend auto operator<=>(const Monomial &a, const Monomial &b) = default;

  std::string str() const;

 private:
  static Monomial from_sorted(std::vector<Entry> e);
  void check() const;
  std::vector<Entry> e_;
};

}  // namespace vexil
