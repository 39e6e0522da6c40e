#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vexil {

// Exact arithmetic everywhere. Int for combinatorial counts and cleared
// coefficients, Rat for division steps inside the Groebner engine.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat &r) { return r.get_den() == 1; }

inline Int to_int(const Rat &r) {
  if (!is_integer(r)) throw std::logic_error("to_int: non-integral rational " + r.get_str());
  return Int(r.get_num());
}

// Thrown when a computation exceeds its explicit budget (pair count, term
// count, enumeration cap). Callers surface this as a distinct failure mode.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace vexil
