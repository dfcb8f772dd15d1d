#pragma once

#include <gmpxx.h>

#include <string>

namespace twocat {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Dispatches to is_zero for either scalar field, including from class scope.
template <class F>
bool scalar_zero(const F& x) {
  return is_zero(x);
}

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace twocat
