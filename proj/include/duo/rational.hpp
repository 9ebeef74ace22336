#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace duo {

using Rational = mpq_class;

// Lowest-terms "p/q" rendering; integers are written as "p/1".
inline std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace duo
