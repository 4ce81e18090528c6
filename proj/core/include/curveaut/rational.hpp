#ifndef CURVEAUT_RATIONAL_HPP
#define CURVEAUT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace curveaut {

// Exact rational coefficient substrate. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant the
// rest of the code relies on for ==.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool rat_is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rational& r) { return r.get_str(); }

// Parses "n" or "n/d"; throws std::invalid_argument on garbage.
inline Rational rat_parse(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace curveaut

#endif
