#ifndef CURVEAUT_CHARS_HPP
#define CURVEAUT_CHARS_HPP

#include <optional>

#include "curveaut/error.hpp"
#include "curveaut/rational.hpp"

namespace curveaut {

// Characteristic numbers of the degree-6 genus-4 space curve.
struct CharTable {
  long order = 6;       // m
  long rank = 18;       // r
  long cls = 0;         // n
  long stationary_planes = 0;   // alpha
  long apparent_double_points = 6;  // h
  long lines_in_two_osculating_planes = 0;  // g
  long double_curve_order = 0;  // x
  long double_touch_class = 96; // y
  long stationary_tangents = 0; // theta
  long double_osculating_planes = 0;  // delta
  long osculating_with_tangent = 0;   // gamma'
  long triple_tangent_points = 0;     // t
  long triple_tangent_planes = 120;   // t'
  long genus = 4;
};

// Specialization to (m, p) = (6, 4). Inputs: number of stationary tangents
// and of double osculating planes.
inline CharTable space_sextic_chars(long theta, long delta) {
  require(theta >= 0 && theta <= 12, Err::Input, "theta must lie in 0..12");
  require(delta >= 0, Err::Input, "delta must be nonnegative");
  CharTable t;
  t.stationary_tangents = theta;
  t.double_osculating_planes = delta;
  t.cls = 36 - theta;
  t.double_curve_order = 126 - theta;
  t.stationary_planes = 60 - 2 * theta;
  // g = 531 - (65/2) theta + theta^2/2 - delta; the half-integer terms cancel
  Rational g = rat(531) - rat(65, 2) * rat(theta) + rat(theta) * rat(theta) / rat(2) - rat(delta);
  require(g.get_den() == 1, Err::Inconsistency, "g not integral");
  t.lines_in_two_osculating_planes = g.get_num().get_si();
  // gamma' = r n + 12 r - 14 n - 6 m - 8 theta - 4 delta
  long r = t.rank, n = t.cls, m = t.order;
  t.osculating_with_tangent = r * n + 12 * r - 14 * n - 6 * m - 8 * theta - 4 * delta;
  // closed forms of the rank-cubic expressions; the theta-dependence cancels
  // completely in t'
  t.triple_tangent_points = 480 - 12 * theta;
  t.triple_tangent_planes = 120;
  return t;
}

// Plane curve characters; the three primal inputs determine the rest.
struct PlaneChars {
  std::optional<long> degree, cls, nodes, cusps, inflexions, bitangents, genus;
};

inline PlaneChars plane_pluecker(PlaneChars in) {
  // determine (degree, nodes, cusps) from whichever side is given
  long m, d, k;
  if (in.degree && in.nodes && in.cusps) {
    m = *in.degree;
    d = *in.nodes;
    k = *in.cusps;
  } else if (in.cls && in.bitangents && in.inflexions) {
    // dual side: class, bitangents, inflexions play (m, delta, kappa)
    long n = *in.cls, tau = *in.bitangents, iota = *in.inflexions;
    m = n * (n - 1) - 2 * tau - 3 * iota;
    k = 3 * n * (n - 2) - 6 * tau - 8 * iota;
    d = ((m) * (m - 1) - n - 3 * k) / 2;
    // fall through to the consistency pass below with primal data
  } else {
    fail(Err::Input, "supply (degree, nodes, cusps) or (class, bitangents, inflexions)");
  }
  PlaneChars out;
  out.degree = m;
  out.nodes = d;
  out.cusps = k;
  long n = m * (m - 1) - 2 * d - 3 * k;
  long iota = 3 * m * (m - 2) - 6 * d - 8 * k;
  long tau2 = n * (n - 1) - m - 3 * iota;
  require(tau2 % 2 == 0, Err::Inconsistency, "bitangent count not integral");
  long tau = tau2 / 2;
  long g = (m - 1) * (m - 2) / 2 - d - k;
  out.cls = n;
  out.inflexions = iota;
  out.bitangents = tau;
  out.genus = g;
  // verify any over-determined inputs
  auto check = [&](std::optional<long> given, long computed, const char* what) {
    if (given && *given != computed)
      fail(Err::Input, std::string("inconsistent plane characters: ") + what);
  };
  check(in.cls, n, "class");
  check(in.inflexions, iota, "inflexions");
  check(in.bitangents, tau, "bitangents");
  check(in.genus, g, "genus");
  return out;
}

// count of places where a function of order < p+1 becomes infinite
inline long weierstrass_count(long p) {
  require(p >= 2, Err::Input, "genus must be at least 2");
  return (p - 1) * p * (p + 1);
}

// contact adjoint count 2^{p-1} (2^p - 1)
inline long contact_phi_count(long p) {
  require(p >= 2, Err::Input, "genus must be at least 2");
  return (1L << (p - 1)) * ((1L << p) - 1);
}

// genus of the trisecant ruled surface section
inline long trisecant_genus(long delta) {
  require(delta >= 0 && delta <= 6, Err::Input, "delta must lie in 0..6");
  return 11 - delta;
}

}  // namespace curveaut

#endif
