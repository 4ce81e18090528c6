#ifndef CURVEAUT_ERROR_HPP
#define CURVEAUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace curveaut {

enum class Err {
  Shape,          // dimension / representation kind mismatch
  Arithmetic,     // division by zero and friends
  UnsupportedRoot,// root of unity not contained in the session field
  UnsupportedDegree,
  ZeroInput,      // undefined resultant etc.
  OrderCap,       // projective order exceeded the configured cap
  GroupCap,       // closure exceeded the configured cap
  FieldTooSmall,  // normalize_finite found no rescaling root
  Invariance,     // transformation does not preserve the model
  Inconsistency,  // internal cross-check failed (signals a bug upstream)
  NeedsProbe,     // exact elimination degenerate, defer to finite-field probe
  DegenerateFamily,
  Load,           // catalog parse / validation failure
  Input,          // bad arguments
  Budget,         // finite-field work budget exceeded
  Rank,           // pencil rank violation (double point)
  Elimination,    // square elimination impossible
  GenusUndefined,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, Err kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace curveaut

#endif
