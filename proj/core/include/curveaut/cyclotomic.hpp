#ifndef CURVEAUT_CYCLOTOMIC_HPP
#define CURVEAUT_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "curveaut/error.hpp"
#include "curveaut/rational.hpp"

namespace curveaut {

// Integer coefficients of the K-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial_int(long K);

long euler_phi(long n);

class CycNum;

// Session field Q(zeta_K) in the power basis mod Phi_K. Instances are
// interned and immortal; CycNum stores a bare pointer.
class CycField {
 public:
  static const CycField* get(long K);

  long index() const { return K_; }
  long degree() const { return phi_; }

  // zeta_K^e for 0 <= e < K, as a power-basis vector.
  const std::vector<Rational>& power(long e) const;

  // If v equals some zeta_K^e returns e, else -1.
  long root_exponent(const std::vector<Rational>& v) const;

  // Reduction row: t^m mod Phi_K for phi <= m <= 2*phi-2.
  const std::vector<Rational>& reduction_row(long m) const;

  const std::vector<Rational>& modulus() const { return phi_coeffs_; }

 private:
  explicit CycField(long K);

  long K_;
  long phi_;
  std::vector<Rational> phi_coeffs_;                 // degree phi monic, length phi+1
  std::vector<std::vector<Rational>> reduction_;     // rows for t^phi .. t^(2phi-2)
  std::vector<std::vector<Rational>> powers_;        // zeta^0 .. zeta^(K-1)
  std::map<std::string, long> power_lookup_;
};

class CycNum {
 public:
  CycNum() : fld_(nullptr) {}
  CycNum(const CycField* f, std::vector<Rational> coeffs);

  static CycNum zero(const CycField* f);
  static CycNum one(const CycField* f);
  static CycNum from_rational(const CycField* f, const Rational& r);
  static CycNum from_int(const CycField* f, long n) { return from_rational(f, rat(n)); }
  // Image of zeta_K^j in the session field; K must divide the session index.
  static CycNum root(const CycField* f, long K, long j);

  const CycField* field() const { return fld_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;  // coefficient of 1; full value when is_rational()

  CycNum operator-() const;
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const;
  CycNum inverse() const;
  CycNum pow(long e) const;

  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Exponent e with *this == zeta_K^e, or -1 if not a root of unity in field.
  long as_root_exponent() const;

  std::string str() const;  // sparse "e:num/den" form, canonical

 private:
  void check_compat(const CycNum& o) const;

  const CycField* fld_;
  std::vector<Rational> c_;  // length phi(K)
};

inline CycNum operator*(const Rational& r, const CycNum& a) {
  return CycNum::from_rational(a.field(), r) * a;
}

// Field-generic helpers; overloads for other coefficient fields live with
// those fields.
inline CycNum zero_like(const CycNum& a) { return CycNum::zero(a.field()); }
inline CycNum one_like(const CycNum& a) { return CycNum::one(a.field()); }
inline CycNum from_long_like(const CycNum& a, long n) { return CycNum::from_int(a.field(), n); }

// All roots of unity available in the same field as the sample element.
inline std::vector<CycNum> session_roots(const CycNum& sample) {
  const CycField* f = sample.field();
  std::vector<CycNum> out;
  out.reserve(f->index());
  for (long e = 0; e < f->index(); ++e) out.push_back(CycNum(f, f->power(e)));
  return out;
}

// k-th roots of unity in the sample's field (k must divide the session index).
inline std::vector<CycNum> kth_roots(const CycNum& sample, long k) {
  const CycField* f = sample.field();
  require(k >= 1 && f->index() % k == 0, Err::FieldTooSmall,
          "k-th roots of unity not all present in session field");
  std::vector<CycNum> out;
  for (long e = 0; e < k; ++e) out.push_back(CycNum::root(f, k, e));
  return out;
}

}  // namespace curveaut

#endif
