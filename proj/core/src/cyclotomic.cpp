#include "curveaut/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace curveaut {

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials, used only where divisibility is
// guaranteed (x^K - 1 by products of cyclotomic factors).
std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  long lead = den.back();
  for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
    long coef = num[i] / lead;
    q[i - (den.size() - 1)] = coef;
    if (coef == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= coef * den[j];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial_int(long K) {
  require(K >= 1, Err::Input, "cyclotomic polynomial index must be >= 1");
  // Phi_K = (x^K - 1) / prod_{d | K, d < K} Phi_d
  std::vector<long> num(K + 1, 0);
  num[0] = -1;
  num[K] = 1;
  for (long d = 1; d < K; ++d) {
    if (K % d != 0) continue;
    num = poly_divide_exact(num, cyclotomic_polynomial_int(d));
  }
  return num;
}

CycField::CycField(long K) : K_(K), phi_(euler_phi(K)) {
  auto ints = cyclotomic_polynomial_int(K);
  phi_coeffs_.reserve(ints.size());
  for (long v : ints) phi_coeffs_.push_back(rat(v));

  // t^m mod Phi for m = phi .. 2*phi-2, built by shifting the previous row.
  reduction_.resize(std::max<long>(phi_ - 1, 0));
  std::vector<Rational> cur(phi_, rat(0));
  for (long i = 0; i < phi_; ++i) cur[i] = -phi_coeffs_[i];  // t^phi = -(lower part), Phi monic
  for (long m = phi_; m <= 2 * phi_ - 2; ++m) {
    reduction_[m - phi_] = cur;
    // next row: multiply by t, reduce the overflow coefficient
    std::vector<Rational> nxt(phi_, rat(0));
    Rational top = cur[phi_ - 1];
    for (long i = phi_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = rat(0);
    if (!rat_is_zero(top)) {
      for (long i = 0; i < phi_; ++i) nxt[i] += top * (-phi_coeffs_[i]);
    }
    cur = std::move(nxt);
  }

  // powers of zeta
  powers_.resize(K_);
  std::vector<Rational> p(phi_, rat(0));
  p[0] = rat(1);
  for (long e = 0; e < K_; ++e) {
    powers_[e] = p;
    // multiply by t
    std::vector<Rational> nxt(phi_, rat(0));
    Rational top = p[phi_ - 1];
    for (long i = phi_ - 1; i >= 1; --i) nxt[i] = p[i - 1];
    if (!rat_is_zero(top)) {
      for (long i = 0; i < phi_; ++i) nxt[i] += top * (-phi_coeffs_[i]);
    }
    p = std::move(nxt);
  }
  for (long e = 0; e < K_; ++e) {
    std::ostringstream os;
    for (const auto& r : powers_[e]) os << r.get_str() << ';';
    power_lookup_.emplace(os.str(), e);
  }
}

const CycField* CycField::get(long K) {
  static std::mutex mu;
  static std::map<long, const CycField*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(K);
  if (it != cache.end()) return it->second;
  const CycField* f = new CycField(K);  // interned for process lifetime
  cache.emplace(K, f);
  return f;
}

const std::vector<Rational>& CycField::power(long e) const {
  e %= K_;
  if (e < 0) e += K_;
  return powers_[e];
}

long CycField::root_exponent(const std::vector<Rational>& v) const {
  std::ostringstream os;
  for (const auto& r : v) os << r.get_str() << ';';
  auto it = power_lookup_.find(os.str());
  return it == power_lookup_.end() ? -1 : it->second;
}

const std::vector<Rational>& CycField::reduction_row(long m) const {
  return reduction_.at(m - phi_);
}

CycNum::CycNum(const CycField* f, std::vector<Rational> coeffs) : fld_(f), c_(std::move(coeffs)) {
  require(static_cast<long>(c_.size()) == f->degree(), Err::Shape,
          "cyclotomic coefficient vector has wrong length");
}

CycNum CycNum::zero(const CycField* f) {
  return CycNum(f, std::vector<Rational>(f->degree(), rat(0)));
}

CycNum CycNum::one(const CycField* f) { return from_rational(f, rat(1)); }

CycNum CycNum::from_rational(const CycField* f, const Rational& r) {
  std::vector<Rational> c(f->degree(), rat(0));
  c[0] = r;
  return CycNum(f, std::move(c));
}

CycNum CycNum::root(const CycField* f, long K, long j) {
  require(K >= 1 && f->index() % K == 0, Err::UnsupportedRoot,
          "root index " + std::to_string(K) + " does not divide session index " +
              std::to_string(f->index()));
  long e = ((j % K) + K) % K;
  return CycNum(f, f->power(e * (f->index() / K)));
}

bool CycNum::is_zero() const {
  for (const auto& r : c_)
    if (!rat_is_zero(r)) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!rat_is_zero(c_[i])) return false;
  return true;
}

Rational CycNum::rational_part() const { return c_[0]; }

void CycNum::check_compat(const CycNum& o) const {
  require(fld_ == o.fld_, Err::Shape, "cyclotomic operands from different session fields");
}

CycNum CycNum::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return CycNum(fld_, std::move(c));
}

CycNum CycNum::operator+(const CycNum& o) const {
  check_compat(o);
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return CycNum(fld_, std::move(c));
}

CycNum CycNum::operator-(const CycNum& o) const {
  check_compat(o);
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  return CycNum(fld_, std::move(c));
}

CycNum CycNum::operator*(const CycNum& o) const {
  check_compat(o);
  long phi = fld_->degree();
  // Sparse product: typical operands have very few nonzero coordinates.
  std::vector<Rational> prod(2 * phi - 1, rat(0));
  for (long i = 0; i < phi; ++i) {
    if (rat_is_zero(c_[i])) continue;
    for (long j = 0; j < phi; ++j) {
      if (rat_is_zero(o.c_[j])) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + phi);
  for (long m = phi; m <= 2 * phi - 2; ++m) {
    if (rat_is_zero(prod[m])) continue;
    const auto& row = fld_->reduction_row(m);
    for (long i = 0; i < phi; ++i) {
      if (!rat_is_zero(row[i])) c[i] += prod[m] * row[i];
    }
  }
  return CycNum(fld_, std::move(c));
}

CycNum CycNum::inverse() const {
  require(!is_zero(), Err::Arithmetic, "division by zero in cyclotomic field");
  // Extended Euclid in Q[t] against Phi_K. Phi_K is irreducible over Q, so
  // the gcd is a nonzero constant.
  long phi = fld_->degree();
  std::vector<Rational> r0 = fld_->modulus();  // degree phi
  std::vector<Rational> r1 = c_;
  while (!r1.empty() && rat_is_zero(r1.back())) r1.pop_back();
  std::vector<Rational> s0(1, rat(0)), s1(1, rat(1));  // s-coefficients tracking *this

  auto deg = [](const std::vector<Rational>& p) -> long {
    return static_cast<long>(p.size()) - 1;
  };
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && rat_is_zero(p.back())) p.pop_back();
  };

  while (deg(r1) > 0) {
    // r0 = q*r1 + r2
    std::vector<Rational> rem = r0;
    std::vector<Rational> q(std::max<long>(deg(r0) - deg(r1) + 1, 0), rat(0));
    while (static_cast<long>(rem.size()) - 1 >= deg(r1) && !rem.empty()) {
      trim(rem);
      if (static_cast<long>(rem.size()) - 1 < deg(r1) || rem.empty()) break;
      long shift = deg(rem) - deg(r1);
      Rational coef = rem.back() / r1.back();
      q[shift] += coef;
      for (size_t i = 0; i < r1.size(); ++i) rem[i + shift] -= coef * r1[i];
      trim(rem);
    }
    // s2 = s0 - q*s1
    std::vector<Rational> qs(q.size() + s1.size() - 1, rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (rat_is_zero(q[i])) continue;
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    std::vector<Rational> s2(std::max(s0.size(), qs.size()), rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(!r1.empty(), Err::Inconsistency, "cyclotomic gcd vanished");
  // r1 is a nonzero constant = s1 * this (mod Phi); inverse = s1 / r1.
  Rational scale = rat(1) / r1[0];
  std::vector<Rational> c(phi, rat(0));
  for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(phi); ++i) c[i] = s1[i] * scale;
  return CycNum(fld_, std::move(c));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this;
  CycNum acc = one(fld_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& o) const {
  if (fld_ != o.fld_) return false;
  return c_ == o.c_;
}

long CycNum::as_root_exponent() const { return fld_->root_exponent(c_); }

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (rat_is_zero(c_[i])) continue;
    if (!first) os << ',';
    os << i << ':' << c_[i].get_str();
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace curveaut
