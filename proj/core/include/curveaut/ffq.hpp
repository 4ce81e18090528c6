#ifndef CURVEAUT_FFQ_HPP
#define CURVEAUT_FFQ_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "curveaut/error.hpp"

namespace curveaut {

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline uint64_t pow_mod_u64(uint64_t b, uint64_t e, uint64_t q) {
  uint64_t r = 1 % q;
  b %= q;
  while (e) {
    if (e & 1) r = (r * b) % q;
    b = (b * b) % q;
    e >>= 1;
  }
  return r;
}

inline uint64_t inv_mod_u64(uint64_t a, uint64_t q) {
  require(a % q != 0, Err::Arithmetic, "division by zero mod q");
  return pow_mod_u64(a % q, q - 2, q);
}

// F_{q^k} as F_q[T]/(h). Contexts are interned for process lifetime.
class FFCtx {
 public:
  // root_order: the multiplicative order K the base root image must have.
  static const FFCtx* get(uint64_t q, long k, long root_order);

  uint64_t q() const { return q_; }
  long k() const { return k_; }
  long root_order() const { return K_; }
  uint64_t root_image() const { return root_q_; }  // in the prime field
  const std::vector<uint64_t>& modulus() const { return mod_; }
  // q^k as unsigned; guaranteed < 2^63 by construction checks
  unsigned long long card() const { return card_; }

 private:
  FFCtx(uint64_t q, long k, long root_order);
  std::vector<uint64_t> find_irreducible() const;

  uint64_t q_;
  long k_;
  long K_;
  uint64_t root_q_ = 1;
  std::vector<uint64_t> mod_;  // monic, length k+1
  unsigned long long card_;
};

class FFElem {
 public:
  FFElem() : ctx_(nullptr) {}
  FFElem(const FFCtx* ctx, std::vector<uint64_t> c) : ctx_(ctx), c_(std::move(c)) {
    c_.resize(ctx->k(), 0);
    for (auto& v : c_) v %= ctx->q();
  }
  static FFElem zero(const FFCtx* ctx) { return FFElem(ctx, {}); }
  static FFElem one(const FFCtx* ctx) { return FFElem(ctx, {1}); }
  static FFElem from_int(const FFCtx* ctx, long v) {
    long q = static_cast<long>(ctx->q());
    long r = ((v % q) + q) % q;
    return FFElem(ctx, {static_cast<uint64_t>(r)});
  }
  static FFElem base_root(const FFCtx* ctx) { return FFElem(ctx, {ctx->root_image()}); }

  const FFCtx* ctx() const { return ctx_; }
  const std::vector<uint64_t>& coeffs() const { return c_; }

  bool is_zero() const {
    for (auto v : c_)
      if (v) return false;
    return true;
  }
  bool operator==(const FFElem& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
  bool operator!=(const FFElem& o) const { return !(*this == o); }

  FFElem operator-() const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (ctx_->q() - c_[i]) % ctx_->q();
    return FFElem(ctx_, std::move(c));
  }
  FFElem operator+(const FFElem& o) const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + o.c_[i]) % ctx_->q();
    return FFElem(ctx_, std::move(c));
  }
  FFElem operator-(const FFElem& o) const { return *this + (-o); }
  FFElem operator*(const FFElem& o) const {
    size_t k = c_.size();
    uint64_t q = ctx_->q();
    std::vector<uint64_t> prod(2 * k - 1, 0);
    for (size_t i = 0; i < k; ++i) {
      if (!c_[i]) continue;
      for (size_t j = 0; j < k; ++j) {
        if (!o.c_[j]) continue;
        prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % q;
      }
    }
    // reduce by the monic modulus
    const auto& h = ctx_->modulus();
    for (size_t d = 2 * k - 2; d + 1 >= k + 1; --d) {
      uint64_t top = prod[d];
      if (!top) continue;
      prod[d] = 0;
      for (size_t i = 0; i < k; ++i) {
        uint64_t sub = (top * h[i]) % q;
        size_t pos = d - k + i;
        prod[pos] = (prod[pos] + q - sub) % q;
      }
    }
    prod.resize(k);
    return FFElem(ctx_, std::move(prod));
  }
  FFElem pow(unsigned long long e) const {
    FFElem acc = one(ctx_);
    FFElem b = *this;
    while (e) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }
  FFElem inverse() const {
    require(!is_zero(), Err::Arithmetic, "inverse of zero in finite field");
    // q^k - 2 exponent
    return pow(ctx_->card() - 2);
  }
  FFElem operator/(const FFElem& o) const { return *this * o.inverse(); }

  // quadratic character: 1 square, -1 non-square, 0 zero
  int chi() const {
    if (is_zero()) return 0;
    FFElem r = pow((ctx_->card() - 1) / 2);
    return r == one(ctx_) ? 1 : -1;
  }

  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
  }

 private:
  const FFCtx* ctx_;
  std::vector<uint64_t> c_;
};

inline FFElem zero_like(const FFElem& a) { return FFElem::zero(a.ctx()); }
inline FFElem one_like(const FFElem& a) { return FFElem::one(a.ctx()); }
inline FFElem from_long_like(const FFElem& a, long v) { return FFElem::from_int(a.ctx(), v); }

inline std::vector<FFElem> session_roots(const FFElem& sample) {
  const FFCtx* ctx = sample.ctx();
  std::vector<FFElem> out;
  FFElem r = FFElem::base_root(ctx);
  FFElem acc = FFElem::one(ctx);
  for (long e = 0; e < ctx->root_order(); ++e) {
    out.push_back(acc);
    acc = acc * r;
  }
  return out;
}

inline std::vector<FFElem> kth_roots(const FFElem& sample, long k) {
  const FFCtx* ctx = sample.ctx();
  require(k >= 1 && ctx->root_order() % k == 0, Err::FieldTooSmall,
          "k-th roots of unity not available in the reduction field");
  std::vector<FFElem> out;
  FFElem r = FFElem::base_root(ctx).pow(ctx->root_order() / k);
  FFElem acc = FFElem::one(ctx);
  for (long e = 0; e < k; ++e) {
    out.push_back(acc);
    acc = acc * r;
  }
  return out;
}

inline FFCtx::FFCtx(uint64_t q, long k, long root_order) : q_(q), k_(k), K_(root_order) {
  require(is_prime_u64(q), Err::Input, "modulus must be prime");
  require(k >= 1, Err::Input, "extension degree must be positive");
  require((q - 1) % static_cast<uint64_t>(root_order) == 0, Err::Input,
          "root order must divide q - 1");
  unsigned long long c = 1;
  for (long i = 0; i < k; ++i) {
    require(c < (1ULL << 62) / q, Err::Budget, "field cardinality too large");
    c *= q;
  }
  card_ = c;
  // least primitive root of F_q, then the canonical K-th root image
  for (uint64_t g = 2; g < q; ++g) {
    bool prim = true;
    uint64_t m = q - 1;
    for (uint64_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        if (pow_mod_u64(g, (q - 1) / p, q) == 1) prim = false;
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1 && pow_mod_u64(g, (q - 1) / m, q) == 1) prim = false;
    if (prim) {
      root_q_ = pow_mod_u64(g, (q - 1) / root_order, q);
      break;
    }
  }
  mod_ = find_irreducible();
}

inline std::vector<uint64_t> FFCtx::find_irreducible() const {
  const long k = k_;
  const uint64_t q = q_;
  if (k == 1) return {0, 1};  // T
  // dense degree-<k residues modulo the monic candidate h of degree k
  auto mulmod = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                    const std::vector<uint64_t>& h) {
    std::vector<uint64_t> prod(2 * k - 1, 0);
    for (long i = 0; i < k; ++i) {
      if (!a[i]) continue;
      for (long j = 0; j < k; ++j)
        if (b[j]) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
    }
    for (long d = 2 * k - 2; d >= k; --d) {
      uint64_t top = prod[d];
      if (!top) continue;
      prod[d] = 0;
      for (long i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + q - (top * h[i]) % q) % q;
    }
    prod.resize(k);
    return prod;
  };
  auto frobenius_pow = [&](long e, const std::vector<uint64_t>& h) {
    // T^(q^e) mod h
    std::vector<uint64_t> r(k, 0);
    r[1] = 1;
    for (long t = 0; t < e; ++t) {
      std::vector<uint64_t> acc(k, 0);
      acc[0] = 1;
      std::vector<uint64_t> base = r;
      uint64_t ee = q;
      while (ee) {
        if (ee & 1) acc = mulmod(acc, base, h);
        base = mulmod(base, base, h);
        ee >>= 1;
      }
      r = std::move(acc);
    }
    return r;
  };
  auto gcd_deg_with_h = [&](std::vector<uint64_t> a, const std::vector<uint64_t>& h) {
    std::vector<uint64_t> b(h.begin(), h.end());
    auto trim = [](std::vector<uint64_t>& p) {
      while (!p.empty() && !p.back()) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
      while (a.size() >= b.size() && !a.empty()) {
        uint64_t c = (a.back() * inv_mod_u64(b.back(), q)) % q;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
          a[shift + i] = (a[shift + i] + q - (c * b[i]) % q) % q;
        trim(a);
      }
      std::swap(a, b);
    }
    return static_cast<long>(a.size()) - 1;
  };
  std::vector<long> prime_divs;
  long kk = k;
  for (long p = 2; p * p <= kk; ++p)
    if (kk % p == 0) {
      prime_divs.push_back(p);
      while (kk % p == 0) kk /= p;
    }
  if (kk > 1) prime_divs.push_back(kk);
  for (uint64_t b = 1; b < q; ++b) {
    for (uint64_t a = 0; a < q; ++a) {
      std::vector<uint64_t> h(k + 1, 0);
      h[0] = b;
      h[1] = a;
      h[k] = 1;
      auto xqk = frobenius_pow(k, h);
      xqk[1] = (xqk[1] + q - 1) % q;  // T^(q^k) - T
      bool zero = true;
      for (auto v : xqk)
        if (v) zero = false;
      if (!zero) continue;
      bool ok = true;
      for (long p : prime_divs) {
        auto xq = frobenius_pow(k / p, h);
        xq[1] = (xq[1] + q - 1) % q;
        if (gcd_deg_with_h(xq, h) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) return h;
    }
  }
  fail(Err::Inconsistency, "no irreducible modulus found");
}

inline const FFCtx* FFCtx::get(uint64_t q, long k, long root_order) {
  static std::mutex mu;
  static std::map<std::tuple<uint64_t, long, long>, const FFCtx*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(q, k, root_order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const FFCtx* c = new FFCtx(q, k, root_order);
  cache.emplace(key, c);
  return c;
}

struct PrimeSpec {
  uint64_t q = 0;
  long root_order = 1;     // K
  uint64_t root_image = 1; // canonical image of the session root in F_q
  long k_max = 3;
};

inline PrimeSpec find_prime(long K, uint64_t min_q) {
  require(min_q >= 2, Err::Input, "lower bound must be at least 2");
  for (uint64_t q = std::max<uint64_t>(min_q, 2);; ++q) {
    require(q < (1ULL << 31), Err::Budget, "prime search exceeded the cap");
    if (!is_prime_u64(q)) continue;
    if ((q - 1) % static_cast<uint64_t>(K) != 0) continue;
    const FFCtx* ctx = FFCtx::get(q, 1, K);
    PrimeSpec s;
    s.q = q;
    s.root_order = K;
    s.root_image = ctx->root_image();
    return s;
  }
}

}  // namespace curveaut

#endif
