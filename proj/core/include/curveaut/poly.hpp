#ifndef CURVEAUT_POLY_HPP
#define CURVEAUT_POLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curveaut/error.hpp"

namespace curveaut {

// Ordered variable list with integer weights. Weight 1 is the default for
// geometric coordinates, weight 2 marks the trigonal fiber variable, weight 0
// marks free moduli carried through catalog forms.
struct VarTable {
  std::vector<std::string> names;
  std::vector<int> weights;

  static std::shared_ptr<const VarTable> make(std::vector<std::string> ns,
                                              std::vector<int> ws = {}) {
    auto t = std::make_shared<VarTable>();
    if (ws.empty()) ws.assign(ns.size(), 1);
    require(ns.size() == ws.size(), Err::Shape, "variable/weight length mismatch");
    t->names = std::move(ns);
    t->weights = std::move(ws);
    return t;
  }
  size_t size() const { return names.size(); }
  long index_of(const std::string& n) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<long>(i);
    return -1;
  }
};

using Exps = std::vector<int>;

template <class F>
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(std::shared_ptr<const VarTable> vars, F proto)
      : vars_(std::move(vars)), proto_(std::move(proto)) {}

  static MultiPoly zero(std::shared_ptr<const VarTable> vars, const F& proto) {
    return MultiPoly(std::move(vars), proto);
  }
  static MultiPoly constant(std::shared_ptr<const VarTable> vars, const F& c) {
    MultiPoly p(vars, c - c);
    if (!c.is_zero()) p.t_.emplace(Exps(vars->size(), 0), c);
    return p;
  }
  static MultiPoly monomial(std::shared_ptr<const VarTable> vars, Exps e, const F& c) {
    MultiPoly p(vars, c - c);
    require(e.size() == vars->size(), Err::Shape, "exponent tuple length mismatch");
    if (!c.is_zero()) p.t_.emplace(std::move(e), c);
    return p;
  }
  static MultiPoly variable(std::shared_ptr<const VarTable> vars, long i, const F& proto) {
    Exps e(vars->size(), 0);
    e[i] = 1;
    return monomial(vars, std::move(e), one_like(proto));
  }

  const std::shared_ptr<const VarTable>& vars() const { return vars_; }
  const std::map<Exps, F>& terms() const { return t_; }
  const F& proto() const { return proto_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }

  void add_term(const Exps& e, const F& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_, proto_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    check(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    check(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    check(o);
    MultiPoly r(vars_, proto_);
    for (const auto& [e1, c1] : t_) {
      for (const auto& [e2, c2] : o.t_) {
        Exps e(e1.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }
  MultiPoly operator*(const F& s) const {
    MultiPoly r(vars_, proto_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(long n) const {
    require(n >= 0, Err::Input, "negative power of polynomial");
    MultiPoly acc = constant(vars_, one_like(proto_));
    MultiPoly base = *this;
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  MultiPoly derivative(long var) const {
    MultiPoly r(vars_, proto_);
    for (const auto& [e, c] : t_) {
      if (e[var] == 0) continue;
      Exps d = e;
      d[var] -= 1;
      r.add_term(d, c * from_long_like(proto_, e[var]));
    }
    return r;
  }

  long degree_in(long var) const {
    long d = 0;
    for (const auto& [e, c] : t_) d = std::max<long>(d, e[var]);
    return d;
  }

  long weighted_degree() const {  // of the first term; use with is_homogeneous
    if (t_.empty()) return 0;
    return weighted_degree_of(t_.begin()->first);
  }
  long weighted_degree_of(const Exps& e) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * vars_->weights[i];
    return d;
  }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    long d = weighted_degree();
    for (const auto& [e, c] : t_)
      if (weighted_degree_of(e) != d) return false;
    return true;
  }
  bool uses_var(long var) const {
    for (const auto& [e, c] : t_)
      if (e[var] > 0) return true;
    return false;
  }

  F eval(const std::vector<F>& point) const {
    require(point.size() == vars_->size(), Err::Shape, "evaluation point length mismatch");
    F acc = zero_like(proto_);
    for (const auto& [e, c] : t_) {
      F term = c;
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term = term * point[i];
      acc = acc + term;
    }
    return acc;
  }

  // Full composition: images[i] is the polynomial substituted for variable i,
  // over the target table.
  MultiPoly subst(const std::vector<MultiPoly>& images) const {
    require(images.size() == vars_->size(), Err::Shape, "substitution image count mismatch");
    auto target = images.empty() ? vars_ : images[0].vars();
    MultiPoly r(target, proto_);
    // power cache per variable
    std::vector<std::vector<MultiPoly>> pows(images.size());
    auto power_of = [&](size_t v, int e) -> const MultiPoly& {
      auto& cache = pows[v];
      if (cache.empty()) cache.push_back(constant(target, one_like(proto_)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
      return cache[e];
    };
    for (const auto& [e, c] : t_) {
      MultiPoly term = constant(target, c);
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = term * power_of(i, e[i]);
      r += term;
    }
    return r;
  }

  // Substitute constants for a subset of variables (by index); result stays
  // over the same table with those variables absent.
  MultiPoly eval_partial(const std::map<long, F>& values) const {
    MultiPoly r(vars_, proto_);
    for (const auto& [e, c] : t_) {
      F coef = c;
      Exps d = e;
      for (const auto& [v, val] : values) {
        for (int k = 0; k < e[v]; ++k) coef = coef * val;
        d[v] = 0;
      }
      r.add_term(d, coef);
    }
    return r;
  }

  // Project onto a smaller table; eliminated variables must be absent.
  MultiPoly retable(std::shared_ptr<const VarTable> target,
                    const std::vector<long>& source_index_of_target) const {
    MultiPoly r(target, proto_);
    for (const auto& [e, c] : t_) {
      Exps d(target->size(), 0);
      long moved = 0;
      for (size_t i = 0; i < target->size(); ++i) {
        d[i] = e[source_index_of_target[i]];
        moved += d[i];
      }
      long total = 0;
      for (int x : e) total += x;
      require(moved == total, Err::Shape, "retable drops a variable still in use");
      r.add_term(d, c);
    }
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "*" << vars_->names[i];
        if (e[i] > 1) os << "^" << e[i];
      }
      first = false;
    }
    return os.str();
  }

 private:
  void check(const MultiPoly& o) const {
    require(vars_.get() == o.vars_.get() || (vars_ && o.vars_ && vars_->names == o.vars_->names),
            Err::Shape, "polynomials over different variable tables");
  }

  std::shared_ptr<const VarTable> vars_;
  std::map<Exps, F> t_;
  F proto_;
};

// ---------------------------------------------------------------------------
// Dense univariate helpers (coefficient index = degree).

template <class F>
void uv_trim(std::vector<F>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
long uv_deg(const std::vector<F>& p) {
  return static_cast<long>(p.size()) - 1;  // -1 for zero
}

template <class F>
std::vector<F> uv_derivative(const std::vector<F>& p, const F& proto) {
  std::vector<F> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * from_long_like(proto, i));
  uv_trim(d);
  return d;
}

// Remainder of a by b (monic-normalizing division in a field).
template <class F>
std::vector<F> uv_rem(std::vector<F> a, const std::vector<F>& b) {
  uv_trim(a);
  while (uv_deg(a) >= uv_deg(b) && !a.empty()) {
    F coef = a.back() / b.back();
    long shift = uv_deg(a) - uv_deg(b);
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - coef * b[i];
    uv_trim(a);
  }
  return a;
}

template <class F>
std::vector<F> uv_quot(std::vector<F> a, const std::vector<F>& b, bool* exact = nullptr) {
  uv_trim(a);
  std::vector<F> q(std::max<long>(uv_deg(a) - uv_deg(b) + 1, 0), zero_like(b.back()));
  while (uv_deg(a) >= uv_deg(b) && !a.empty()) {
    F coef = a.back() / b.back();
    long shift = uv_deg(a) - uv_deg(b);
    q[shift] = coef;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - coef * b[i];
    uv_trim(a);
  }
  if (exact) *exact = a.empty();
  return q;
}

template <class F>
std::vector<F> uv_gcd(std::vector<F> a, std::vector<F> b) {
  uv_trim(a);
  uv_trim(b);
  while (!b.empty()) {
    auto r = uv_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    F inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

template <class F>
F uv_eval(const std::vector<F>& p, const F& x) {
  F acc = zero_like(x);
  for (long i = uv_deg(p); i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Homogeneous binary forms, dense: c[i] * x^i * y^(d-i).

template <class F>
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(std::vector<F> coeffs, F proto) : c_(std::move(coeffs)), proto_(std::move(proto)) {
    normalize();
  }
  static BinaryForm zero(const F& proto) { return BinaryForm({}, proto); }
  static BinaryForm constant(const F& c) { return BinaryForm({c}, c - c); }

  const std::vector<F>& coeffs() const { return c_; }
  const F& proto() const { return proto_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const {
    require(!is_zero(), Err::ZeroInput, "degree of zero form");
    return static_cast<long>(c_.size()) - 1;
  }
  const F& coeff(long i) const { return c_[i]; }

  bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  BinaryForm operator+(const BinaryForm& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    require(degree() == o.degree(), Err::Shape, "adding binary forms of different degree");
    std::vector<F> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.c_[i];
    return BinaryForm(std::move(c), proto_);
  }
  BinaryForm operator-() const {
    std::vector<F> c = c_;
    for (auto& x : c) x = -x;
    return BinaryForm(std::move(c), proto_);
  }
  BinaryForm operator-(const BinaryForm& o) const { return *this + (-o); }
  BinaryForm operator*(const BinaryForm& o) const {
    if (is_zero() || o.is_zero()) return zero(proto_);
    std::vector<F> c(c_.size() + o.c_.size() - 1, zero_like(proto_));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return BinaryForm(std::move(c), proto_);
  }
  BinaryForm operator*(const F& s) const {
    if (s.is_zero()) return zero(proto_);
    std::vector<F> c = c_;
    for (auto& x : c) x = x * s;
    return BinaryForm(std::move(c), proto_);
  }
  BinaryForm pow(long n) const {
    BinaryForm acc = constant(one_like(proto_));
    BinaryForm base = *this;
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  F eval(const F& x, const F& y) const {
    F acc = zero_like(proto_);
    F xp = one_like(proto_);
    std::vector<F> xpow;
    for (size_t i = 0; i < c_.size(); ++i) {
      xpow.push_back(xp);
      xp = xp * x;
    }
    F yp = one_like(proto_);
    for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i) {
      acc = acc + c_[i] * xpow[i] * yp;
      yp = yp * y;
    }
    return acc;
  }

  BinaryForm derivative_x() const {
    if (is_zero()) return *this;
    std::vector<F> c;
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * from_long_like(proto_, i));
    return BinaryForm(std::move(c), proto_);
  }
  BinaryForm derivative_y() const {
    if (is_zero()) return *this;
    long d = degree();
    std::vector<F> c;
    for (long i = 0; i < d; ++i) c.push_back(c_[i] * from_long_like(proto_, d - i));
    return BinaryForm(std::move(c), proto_);
  }

  // largest k with y^k dividing the form (the top nonzero x-power bounds it)
  long y_valuation() const {
    require(!is_zero(), Err::ZeroInput, "valuation of zero form");
    long d = degree();
    for (long i = d; i >= 0; --i)
      if (!c_[i].is_zero()) return d - i;
    return d;
  }

  // f / y^k, k <= y_valuation
  BinaryForm shift_down_y(long k) const {
    std::vector<F> c(c_.begin(), c_.end() - k);
    return BinaryForm(std::move(c), proto_);
  }

  std::vector<F> dehomogenized() const {  // f(x, 1)
    return c_;                            // same coefficients; caller trims
  }

  static BinaryForm from_univariate(std::vector<F> u, long total_degree, const F& proto) {
    uv_trim(u);
    require(static_cast<long>(u.size()) - 1 <= total_degree, Err::Shape,
            "univariate degree exceeds requested homogenization degree");
    u.resize(total_degree + 1, zero_like(proto));
    return BinaryForm(std::move(u), proto);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    long d = degree();
    for (long i = d; i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << c_[i].str() << ")x^" << i << "y^" << (d - i);
      first = false;
    }
    return os.str();
  }

 private:
  void normalize() {
    // zero form stored as empty; otherwise keep declared degree (leading
    // zeros are meaningful for homogeneous forms)
    bool allz = true;
    for (const auto& x : c_)
      if (!x.is_zero()) allz = false;
    if (allz) c_.clear();
  }

  std::vector<F> c_;
  F proto_;
};

// Monic gcd of two binary forms (greatest common homogeneous divisor).
template <class F>
BinaryForm<F> bf_gcd(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  require(!(f.is_zero() && g.is_zero()), Err::ZeroInput, "gcd of two zero forms");
  if (f.is_zero()) return g;  // caller may re-normalize
  if (g.is_zero()) return f;
  long mf = f.y_valuation(), mg = g.y_valuation();
  auto fh = f.shift_down_y(mf), gh = g.shift_down_y(mg);
  auto uf = fh.dehomogenized();
  auto ug = gh.dehomogenized();
  uv_trim(uf);
  uv_trim(ug);
  auto u = uv_gcd(uf, ug);
  long du = uv_deg(u);
  auto core = BinaryForm<F>::from_univariate(u, du, f.proto());
  // multiply by y^min(mf, mg)
  long k = std::min(mf, mg);
  std::vector<F> ycoef(k + 1, zero_like(f.proto()));
  ycoef[0] = one_like(f.proto());
  return core * BinaryForm<F>(std::move(ycoef), f.proto());
}

// Exact division; errors if not divisible.
template <class F>
BinaryForm<F> bf_divide_exact(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  require(!g.is_zero(), Err::ZeroInput, "division by zero form");
  if (f.is_zero()) return f;
  long mg = g.y_valuation();
  auto gh = g.shift_down_y(mg);
  long mf = f.y_valuation();
  require(mf >= mg, Err::Inconsistency, "binary form division not exact (y-valuation)");
  auto fh = f.shift_down_y(mg);
  auto uf = fh.dehomogenized();
  auto ug = gh.dehomogenized();
  uv_trim(uf);
  uv_trim(ug);
  bool exact = false;
  auto q = uv_quot(uf, ug, &exact);
  require(exact, Err::Inconsistency, "binary form division not exact");
  return BinaryForm<F>::from_univariate(q, f.degree() - g.degree(), f.proto());
}

template <class F>
BinaryForm<F> bf_squarefree_part(const BinaryForm<F>& f) {
  require(!f.is_zero(), Err::ZeroInput, "squarefree part of zero form");
  long m = f.y_valuation();
  auto fh = f.shift_down_y(m);
  auto u = fh.dehomogenized();
  uv_trim(u);
  BinaryForm<F> core = BinaryForm<F>::constant(one_like(f.proto()));
  if (uv_deg(u) >= 1) {
    auto g = uv_gcd(u, uv_derivative(u, f.proto()));
    bool exact = false;
    auto sf = uv_quot(u, g, &exact);
    require(exact, Err::Inconsistency, "squarefree division not exact");
    core = BinaryForm<F>::from_univariate(sf, uv_deg(sf), f.proto());
  } else if (uv_deg(u) == 0) {
    core = BinaryForm<F>::constant(one_like(f.proto()));
  }
  if (m > 0) {
    std::vector<F> y(2, zero_like(f.proto()));
    y[0] = one_like(f.proto());  // the form y
    core = core * BinaryForm<F>(std::move(y), f.proto());
  }
  return core;
}

// Number of distinct projective roots, (1:0) and (0:1) included.
template <class F>
long bf_distinct_root_count(const BinaryForm<F>& f) {
  auto sf = bf_squarefree_part(f);
  return sf.is_zero() ? 0 : sf.degree();
}

// Form whose roots are exactly the multiple roots of f.
template <class F>
BinaryForm<F> bf_multiple_root_form(const BinaryForm<F>& f) {
  auto sf = bf_squarefree_part(f);
  auto rest = bf_divide_exact(f, sf);
  if (rest.is_zero() || rest.degree() == 0) return BinaryForm<F>::constant(one_like(f.proto()));
  return bf_squarefree_part(rest);
}

// every root of a is a root of b (a nonzero; constants have no roots)
template <class F>
bool bf_roots_subset(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  auto sa = bf_squarefree_part(a);
  if (sa.degree() == 0) return true;
  if (b.is_zero()) return true;  // zero form vanishes everywhere
  auto g = bf_gcd(sa, b);
  return !g.is_zero() && g.degree() == sa.degree();
}

// Resultant of two binary forms (an element of F), via Sylvester determinant.
template <class F>
F bf_resultant(const BinaryForm<F>& f, const BinaryForm<F>& g);

// ---------------------------------------------------------------------------
// Determinant over a commutative ring (no division): memoized Laplace
// expansion over column subsets. Fine for the sizes used here (n <= 12).

template <class T>
T ring_det(const std::vector<std::vector<T>>& m, const T& zero) {
  size_t n = m.size();
  if (n == 0) return zero;
  std::map<uint32_t, T> memo;
  // det of rows [n-k .. n-1] x columns in mask (popcount k)
  std::function<T(uint32_t)> go = [&](uint32_t mask) -> T {
    int k = __builtin_popcount(mask);
    if (k == 0) {
      // empty determinant = 1... but we need a ring one; build from any entry
      fail(Err::Inconsistency, "ring_det empty mask");
    }
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    size_t row = n - k;
    T acc = zero;
    int sign = 1;
    bool started = false;
    for (size_t col = 0, seen = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      T contrib = zero;
      if (k == 1) {
        contrib = m[row][col];
      } else {
        contrib = m[row][col] * go(mask & ~(1u << col));
      }
      if (sign < 0) contrib = zero - contrib;
      if (!started) {
        acc = contrib;
        started = true;
      } else {
        acc = acc + contrib;
      }
      sign = -sign;
      (void)seen;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return go((n >= 32 ? ~0u : ((1u << n) - 1)));
}

template <class F>
F bf_resultant(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  require(!f.is_zero() && !g.is_zero(), Err::ZeroInput, "resultant with zero form");
  long df = f.degree(), dg = g.degree();
  F zero = zero_like(f.proto());
  if (df == 0) return f.coeff(0).pow(dg);
  if (dg == 0) return g.coeff(0).pow(df);
  size_t n = df + dg;
  std::vector<std::vector<F>> m(n, std::vector<F>(n, zero));
  // rows 0..dg-1: shifted f; rows dg..: shifted g (coefficients by descending x)
  for (long r = 0; r < dg; ++r)
    for (long i = 0; i <= df; ++i) m[r][r + i] = f.coeff(df - i);
  for (long r = 0; r < df; ++r)
    for (long i = 0; i <= dg; ++i) m[dg + r][r + i] = g.coeff(dg - i);
  return ring_det(m, zero);
}

// ---------------------------------------------------------------------------
// Operations on MultiPoly that view it as a form in one homogeneous pair.

// Collect f as a form in variables (i, j): map (a, b) -> coefficient poly
// with the pair's exponents cleared.
template <class F>
std::map<std::pair<int, int>, MultiPoly<F>> collect_pair(const MultiPoly<F>& f, long i, long j) {
  std::map<std::pair<int, int>, MultiPoly<F>> out;
  for (const auto& [e, c] : f.terms()) {
    Exps d = e;
    std::pair<int, int> key(e[i], e[j]);
    d[i] = 0;
    d[j] = 0;
    auto it = out.find(key);
    if (it == out.end()) {
      auto p = MultiPoly<F>::zero(f.vars(), f.proto());
      p.add_term(d, c);
      out.emplace(key, std::move(p));
    } else {
      it->second.add_term(d, c);
    }
  }
  return out;
}

// Sylvester resultant eliminating the homogeneous pair (i, j); f and g must
// be homogeneous in that pair.
template <class F>
MultiPoly<F> resultant_pair(const MultiPoly<F>& f, const MultiPoly<F>& g, long i, long j) {
  require(!f.is_zero() && !g.is_zero(), Err::ZeroInput, "resultant with zero form");
  auto cf = collect_pair(f, i, j);
  auto cg = collect_pair(g, i, j);
  long df = -1, dg = -1;
  for (const auto& [k, p] : cf) {
    long d = k.first + k.second;
    require(df == -1 || df == d, Err::Shape, "resultant input not homogeneous in pair");
    df = d;
  }
  for (const auto& [k, p] : cg) {
    long d = k.first + k.second;
    require(dg == -1 || dg == d, Err::Shape, "resultant input not homogeneous in pair");
    dg = d;
  }
  auto zero = MultiPoly<F>::zero(f.vars(), f.proto());
  auto coeff_of = [&](const std::map<std::pair<int, int>, MultiPoly<F>>& m, long a,
                      long d) -> MultiPoly<F> {
    auto it = m.find({static_cast<int>(a), static_cast<int>(d - a)});
    return it == m.end() ? zero : it->second;
  };
  if (df == 0) {
    // constant in the pair
    MultiPoly<F> acc = MultiPoly<F>::constant(f.vars(), one_like(f.proto()));
    for (long t = 0; t < dg; ++t) acc = acc * coeff_of(cf, 0, 0);
    return acc;
  }
  if (dg == 0) {
    MultiPoly<F> acc = MultiPoly<F>::constant(f.vars(), one_like(f.proto()));
    for (long t = 0; t < df; ++t) acc = acc * coeff_of(cg, 0, 0);
    return acc;
  }
  size_t n = df + dg;
  std::vector<std::vector<MultiPoly<F>>> m(n, std::vector<MultiPoly<F>>(n, zero));
  for (long r = 0; r < dg; ++r)
    for (long t = 0; t <= df; ++t) m[r][r + t] = coeff_of(cf, df - t, df);
  for (long r = 0; r < df; ++r)
    for (long t = 0; t <= dg; ++t) m[dg + r][r + t] = coeff_of(cg, dg - t, dg);
  return ring_det(m, zero);
}

// Sylvester resultant eliminating a single variable, coefficients polynomial
// in the rest. Vanishes at every common zero of f and g (conservative even
// where leading coefficients drop).
template <class F>
MultiPoly<F> resultant_univar(const MultiPoly<F>& f, const MultiPoly<F>& g, long var) {
  require(!f.is_zero() && !g.is_zero(), Err::ZeroInput, "resultant with zero input");
  long df = f.degree_in(var), dg = g.degree_in(var);
  auto zero = MultiPoly<F>::zero(f.vars(), f.proto());
  auto coeff_in = [&](const MultiPoly<F>& p, long k) {
    auto c = MultiPoly<F>::zero(p.vars(), p.proto());
    for (const auto& [e, v] : p.terms()) {
      if (e[var] != k) continue;
      Exps d = e;
      d[var] = 0;
      c.add_term(d, v);
    }
    return c;
  };
  if (df == 0 && dg == 0) return MultiPoly<F>::constant(f.vars(), one_like(f.proto()));
  if (df == 0) return f.pow(dg);
  if (dg == 0) return g.pow(df);
  size_t n = df + dg;
  std::vector<std::vector<MultiPoly<F>>> m(n, std::vector<MultiPoly<F>>(n, zero));
  for (long r = 0; r < dg; ++r)
    for (long t = 0; t <= df; ++t) m[r][r + t] = coeff_in(f, df - t);
  for (long r = 0; r < df; ++r)
    for (long t = 0; t <= dg; ++t) m[dg + r][r + t] = coeff_in(g, dg - t);
  return ring_det(m, zero);
}

// Extract a binary form in the pair (i, j); all other variables must be absent.
template <class F>
BinaryForm<F> as_binary(const MultiPoly<F>& f, long i, long j) {
  if (f.is_zero()) return BinaryForm<F>::zero(f.proto());
  long d = -1;
  for (const auto& [e, c] : f.terms()) {
    long tot = 0;
    for (size_t v = 0; v < e.size(); ++v) {
      if (static_cast<long>(v) == i || static_cast<long>(v) == j) continue;
      require(e[v] == 0, Err::Shape, "as_binary: extra variable present");
    }
    tot = e[i] + e[j];
    require(d == -1 || d == tot, Err::Shape, "as_binary: not homogeneous");
    d = tot;
  }
  std::vector<F> coef(d + 1, zero_like(f.proto()));
  for (const auto& [e, c] : f.terms()) coef[e[i]] = c;
  return BinaryForm<F>(std::move(coef), f.proto());
}

template <class F>
MultiPoly<F> from_binary(const BinaryForm<F>& b, std::shared_ptr<const VarTable> vars, long i,
                         long j, const F& proto) {
  auto p = MultiPoly<F>::zero(vars, proto);
  if (b.is_zero()) return p;
  long d = b.degree();
  for (long a = 0; a <= d; ++a) {
    if (b.coeff(a).is_zero()) continue;
    Exps e(vars->size(), 0);
    e[i] = static_cast<int>(a);
    e[j] = static_cast<int>(d - a);
    p.add_term(e, b.coeff(a));
  }
  return p;
}

// Linear substitution: one square matrix acting on the weight-1 variables in
// table order (row i gives the image of variable i), scalar action on each
// weight-2 variable, weight-0 variables untouched.
template <class F>
MultiPoly<F> substitute_linear(const MultiPoly<F>& f, const std::vector<std::vector<F>>& M,
                               const std::map<std::string, F>& weight2_scalars = {}) {
  const auto& vt = *f.vars();
  std::vector<long> w1;
  for (size_t v = 0; v < vt.size(); ++v)
    if (vt.weights[v] == 1) w1.push_back(static_cast<long>(v));
  require(M.size() == w1.size(), Err::Shape, "substitution matrix size mismatch");
  for (const auto& row : M)
    require(row.size() == w1.size(), Err::Shape, "substitution matrix not square");
  std::vector<MultiPoly<F>> images;
  for (size_t v = 0; v < vt.size(); ++v) {
    if (vt.weights[v] == 1) {
      size_t bi = std::find(w1.begin(), w1.end(), static_cast<long>(v)) - w1.begin();
      auto img = MultiPoly<F>::zero(f.vars(), f.proto());
      for (size_t j = 0; j < w1.size(); ++j) {
        Exps e(vt.size(), 0);
        e[w1[j]] = 1;
        img.add_term(e, M[bi][j]);
      }
      images.push_back(std::move(img));
    } else if (vt.weights[v] == 2) {
      auto it = weight2_scalars.find(vt.names[v]);
      F s = it == weight2_scalars.end() ? one_like(f.proto()) : it->second;
      Exps e(vt.size(), 0);
      e[v] = 1;
      images.push_back(MultiPoly<F>::monomial(f.vars(), e, s));
    } else {
      images.push_back(MultiPoly<F>::variable(f.vars(), v, f.proto()));
    }
  }
  return f.subst(images);
}

// Discriminant of f viewed as univariate of degree d in variable `var`,
// coefficients forms in the other variables. Convention fixed here once:
//   d = 2:  a w^2 + b w + c        ->  b^2 - 4ac
//   d = 3:  a w^3 + b w^2 + c w + e ->  4ac^3 + 27a^2 e^2 + 4b^3 e - b^2 c^2 - 18abce
// so the monic depressed cubic w^3 + p w + q yields 4p^3 + 27q^2 exactly.
template <class F>
MultiPoly<F> discriminant_in(const MultiPoly<F>& f, long var) {
  long d = f.degree_in(var);
  require(d == 2 || d == 3, Err::UnsupportedDegree,
          "discriminant supported for degrees 2 and 3 only");
  std::vector<MultiPoly<F>> coef(d + 1, MultiPoly<F>::zero(f.vars(), f.proto()));
  for (const auto& [e, c] : f.terms()) {
    Exps r = e;
    long k = e[var];
    r[var] = 0;
    coef[k].add_term(r, c);
  }
  if (d == 2) {
    const auto &a = coef[2], &b = coef[1], &c = coef[0];
    auto four = MultiPoly<F>::constant(f.vars(), from_long_like(f.proto(), 4));
    return b * b - four * a * c;
  }
  const auto &a = coef[3], &b = coef[2], &c = coef[1], &e0 = coef[0];
  auto k4 = MultiPoly<F>::constant(f.vars(), from_long_like(f.proto(), 4));
  auto k27 = MultiPoly<F>::constant(f.vars(), from_long_like(f.proto(), 27));
  auto k18 = MultiPoly<F>::constant(f.vars(), from_long_like(f.proto(), 18));
  return k4 * a * c * c * c + k27 * a * a * e0 * e0 + k4 * b * b * b * e0 - b * b * c * c -
         k18 * a * b * c * e0;
}

// Reduce f modulo a single polynomial g under the map's lex term order
// (leading term of g must be divisible-checkable). Used for ideal-membership
// style checks against one relation.
template <class F>
MultiPoly<F> reduce_mod_single(MultiPoly<F> f, const MultiPoly<F>& g) {
  require(!g.is_zero(), Err::ZeroInput, "reduction modulo zero");
  const auto& glead = std::prev(g.terms().end());
  const Exps& ge = glead->first;
  const F& gc = glead->second;
  bool changed = true;
  while (changed && !f.is_zero()) {
    changed = false;
    // scan from leading term down for a reducible term
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      const Exps& fe = it->first;
      bool div = true;
      for (size_t v = 0; v < fe.size(); ++v)
        if (fe[v] < ge[v]) {
          div = false;
          break;
        }
      if (!div) continue;
      Exps q(fe.size());
      for (size_t v = 0; v < fe.size(); ++v) q[v] = fe[v] - ge[v];
      F coef = it->second / gc;
      auto mono = MultiPoly<F>::monomial(f.vars(), q, coef);
      f = f - mono * g;
      changed = true;
      break;
    }
  }
  return f;
}

}  // namespace curveaut

#endif
