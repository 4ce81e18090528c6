#ifndef CURVEAUT_TRANSFORM_HPP
#define CURVEAUT_TRANSFORM_HPP

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "curveaut/error.hpp"
#include "curveaut/linalg.hpp"

namespace curveaut {

// Projective collineation on n variables, n in {2,3,4,5}; stored canonically
// with the first nonzero row-major entry scaled to 1.
template <class F>
struct ProjMap {
  Mat<F> m;
};

// Pair of binary substitutions on the two rulings; swap elements send the
// x-parameters through A applied to y and vice versa. A and B are canonical
// up to independent scalars.
template <class F>
struct BiMoebius {
  Mat<F> a, b;
  bool swap = false;
};

// Weighted-plane map (x,y) -> A(x,y), w -> c w with w of weight 2;
// (A, c) ~ (sA, s^2 c).
template <class F>
struct TrigonalMap {
  Mat<F> a;
  F c;
};

template <class F>
Mat<F> scale_first_nonzero_to_one(const Mat<F>& m, F* scalar_out = nullptr) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) {
        F inv = m.at(i, j).inverse();
        if (scalar_out) *scalar_out = inv;
        return m * inv;
      }
  fail(Err::Shape, "zero matrix has no projective representative");
}

template <class F>
bool is_scalar_matrix(const Mat<F>& m, F* scalar_out = nullptr) {
  if (m.rows() != m.cols()) return false;
  const F& d = m.at(0, 0);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (i == j) {
        if (!(m.at(i, j) == d)) return false;
      } else if (!m.at(i, j).is_zero()) {
        return false;
      }
    }
  if (d.is_zero()) return false;
  if (scalar_out) *scalar_out = d;
  return true;
}

template <class F>
class Element {
 public:
  using Payload = std::variant<ProjMap<F>, BiMoebius<F>, TrigonalMap<F>>;

  Element() = default;

  static Element proj(Mat<F> m) {
    require(m.rows() == m.cols(), Err::Shape, "projective map must be square");
    require(!m.det().is_zero(), Err::Shape, "projective map must be nonsingular");
    Element e;
    e.p_ = ProjMap<F>{scale_first_nonzero_to_one(m)};
    e.make_key();
    return e;
  }
  static Element bimoebius(Mat<F> a, Mat<F> b, bool swap) {
    require(a.rows() == 2 && a.cols() == 2 && b.rows() == 2 && b.cols() == 2, Err::Shape,
            "binary substitution pair must be 2x2");
    require(!a.det().is_zero() && !b.det().is_zero(), Err::Shape,
            "binary substitution must be nonsingular");
    Element e;
    e.p_ = BiMoebius<F>{scale_first_nonzero_to_one(a), scale_first_nonzero_to_one(b), swap};
    e.make_key();
    return e;
  }
  static Element trigonal(Mat<F> a, F c) {
    require(a.rows() == 2 && a.cols() == 2, Err::Shape, "trigonal base action must be 2x2");
    require(!a.det().is_zero() && !c.is_zero(), Err::Shape, "trigonal map must be nonsingular");
    Element e;
    F s = zero_like(c);
    Mat<F> ac = scale_first_nonzero_to_one(a, &s);
    e.p_ = TrigonalMap<F>{std::move(ac), c * s * s};
    e.make_key();
    return e;
  }

  const std::string& key() const { return key_; }
  bool operator==(const Element& o) const { return key_ == o.key_; }
  bool operator!=(const Element& o) const { return key_ != o.key_; }

  bool is_proj() const { return std::holds_alternative<ProjMap<F>>(p_); }
  bool is_bimoebius() const { return std::holds_alternative<BiMoebius<F>>(p_); }
  bool is_trigonal() const { return std::holds_alternative<TrigonalMap<F>>(p_); }
  const ProjMap<F>& proj_payload() const { return std::get<ProjMap<F>>(p_); }
  const BiMoebius<F>& bimoebius_payload() const { return std::get<BiMoebius<F>>(p_); }
  const TrigonalMap<F>& trigonal_payload() const { return std::get<TrigonalMap<F>>(p_); }

  size_t dimension() const {
    if (is_proj()) return proj_payload().m.rows();
    return 2;
  }

  Element identity_like() const {
    if (is_proj()) {
      return proj(Mat<F>::identity(proj_payload().m.rows(), zero_like(proj_payload().m.at(0, 0))));
    }
    if (is_bimoebius()) {
      F z = zero_like(bimoebius_payload().a.at(0, 0));
      return bimoebius(Mat<F>::identity(2, z), Mat<F>::identity(2, z), false);
    }
    F z = zero_like(trigonal_payload().c);
    return trigonal(Mat<F>::identity(2, z), one_like(z));
  }

  bool is_identity() const { return *this == identity_like(); }

  std::string str() const { return key_; }

 private:
  void make_key() {
    std::ostringstream os;
    if (is_proj()) {
      const auto& m = proj_payload().m;
      os << "P" << m.rows() << ":";
      for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
          if (m.at(i, j).is_zero()) continue;
          os << i << "," << j << "=" << m.at(i, j).str() << ";";
        }
    } else if (is_bimoebius()) {
      const auto& p = bimoebius_payload();
      os << "B" << (p.swap ? "s" : "n") << ":";
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
          if (!p.a.at(i, j).is_zero()) os << "a" << i << j << "=" << p.a.at(i, j).str() << ";";
          if (!p.b.at(i, j).is_zero()) os << "b" << i << j << "=" << p.b.at(i, j).str() << ";";
        }
    } else {
      const auto& p = trigonal_payload();
      os << "T:";
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
          if (!p.a.at(i, j).is_zero()) os << i << j << "=" << p.a.at(i, j).str() << ";";
      os << "c=" << p.c.str();
    }
    key_ = os.str();
  }

  Payload p_;
  std::string key_;
};

// g after h: (g*h)(P) = g(h(P)).
template <class F>
Element<F> compose(const Element<F>& g, const Element<F>& h) {
  require(g.is_proj() == h.is_proj() && g.is_bimoebius() == h.is_bimoebius(), Err::Shape,
          "composing transformations of different kinds");
  if (g.is_proj()) {
    require(g.dimension() == h.dimension(), Err::Shape, "composing maps of different dimension");
    return Element<F>::proj(g.proj_payload().m * h.proj_payload().m);
  }
  if (g.is_bimoebius()) {
    const auto& x = g.bimoebius_payload();
    const auto& y = h.bimoebius_payload();
    bool swap = x.swap != y.swap;
    // g1=(A1,B1,s1) after g2=(A2,B2,s2): s2=0 -> (A1A2, B1B2); s2=1 pushes
    // g2's swap outward: factor-wise result is (A1B2, B1A2) when s1=1.
    if (!x.swap) {
      return Element<F>::bimoebius(x.a * y.a, x.b * y.b, swap);
    }
    return Element<F>::bimoebius(x.a * y.b, x.b * y.a, swap);
  }
  const auto& x = g.trigonal_payload();
  const auto& y = h.trigonal_payload();
  return Element<F>::trigonal(x.a * y.a, x.c * y.c);
}

template <class F>
Element<F> inverse(const Element<F>& g) {
  if (g.is_proj()) return Element<F>::proj(g.proj_payload().m.inverse());
  if (g.is_bimoebius()) {
    const auto& p = g.bimoebius_payload();
    if (!p.swap) return Element<F>::bimoebius(p.a.inverse(), p.b.inverse(), false);
    // swap: x' = A y, y' = B x inverts to x = B^{-1} y', y = A^{-1} x'
    return Element<F>::bimoebius(p.b.inverse(), p.a.inverse(), true);
  }
  const auto& p = g.trigonal_payload();
  return Element<F>::trigonal(p.a.inverse(), p.c.inverse());
}

template <class F>
struct OrderResult {
  long order = 0;
  // scalar witnesses for raw_power(order) = scalar * identity: one entry for
  // ProjMap, the two factor scalars for BiMoebius, (matrix scalar, fiber
  // scalar) for TrigonalMap.
  std::vector<F> scalars;
};

template <class F>
OrderResult<F> projective_order(const Element<F>& g, long cap = 256) {
  if (g.is_proj()) {
    const Mat<F>& base = g.proj_payload().m;
    Mat<F> acc = base;
    for (long m = 1; m <= cap; ++m) {
      F s = zero_like(acc.at(0, 0));
      if (is_scalar_matrix(acc, &s)) return {m, {s}};
      acc = acc * base;
    }
  } else if (g.is_bimoebius()) {
    const auto& p = g.bimoebius_payload();
    Mat<F> a = p.a, b = p.b;
    bool swap = p.swap;
    for (long m = 1; m <= cap; ++m) {
      F sa = zero_like(a.at(0, 0)), sb = sa;
      if (!swap && is_scalar_matrix(a, &sa) && is_scalar_matrix(b, &sb)) return {m, {sa, sb}};
      // acc = acc ∘ g
      if (!swap) {
        a = a * p.a;
        b = b * p.b;
      } else {
        Mat<F> na = a * p.b;
        Mat<F> nb = b * p.a;
        a = std::move(na);
        b = std::move(nb);
      }
      swap = (swap != p.swap);
    }
  } else {
    const auto& p = g.trigonal_payload();
    Mat<F> a = p.a;
    F c = p.c;
    for (long m = 1; m <= cap; ++m) {
      F s = zero_like(c);
      // weighted identity: a = s*I with fiber scalar s^2
      if (is_scalar_matrix(a, &s) && c == s * s) return {m, {s, c}};
      a = a * p.a;
      c = c * p.c;
    }
  }
  fail(Err::OrderCap, "projective order exceeds cap");
}

// A representative with raw_matrix^order == identity exactly.
template <class F>
struct Normalized {
  Mat<F> m;
  long order = 1;
};

// Rescale a finite-order projective map by a session root of unity so its
// order-th power is the identity matrix on the nose. Requires the fields'
// roots of unity to contain a suitable scalar.
template <class F>
Normalized<F> normalize_finite(const Element<F>& g, long cap = 256) {
  require(g.is_proj(), Err::Shape, "normalize_finite expects a projective map");
  auto ord = projective_order(g, cap);
  const Mat<F>& m = g.proj_payload().m;
  F c = ord.scalars[0];
  F one = one_like(c);
  for (const F& s : session_roots(c)) {
    F sm = one;
    for (long t = 0; t < ord.order; ++t) sm = sm * s;
    if (sm * c == one) return {m * s, ord.order};
  }
  fail(Err::FieldTooSmall,
       "no session root of unity rescales the order scalar to 1; raise the session index");
}

template <class F>
struct EigenPair {
  F value;
  std::vector<std::vector<F>> basis;
};

// Exact eigen decomposition of a normalized finite-order map: eigenvalues
// range over the order-th roots of unity; finite order in characteristic 0
// guarantees the eigenspace dimensions fill the ambient space.
template <class F>
std::vector<EigenPair<F>> eigen_split(const Normalized<F>& g) {
  size_t n = g.m.rows();
  F proto = zero_like(g.m.at(0, 0));
  std::vector<EigenPair<F>> out;
  size_t total = 0;
  for (const F& lam : kth_roots(g.m.at(0, 0), g.order)) {
    Mat<F> shifted = g.m;
    for (size_t i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - lam;
    auto basis = shifted.kernel();
    if (basis.empty()) continue;
    total += basis.size();
    out.push_back({lam, std::move(basis)});
  }
  require(total == n, Err::Inconsistency,
          "eigenspace dimensions do not fill the space (map not diagonalizable in field)");
  (void)proto;
  return out;
}

// Space collineation induced on the quadric xz = yw by a ruling pair, in the
// coordinate order (x, y, z, w) with x = x2 y1, y = x1 y1, z = x1 y2,
// w = x2 y2.
template <class F>
Element<F> bimoebius_to_proj(const Element<F>& g) {
  require(g.is_bimoebius(), Err::Shape, "expected a ruling pair");
  const auto& p = g.bimoebius_payload();
  F z = zero_like(p.a.at(0, 0));
  // coordinate index of the monomial x_i y_j (1-based i, j)
  auto idx = [](int i, int j) -> size_t {
    if (i == 2 && j == 1) return 0;  // x
    if (i == 1 && j == 1) return 1;  // y
    if (i == 1 && j == 2) return 2;  // z
    return 3;                        // w
  };
  Mat<F> m(4, 4, z);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          F coef = p.a.at(i - 1, k - 1) * p.b.at(j - 1, l - 1);
          if (coef.is_zero()) continue;
          size_t row = idx(i, j);
          size_t col = p.swap ? idx(l, k) : idx(k, l);
          m.at(row, col) = m.at(row, col) + coef;
        }
  return Element<F>::proj(std::move(m));
}

}  // namespace curveaut

#endif
