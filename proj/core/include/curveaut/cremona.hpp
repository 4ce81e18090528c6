#ifndef CURVEAUT_CREMONA_HPP
#define CURVEAUT_CREMONA_HPP

#include <array>
#include <optional>
#include <vector>

#include "curveaut/models.hpp"

namespace curveaut {

// Either a plane collineation or the standard quadratic transform based at
// three marked points of the curve.
template <class F>
struct CremonaStep {
  std::optional<Element<F>> collineation;
  std::optional<std::array<int, 3>> quad_base;  // indices into the marked set
};

template <class F>
std::vector<F> normalize_point(std::vector<F> p) {
  for (auto& c : p)
    if (!c.is_zero()) {
      F inv = c.inverse();
      for (auto& x : p) x = x * inv;
      return p;
    }
  fail(Err::Input, "zero point");
}

template <class F>
bool same_point(const std::vector<F>& a, const std::vector<F>& b) {
  return normalize_point(a) == normalize_point(b);
}

// Proper transform of the curve under the standard quadratic map based at
// three non-collinear marked points.
template <class F>
PlaneNodalModel<F> std_quad_transform(const PlaneNodalModel<F>& curve,
                                      const std::array<std::vector<F>, 3>& base) {
  F proto = curve.form.proto();
  Mat<F> t(3, 3, zero_like(proto));
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) t.at(r, c) = base[c][r];
  require(!t.det().is_zero(), Err::Input, "base points are collinear");
  Mat<F> tinv = t.inverse();
  auto vt = curve.form.vars();
  auto subst_by = [&](const MultiPoly<F>& f, const Mat<F>& m) {
    std::vector<std::vector<F>> rows(3, std::vector<F>(3, zero_like(proto)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rows[i][j] = m.at(i, j);
    return substitute_linear(f, rows);
  };
  // conjugate the base triangle to the coordinate triangle
  auto f1 = subst_by(curve.form, t);
  long m = 0;
  for (const auto& [e, c] : f1.terms()) m = std::max<long>(m, e[0] + e[1] + e[2]);
  std::array<long, 3> mu;
  std::vector<std::vector<F>> corners{{one_like(proto), zero_like(proto), zero_like(proto)},
                                      {zero_like(proto), one_like(proto), zero_like(proto)},
                                      {zero_like(proto), zero_like(proto), one_like(proto)}};
  for (int i = 0; i < 3; ++i) mu[i] = multiplicity_at(f1, corners[i]);
  // substitute (x, y, z) <- (yz, zx, xy)
  auto x = MultiPoly<F>::variable(vt, 0, proto);
  auto y = MultiPoly<F>::variable(vt, 1, proto);
  auto z = MultiPoly<F>::variable(vt, 2, proto);
  auto g = f1.subst({y * z, z * x, x * y});
  // strip the exceptional factors exactly
  std::array<int, 3> minexp{1 << 20, 1 << 20, 1 << 20};
  for (const auto& [e, c] : g.terms())
    for (int v = 0; v < 3; ++v) minexp[v] = std::min(minexp[v], e[v]);
  for (int v = 0; v < 3; ++v)
    require(minexp[v] == mu[v], Err::Inconsistency,
            "exceptional factor exponent does not match the base multiplicity");
  MultiPoly<F> stripped(vt, proto);
  for (const auto& [e, c] : g.terms()) {
    Exps d = e;
    for (int v = 0; v < 3; ++v) d[v] -= static_cast<int>(mu[v]);
    stripped.add_term(d, c);
  }
  long newdeg = 0;
  for (const auto& [e, c] : stripped.terms()) newdeg = std::max<long>(newdeg, e[0] + e[1] + e[2]);
  require(newdeg == 2 * m - mu[0] - mu[1] - mu[2], Err::Inconsistency,
          "degree bookkeeping violated by the proper transform");
  // conjugate back
  auto f2 = subst_by(stripped, tinv);
  // rebuild the marked set
  PlaneNodalModel<F> out;
  out.form = f2;
  for (int i = 0; i < 3; ++i) {
    long mm = multiplicity_at(f2, base[i]);
    if (mm >= 2) out.marked.push_back({base[i], mm});
  }
  for (const auto& p : curve.marked) {
    bool is_base = false;
    for (int i = 0; i < 3; ++i)
      if (same_point(p.point, base[i])) is_base = true;
    if (is_base) continue;
    // image under the conjugated quadratic map
    auto q = tinv.apply(p.point);
    require(!q[0].is_zero() && !q[1].is_zero() && !q[2].is_zero(), Err::Input,
            "marked point lies on an exceptional line of the transform");
    std::vector<F> sq{q[1] * q[2], q[2] * q[0], q[0] * q[1]};
    auto img = normalize_point(t.apply(sq));
    long mm = multiplicity_at(f2, img);
    require(mm >= 2, Err::Inconsistency, "transformed marked point lost its singularity");
    out.marked.push_back({img, mm});
  }
  return out;
}

// Permutation of the five special pencils (four node pencils + the conic
// pencil, index 4) induced by a Cremona step preserving the curve.
template <class F>
std::vector<int> induced_pencil_permutation(const PlaneNodalModel<F>& curve,
                                            const CremonaStep<F>& step) {
  require(curve.marked.size() == 4, Err::Input, "pencil tracking needs exactly four nodes");
  std::vector<int> perm(5, -1);
  if (step.collineation) {
    invariance(curve, *step.collineation);  // throws when not preserved
    const Mat<F>& m = step.collineation->proj_payload().m;
    for (int i = 0; i < 4; ++i) {
      auto img = m.apply(curve.marked[i].point);
      int target = -1;
      for (int j = 0; j < 4; ++j)
        if (same_point(img, curve.marked[j].point)) target = j;
      require(target >= 0, Err::Invariance, "collineation does not permute the marked nodes");
      perm[i] = target;
    }
    perm[4] = 4;  // conics through all four nodes map to themselves
    return perm;
  }
  require(step.quad_base.has_value(), Err::Input, "empty Cremona step");
  auto [a, b, c] = *step.quad_base;
  std::array<std::vector<F>, 3> base{curve.marked[a].point, curve.marked[b].point,
                                     curve.marked[c].point};
  auto image = std_quad_transform(curve, base);
  auto lam = proportionality(curve.form, image.form);
  require(lam.has_value(), Err::Invariance, "quadratic transform does not preserve the curve");
  // base-node pencils stay; the omitted node pencil swaps with the conic one
  int omitted = 0 + 1 + 2 + 3 - a - b - c;
  // the fourth node must be preserved as a point set
  bool fourth_fixed = false;
  for (const auto& p : image.marked)
    if (same_point(p.point, curve.marked[omitted].point)) fourth_fixed = true;
  require(fourth_fixed, Err::Invariance, "transform moved the omitted node");
  for (int i = 0; i < 5; ++i) perm[i] = i;
  perm[omitted] = 4;
  perm[4] = omitted;
  return perm;
}

// Check every generator preserves the curve and that the induced pencil
// permutations close to the stated order.
template <class F>
long verify_pencil_action(const PlaneNodalModel<F>& curve,
                          const std::vector<CremonaStep<F>>& steps) {
  std::vector<std::vector<int>> perms;
  for (const auto& s : steps) perms.push_back(induced_pencil_permutation(curve, s));
  return perm_closure_order(perms);
}

}  // namespace curveaut

#endif
