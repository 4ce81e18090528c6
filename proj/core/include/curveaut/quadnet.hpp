#ifndef CURVEAUT_QUADNET_HPP
#define CURVEAUT_QUADNET_HPP

#include <array>
#include <optional>
#include <vector>

#include "curveaut/fixedpoints.hpp"
#include "curveaut/models.hpp"

namespace curveaut {

// Discriminant quintic of the net: det(l1 A1 + l2 A2 + l3 A3) over the
// lambda plane.
template <class F>
MultiPoly<F> delta5(const QuadricNetModel<F>& net) {
  auto vt = VarTable::make({"l1", "l2", "l3"});
  F proto = zero_like(net.a1.at(0, 0));
  auto lin = [&](int which) {
    Exps e(3, 0);
    e[which] = 1;
    return e;
  };
  std::vector<std::vector<MultiPoly<F>>> m(5, std::vector<MultiPoly<F>>(5,
                                              MultiPoly<F>::zero(vt, proto)));
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) {
      auto p = MultiPoly<F>::zero(vt, proto);
      if (!net.a1.at(i, j).is_zero()) p.add_term(lin(0), net.a1.at(i, j));
      if (!net.a2.at(i, j).is_zero()) p.add_term(lin(1), net.a2.at(i, j));
      if (!net.a3.at(i, j).is_zero()) p.add_term(lin(2), net.a3.at(i, j));
      m[i][j] = std::move(p);
    }
  return ring_det(m, MultiPoly<F>::zero(vt, proto));
}

// The ten 3x3 minors of the 3x5 Jacobian, indexed by the column 3-subsets in
// lexicographic order; each a cubic in x1..x5.
template <class F>
std::vector<MultiPoly<F>> jacobian_minors(const QuadricNetModel<F>& net) {
  auto eqs = net_equations(net);
  auto vt = eqs[0].vars();
  F proto = eqs[0].proto();
  // partial derivative matrix rows
  std::vector<std::vector<MultiPoly<F>>> jac(3);
  for (int i = 0; i < 3; ++i)
    for (int v = 0; v < 5; ++v) jac[i].push_back(eqs[i].derivative(v));
  std::vector<MultiPoly<F>> minors;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        std::vector<std::vector<MultiPoly<F>>> sub(3);
        for (int i = 0; i < 3; ++i) sub[i] = {jac[i][a], jac[i][b], jac[i][c]};
        minors.push_back(ring_det(sub, MultiPoly<F>::zero(vt, proto)));
      }
  return minors;
}

// q = c * prod(factors): returns c, or fails with the residual attached.
template <class F>
F verify_factorization(const MultiPoly<F>& q, const std::vector<MultiPoly<F>>& factors) {
  require(!q.is_zero(), Err::ZeroInput, "factorization of the zero form");
  long dq = 0;
  for (const auto& [e, c] : q.terms()) {
    long t = 0;
    for (int x : e) t += x;
    dq = std::max(dq, t);
  }
  auto prod = MultiPoly<F>::constant(q.vars(), one_like(q.proto()));
  long dsum = 0;
  for (const auto& f : factors) {
    require(!f.is_zero(), Err::ZeroInput, "zero factor supplied");
    prod = prod * f;
    long df = 0;
    for (const auto& [e, c] : f.terms()) {
      long t = 0;
      for (int x : e) t += x;
      df = std::max(df, t);
    }
    dsum += df;
  }
  require(dsum == dq, Err::Input, "factor degrees do not sum to the quintic degree");
  auto lam = proportionality(prod, q);
  require(lam.has_value(), Err::Invariance,
          "factor product does not match; residual " + (q - prod).str());
  return *lam;
}

struct SplitClassification {
  int case_number = 1;            // 1..7
  long root_form_systems = 0;     // the per-case count
  std::vector<std::vector<int>> blocks;  // variable partition found
};

// Classify the net by the variable-support blocks of its three quadrics
// (after an optional declared change of basis).
template <class F>
SplitClassification classify_split(const QuadricNetModel<F>& net,
                                   const std::optional<Mat<F>>& basis_change = std::nullopt,
                                   long supplied_double_points = 0) {
  Mat<F> a1 = net.a1, a2 = net.a2, a3 = net.a3;
  if (basis_change) {
    require(!basis_change->det().is_zero(), Err::Input, "declared basis change not invertible");
    const Mat<F>& s = *basis_change;
    a1 = s.transpose() * a1 * s;
    a2 = s.transpose() * a2 * s;
    a3 = s.transpose() * a3 * s;
  }
  // union-find over shared off-diagonal support
  std::array<int, 5> parent{0, 1, 2, 3, 4};
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const Mat<F>* a : {&a1, &a2, &a3})
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j && !a->at(i, j).is_zero()) unite(i, j);
  std::map<int, std::vector<int>> comp;
  for (int i = 0; i < 5; ++i) comp[find(i)].push_back(i);
  std::vector<int> sizes;
  SplitClassification out;
  for (auto& [root, vars] : comp) {
    sizes.push_back(static_cast<int>(vars.size()));
    out.blocks.push_back(vars);
  }
  std::sort(sizes.begin(), sizes.end());
  auto eq = [&](std::vector<int> want) { return sizes == want; };
  if (eq({5})) {
    out.case_number = 1;
    out.root_form_systems = supplied_double_points;
  } else if (eq({1, 4})) {
    out.case_number = 2;
    out.root_form_systems = 4 + supplied_double_points;
  } else if (eq({2, 3})) {
    out.case_number = 3;
    out.root_form_systems = 6 + supplied_double_points;
  } else if (eq({1, 1, 3})) {
    out.case_number = 4;
    out.root_form_systems = 7;
  } else if (eq({1, 2, 2})) {
    out.case_number = 5;
    out.root_form_systems = 8;
  } else if (eq({1, 1, 1, 2})) {
    out.case_number = 6;
    out.root_form_systems = 9;
  } else {
    out.case_number = 7;
    out.root_form_systems = 10;
  }
  return out;
}

// Basis of the 2-dimensional subspace of the net whose members have zero
// coefficient on x_k^2.
template <class F>
std::pair<Mat<F>, Mat<F>> eliminate_square(const QuadricNetModel<F>& net, int k) {
  require(k >= 0 && k < 5, Err::Input, "variable index out of range");
  F c1 = net.a1.at(k, k), c2 = net.a2.at(k, k), c3 = net.a3.at(k, k);
  require(!(c1.is_zero() && c2.is_zero() && c3.is_zero()), Err::Elimination,
          "the chosen square does not appear in the net (only cross terms)");
  // kernel of the 1x3 map (u, v, w) -> u c1 + v c2 + w c3
  F proto = zero_like(c1);
  Mat<F> row(1, 3, proto);
  row.at(0, 0) = c1;
  row.at(0, 1) = c2;
  row.at(0, 2) = c3;
  auto ker = row.kernel();
  require(ker.size() == 2, Err::Elimination, "elimination subspace has wrong dimension");
  auto combine = [&](const std::vector<F>& v) {
    Mat<F> m(5, 5, proto);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 5; ++j)
        m.at(i, j) =
            v[0] * net.a1.at(i, j) + v[1] * net.a2.at(i, j) + v[2] * net.a3.at(i, j);
    return m;
  };
  return {combine(ker[0]), combine(ker[1])};
}

// Kernel direction of the pencil matrix at a smooth point of the
// discriminant, with the cofactor proportionality x_i x_k = rho U_ik checked.
template <class F>
std::vector<F> correspondence_check(const QuadricNetModel<F>& net, const std::vector<F>& lambda) {
  require(lambda.size() == 3, Err::Input, "lambda point must have three coordinates");
  F proto = zero_like(net.a1.at(0, 0));
  Mat<F> p(5, 5, proto);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      p.at(i, j) = lambda[0] * net.a1.at(i, j) + lambda[1] * net.a2.at(i, j) +
                   lambda[2] * net.a3.at(i, j);
  require(p.det().is_zero(), Err::Input, "lambda does not lie on the discriminant");
  size_t rank = p.rank();
  require(rank == 4, Err::Rank, "pencil matrix rank below 4 (double point of the discriminant)");
  auto ker = p.kernel();
  require(ker.size() == 1, Err::Rank, "kernel not one-dimensional");
  std::vector<F> x = ker[0];
  // cofactors U_ik: signed 4x4 minors
  auto minor = [&](size_t di, size_t dj) {
    std::vector<std::vector<F>> rows;
    for (size_t i = 0; i < 5; ++i) {
      if (i == di) continue;
      std::vector<F> r;
      for (size_t j = 0; j < 5; ++j) {
        if (j == dj) continue;
        r.push_back(p.at(i, j));
      }
      rows.push_back(r);
    }
    F d = Mat<F>::from_rows(rows).det();
    return ((di + dj) % 2 == 0) ? d : -d;
  };
  // find a normalization: some x_i x_k with nonzero cofactor
  std::optional<F> rho;
  for (size_t i = 0; i < 5 && !rho; ++i)
    for (size_t k = 0; k < 5 && !rho; ++k) {
      F u = minor(i, k);
      if (!u.is_zero() && !x[i].is_zero() && !x[k].is_zero()) rho = (x[i] * x[k]) / u;
    }
  require(rho.has_value(), Err::Inconsistency, "all cofactors vanish at a rank-4 point");
  for (size_t i = 0; i < 5; ++i)
    for (size_t k = 0; k < 5; ++k) {
      F u = minor(i, k);
      require(x[i] * x[k] == *rho * u, Err::Inconsistency,
              "cofactor proportionality x_i x_k = rho U_ik fails");
    }
  return x;
}

}  // namespace curveaut

#endif
