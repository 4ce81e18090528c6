#include "doctest.h"

#include "curveaut/cyclotomic.hpp"
#include "curveaut/poly.hpp"

#include <random>

using namespace curveaut;

static const CycField* F = CycField::get(120);
using P = MultiPoly<CycNum>;
using BF = BinaryForm<CycNum>;

static CycNum cn(long v) { return CycNum::from_int(F, v); }
static CycNum cone() { return CycNum::one(F); }
static CycNum czero() { return CycNum::zero(F); }

static BF bf(std::vector<long> coeffs) {
  std::vector<CycNum> c;
  for (long v : coeffs) c.push_back(cn(v));
  return BF(std::move(c), czero());
}

TEST_CASE("binary gcd basics") {
  // gcd(x^2 - y^2, x - y) = x - y (monic)
  auto f = bf({-1, 0, 1});  // -y^2 + x^2
  auto g = bf({-1, 1});     // -y + x
  auto d = bf_gcd(f, g);
  CHECK(d == bf({-1, 1}));

  // gcd(x^2 + y^2, x - y) = 1
  auto h = bf({1, 0, 1});
  CHECK(bf_gcd(h, g).degree() == 0);

  // repeated factors of f = x^3 y^3: gcd against the partial-derivative pair
  std::vector<CycNum> c(7, czero());
  c[3] = cone();  // x^3 y^3
  BF f2(c, czero());
  auto d2 = bf_gcd(f2, bf_gcd(f2.derivative_x(), f2.derivative_y()));
  CHECK(d2.degree() == 4);  // x^2 y^2
  std::vector<CycNum> xy(3, czero());
  xy[1] = cone();  // x y
  CHECK(bf_divide_exact(f2, d2) == BF(xy, czero()));
  CHECK(bf_distinct_root_count(f2) == 2);
}

TEST_CASE("distinct root counts") {
  std::vector<CycNum> c(4, czero());
  c[3] = cone();  // x^3
  CHECK(bf_distinct_root_count(BF(c, czero())) == 1);

  auto s = bf({1, 0, 0, 0, 0, 0, 1});  // x^6 + y^6
  CHECK(bf_distinct_root_count(s) == 6);

  // x*z*(x^10 + 11 x^5 z^5 - z^10), degree 12, as binary form in (x, z)
  std::vector<CycNum> b(13, czero());
  // x * z * (x^10 + 11 x^5 z^5 - z^10) = x^11 z + 11 x^6 z^6 - x z^11
  b[11] = cone();
  b[6] = cn(11);
  b[1] = cn(-1);
  BF branch(b, czero());
  CHECK(bf_distinct_root_count(branch) == 12);
}

TEST_CASE("multiple root form and subsets") {
  // f = (x - y)^2 (x + y): multiple roots exactly {x = y}
  auto f = bf({-1, 1}) * bf({-1, 1}) * bf({1, 1});
  auto m = bf_multiple_root_form(f);
  CHECK(m.degree() == 1);
  CHECK(bf_roots_subset(m, bf({-1, 1})));
  CHECK_FALSE(bf_roots_subset(bf({-1, 1}), bf({1, 1})));
}

TEST_CASE("multipoly substitution and homogeneity") {
  auto vt = VarTable::make({"x", "y"});
  auto x = P::variable(vt, 0, czero());
  auto y = P::variable(vt, 1, czero());
  auto f = x.pow(4);
  auto i = CycNum::root(F, 4, 1);
  // x -> i x
  auto g = substitute_linear(f, {{i, czero()}, {czero(), cone()}});
  CHECK(g == f);
  CHECK(f.is_homogeneous());
}

TEST_CASE("space form invariance under weighted substitution") {
  // z^3 y^2 + z y^4 + x^5 under (x, y, z) -> (eps x, -y, z), plain 3-var form
  auto vt = VarTable::make({"x", "y", "z"});
  auto x = P::variable(vt, 0, czero());
  auto y = P::variable(vt, 1, czero());
  auto z = P::variable(vt, 2, czero());
  auto f = z.pow(3) * y.pow(2) + z * y.pow(4) + x.pow(5);
  auto eps = CycNum::root(F, 5, 1);
  auto g = substitute_linear(
      f, {{eps, czero(), czero()}, {czero(), cn(-1), czero()}, {czero(), czero(), cone()}});
  CHECK(g == f);
}

TEST_CASE("resultants") {
  // Res(x - y, x + y) -> 2y | y=1 normalization: the binary resultant is 2
  auto rb = bf_resultant(bf({-1, 1}), bf({1, 1}));
  CHECK(rb == cn(2));
  // and as a pair-resultant with y carried as a parameter variable
  auto vt = VarTable::make({"x", "u", "y"});
  auto x = P::variable(vt, 0, czero());
  auto u = P::variable(vt, 1, czero());
  auto y = P::variable(vt, 2, czero());
  // forms homogeneous of degree 1 in the pair (x, u); u plays the projective
  // partner so y survives as the parameter
  auto r = resultant_pair(x - y * u, x + y * u, 0, 1);
  CHECK(r == P::constant(vt, cn(2)) * y);
}

TEST_CASE("pair resultant with coefficient forms") {
  // Res over (y1,y2) of the two y-partials of x1^3 y1^3 + x1^3 y2^3 + x2^3 y1^3 + a^3 x2^3 y2^3
  // equals (up to scalar) (x1^3 + x2^3)^2 (x1^3 + a^3 x2^3)^2, degree 12.
  auto vt = VarTable::make({"x1", "x2", "y1", "y2"});
  auto x1 = P::variable(vt, 0, czero());
  auto x2 = P::variable(vt, 1, czero());
  auto y1 = P::variable(vt, 2, czero());
  auto y2 = P::variable(vt, 3, czero());
  auto a3 = cn(8);  // a = 2
  auto f = x1.pow(3) * y1.pow(3) + x1.pow(3) * y2.pow(3) + x2.pow(3) * y1.pow(3) +
           (x2.pow(3) * y2.pow(3)) * a3;
  auto fy1 = f.derivative(2);
  auto fy2 = f.derivative(3);
  auto res = resultant_pair(fy1, fy2, 2, 3);
  CHECK(!res.is_zero());
  CHECK(res.degree_in(0) + res.degree_in(1) >= 12);
  auto expected = (x1.pow(3) + x2.pow(3)).pow(2) * (x1.pow(3) + x2.pow(3) * a3).pow(2);
  // res = c * expected for a constant c: verify proportionality
  auto lead_res = res.terms().begin()->second;
  auto lead_exp = expected.terms().begin()->second;
  CHECK(res * lead_exp == expected * lead_res);
}

TEST_CASE("resultant of quadratic and linear") {
  // Res(x^2 + z^2, x - z) = 2 z^2; binary version with z = 1 gives 2
  auto rb = bf_resultant(bf({1, 0, 1}), bf({-1, 1}));
  CHECK(rb == cn(2));
}

TEST_CASE("randomized resultant/gcd contract") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<CycNum> fc, gc;
    for (int i = 0; i < 4; ++i) fc.push_back(cn(coef(rng)));
    for (int i = 0; i < 4; ++i) gc.push_back(cn(coef(rng)));
    BF f(fc, czero()), g(gc, czero());
    if (f.is_zero() || g.is_zero()) continue;
    auto res = bf_resultant(f, g);
    auto d = bf_gcd(f, g);
    bool share = d.degree() > 0;
    // resultant zero iff common root, provided neither leading coefficient
    // pattern degenerates: with full-degree dense forms this is exact.
    CHECK(res.is_zero() == share);
    // gcd divides both
    CHECK(bf_divide_exact(f, d) * d == f);
    CHECK(bf_divide_exact(g, d) * d == g);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("discriminant conventions") {
  auto vt = VarTable::make({"w", "b", "c"}, {2, 1, 1});
  auto w = P::variable(vt, 0, czero());
  auto b = P::variable(vt, 1, czero());
  auto c = P::variable(vt, 2, czero());
  auto f = w * w + b * w + c;
  auto disc = discriminant_in(f, 0);
  CHECK(disc == b * b - P::constant(vt, cn(4)) * c);

  // w^3 + y^4 w + x^5 -> 4 y^12 + 27 x^10, squarefree
  auto vt2 = VarTable::make({"w", "x", "y"}, {2, 1, 1});
  auto w2 = P::variable(vt2, 0, czero());
  auto x2 = P::variable(vt2, 1, czero());
  auto y2 = P::variable(vt2, 2, czero());
  auto f2 = w2.pow(3) + y2.pow(4) * w2 + x2.pow(5);
  auto d2 = discriminant_in(f2, 0);
  auto expect = P::constant(vt2, cn(4)) * y2.pow(12) + P::constant(vt2, cn(27)) * x2.pow(10);
  CHECK(d2 == expect);
  // squarefree: check both dehomogenizations have no repeated roots
  auto at_y1 = d2.eval_partial({{2, cone()}});
  std::vector<CycNum> ux(11, czero());
  for (const auto& [e, c] : at_y1.terms()) ux[e[1]] = c;
  uv_trim(ux);
  CHECK(uv_deg(uv_gcd(ux, uv_derivative(ux, czero()))) == 0);
  auto at_x1 = d2.eval_partial({{1, cone()}});
  std::vector<CycNum> uy(13, czero());
  for (const auto& [e, c] : at_x1.terms()) uy[e[2]] = c;
  uv_trim(uy);
  CHECK(uv_deg(uv_gcd(uy, uv_derivative(uy, czero()))) == 0);
}

TEST_CASE("substitution is a monoid action (randomized)") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto vt = VarTable::make({"x", "y"});
  auto x = P::variable(vt, 0, czero());
  auto y = P::variable(vt, 1, czero());
  for (int iter = 0; iter < 40; ++iter) {
    auto f = x * x * cn(coef(rng)) + x * y * cn(coef(rng)) + y * y * cn(coef(rng));
    std::vector<std::vector<CycNum>> A = {{cn(coef(rng)), cn(coef(rng))},
                                          {cn(coef(rng)), cn(coef(rng))}},
                                     B = {{cn(coef(rng)), cn(coef(rng))},
                                          {cn(coef(rng)), cn(coef(rng))}};
    // (f o A) o B == f o (A*B): images substitute rows, so composition is
    // matrix product A*B acting first by B then A... check the identity that
    // holds: subst by A then by B equals subst by the product with B applied
    // to A's rows.
    std::vector<std::vector<CycNum>> AB(2, std::vector<CycNum>(2, czero()));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) AB[i][j] = AB[i][j] + A[i][k] * B[k][j];
    auto lhs = substitute_linear(substitute_linear(f, A), B);
    auto rhs = substitute_linear(f, AB);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("distinct_root_count multiplicativity for coprime forms") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> coef(-3, 3);
  int checked = 0;
  for (int iter = 0; iter < 300 && checked < 100; ++iter) {
    std::vector<CycNum> fc, gc;
    for (int i = 0; i < 3; ++i) fc.push_back(cn(coef(rng)));
    for (int i = 0; i < 4; ++i) gc.push_back(cn(coef(rng)));
    BF f(fc, czero()), g(gc, czero());
    if (f.is_zero() || g.is_zero()) continue;
    if (bf_gcd(f, g).degree() != 0) continue;
    CHECK(bf_distinct_root_count(f * g) ==
          bf_distinct_root_count(f) + bf_distinct_root_count(g));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("reduce_mod_single ideal membership") {
  auto vt = VarTable::make({"x2", "x3", "x4", "x5"});
  auto x2 = P::variable(vt, 0, czero());
  auto x3 = P::variable(vt, 1, czero());
  auto x4 = P::variable(vt, 2, czero());
  auto x5 = P::variable(vt, 3, czero());
  auto rel = x3 * x3 + x4 * x5;  // x3^2 = -x4 x5
  auto f2 = x2 * x2 + x4 * x4 - x5 * x5;
  auto target = x4 * x4 * (x2 * x2 + x4 * x4) - x3.pow(4);
  auto diff = x4 * x4 * f2 - target;
  CHECK(reduce_mod_single(diff, rel).is_zero());
}
