#include "doctest.h"

#include "curveaut/cremona.hpp"
#include "curveaut/cyclotomic.hpp"

using namespace curveaut;

static const CycField* F = CycField::get(120);
using El = Element<CycNum>;
using M = Mat<CycNum>;
using P = MultiPoly<CycNum>;

static CycNum cn(long v) { return CycNum::from_int(F, v); }
static CycNum cz() { return CycNum::zero(F); }

static PlaneNodalModel<CycNum> s5_sextic() {
  auto vt = VarTable::make({"x", "y", "z"});
  auto x = P::variable(vt, 0, cz()), y = P::variable(vt, 1, cz()), z = P::variable(vt, 2, cz());
  auto f = (x.pow(4) * y * z + y.pow(4) * x * z + z.pow(4) * x * y) * cn(2) +
           (y.pow(3) * z.pow(3) + x.pow(3) * z.pow(3) + x.pow(3) * y.pow(3)) * cn(2) -
           (x.pow(4) * y.pow(2) + x.pow(4) * z.pow(2) + y.pow(4) * x.pow(2) +
            y.pow(4) * z.pow(2) + z.pow(4) * x.pow(2) + z.pow(4) * y.pow(2)) * cn(2) +
           (x.pow(3) * y.pow(2) * z + x.pow(3) * z.pow(2) * y + y.pow(3) * x.pow(2) * z +
            y.pow(3) * z.pow(2) * x + z.pow(3) * x.pow(2) * y + z.pow(3) * y.pow(2) * x) -
           x.pow(2) * y.pow(2) * z.pow(2) * cn(6);
  return {f,
          {{{cn(1), cn(0), cn(0)}, 2},
           {{cn(0), cn(1), cn(0)}, 2},
           {{cn(0), cn(0), cn(1)}, 2},
           {{cn(1), cn(1), cn(1)}, 2}}};
}

TEST_CASE("standard quadratic transform basics") {
  auto vt = VarTable::make({"x", "y", "z"});
  auto x = P::variable(vt, 0, cz()), y = P::variable(vt, 1, cz()), z = P::variable(vt, 2, cz());
  std::array<std::vector<CycNum>, 3> corners{
      std::vector<CycNum>{cn(1), cn(0), cn(0)},
      std::vector<CycNum>{cn(0), cn(1), cn(0)},
      std::vector<CycNum>{cn(0), cn(0), cn(1)}};

  // a conic through all three corners becomes a line
  PlaneNodalModel<CycNum> conic{x * y + y * z + z * x, {}};
  auto img = std_quad_transform(conic, corners);
  long deg = 0;
  for (const auto& [e, c] : img.form.terms()) deg = std::max<long>(deg, e[0] + e[1] + e[2]);
  CHECK(deg == 1);

  // involution on a curve missing the exceptional lines
  PlaneNodalModel<CycNum> cubic{x.pow(3) + y.pow(3) + z.pow(3) + x * y * z * cn(5), {}};
  auto once = std_quad_transform(cubic, corners);
  auto twice = std_quad_transform(once, corners);
  auto lam = proportionality(cubic.form, twice.form);
  CHECK(lam.has_value());

  // collinear base rejected
  std::array<std::vector<CycNum>, 3> collinear{
      std::vector<CycNum>{cn(1), cn(0), cn(0)},
      std::vector<CycNum>{cn(0), cn(1), cn(0)},
      std::vector<CycNum>{cn(1), cn(1), cn(0)}};
  CHECK_THROWS_AS(std_quad_transform(conic, collinear), Error);
}

TEST_CASE("sextic at three nodes keeps degree six and four double points") {
  auto curve = s5_sextic();
  std::array<std::vector<CycNum>, 3> base{curve.marked[0].point, curve.marked[1].point,
                                          curve.marked[2].point};
  auto img = std_quad_transform(curve, base);
  long deg = 0;
  for (const auto& [e, c] : img.form.terms()) deg = std::max<long>(deg, e[0] + e[1] + e[2]);
  CHECK(deg == 6);  // 2*6 - 2 - 2 - 2
  CHECK(img.marked.size() == 4);
  for (const auto& p : img.marked) CHECK(p.mult == 2);
  auto lam = proportionality(curve.form, img.form);
  CHECK(lam.has_value());
}

TEST_CASE("induced pencil permutations generate the full symmetric group") {
  auto curve = s5_sextic();
  auto mk_coll = [&](std::vector<std::vector<long>> rows) {
    std::vector<std::vector<CycNum>> m;
    for (auto& r : rows) {
      std::vector<CycNum> row;
      for (long v : r) row.push_back(cn(v));
      m.push_back(row);
    }
    CremonaStep<CycNum> s;
    s.collineation = El::proj(M::from_rows(m));
    return s;
  };
  auto cyc = mk_coll({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  auto tr = mk_coll({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  auto nodeswap = mk_coll({{1, 0, 0}, {1, -1, 0}, {1, 0, -1}});
  CremonaStep<CycNum> quad;
  quad.quad_base = std::array<int, 3>{0, 1, 2};

  auto p1 = induced_pencil_permutation(curve, cyc);
  CHECK(p1 == std::vector<int>{2, 0, 1, 3, 4});
  auto p2 = induced_pencil_permutation(curve, tr);
  CHECK(p2 == std::vector<int>{1, 0, 2, 3, 4});
  auto p3 = induced_pencil_permutation(curve, nodeswap);
  CHECK(p3 == std::vector<int>{3, 1, 2, 0, 4});
  auto p4 = induced_pencil_permutation(curve, quad);
  CHECK(p4 == std::vector<int>{0, 1, 2, 4, 3});

  CHECK(verify_pencil_action(curve, {cyc, tr, nodeswap, quad}) == 120);
  // dropping the quadratic generator leaves at most the node permutations
  CHECK(verify_pencil_action(curve, {cyc, tr, nodeswap}) == 24);

  // homomorphism spot-check: permutation of a composite equals composite of
  // permutations for collineation words
  auto comp = mk_coll({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});  // cyc^2
  auto pc = induced_pencil_permutation(curve, comp);
  std::vector<int> expect(5);
  for (int i = 0; i < 5; ++i) expect[i] = p1[p1[i]];
  CHECK(pc == expect);
}

TEST_CASE("perturbed curve fails invariance") {
  auto curve = s5_sextic();
  auto vt = curve.form.vars();
  auto x = P::variable(vt, 0, cz());
  auto y = P::variable(vt, 1, cz());
  auto z = P::variable(vt, 2, cz());
  // perturb while keeping the four nodes (add a sextic with the same nodes):
  // (conic through nothing special)^3 would break nodes, so perturb with the
  // product of four node-respecting conics... simplest: scale one symmetric
  // orbit slightly: 3 x^3 y^3 term added breaks symmetry but keeps corners
  PlaneNodalModel<CycNum> bad{curve.form + x.pow(2) * y.pow(2) * z.pow(2) * cn(1) * cn(0) +
                                  x.pow(3) * y.pow(3) * cn(2),
                              curve.marked};
  CremonaStep<CycNum> cyc;
  cyc.collineation = El::proj(M::from_rows(
      {{cz(), cn(1), cz()}, {cz(), cz(), cn(1)}, {cn(1), cz(), cz()}}));
  CHECK_THROWS_AS(induced_pencil_permutation(bad, cyc), Error);
}
