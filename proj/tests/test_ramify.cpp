#include "doctest.h"

#include "curveaut/cyclotomic.hpp"
#include "curveaut/fixedpoints.hpp"

using namespace curveaut;

static const CycField* F = CycField::get(120);
using El = Element<CycNum>;
using M = Mat<CycNum>;
using P = MultiPoly<CycNum>;
using BF = BinaryForm<CycNum>;

static CycNum cn(long v) { return CycNum::from_int(F, v); }
static CycNum cz() { return CycNum::zero(F); }
static M m2(CycNum a, CycNum b, CycNum c, CycNum d) { return M::from_rows({{a, b}, {c, d}}); }
static M diag2(CycNum a, CycNum b) { return m2(a, cz(), cz(), b); }

namespace {
struct BiVars {
  std::shared_ptr<const VarTable> vt = VarTable::make({"x1", "x2", "y1", "y2"});
  P x1 = P::variable(vt, 0, CycNum::zero(F));
  P x2 = P::variable(vt, 1, CycNum::zero(F));
  P y1 = P::variable(vt, 2, CycNum::zero(F));
  P y2 = P::variable(vt, 3, CycNum::zero(F));
};

Model<CycNum> swap_family() {
  BiVars v;
  auto f = v.x1.pow(2) * v.y1.pow(2) * (v.x1 * v.y2 + v.x2 * v.y1) +
           v.x1 * v.y1 *
               (v.x1.pow(2) * v.y2.pow(2) + v.x2.pow(2) * v.y1.pow(2) +
                v.x1 * v.x2 * v.y1 * v.y2 * cn(2)) +
           (v.x1.pow(3) * v.y2.pow(3) + v.x2.pow(3) * v.y1.pow(3)) * cn(3) +
           v.x1 * v.x2 * v.y1 * v.y2 * (v.x1 * v.y2 + v.x2 * v.y1) * cn(5) +
           v.x2 * v.y2 *
               ((v.x1.pow(2) * v.y2.pow(2) + v.x2.pow(2) * v.y1.pow(2)) * cn(7) +
                v.x1 * v.x2 * v.y1 * v.y2) +
           v.x2.pow(2) * v.y2.pow(2) * (v.x1 * v.y2 + v.x2 * v.y1) * cn(4);
  return BiForm33Model<CycNum>{f};
}

Model<CycNum> noswap_family() {
  BiVars v;
  // x1^3 y1^3 + x1 y1 x2 y2 (a x1 y1 + b x2 y2) + c x2^3 y2^3
  //   + x1^3 y1 y2^2 + x1 x2^2 y1^3 + d x2^3 y1^2 y2 + e x1^2 x2 y2^3
  auto f = v.x1.pow(3) * v.y1.pow(3) +
           v.x1 * v.y1 * v.x2 * v.y2 * (v.x1 * v.y1 * cn(2) + v.x2 * v.y2 * cn(3)) +
           v.x2.pow(3) * v.y2.pow(3) * cn(5) + v.x1.pow(3) * v.y1 * v.y2.pow(2) +
           v.x1 * v.x2.pow(2) * v.y1.pow(3) + v.x2.pow(3) * v.y1.pow(2) * v.y2 * cn(7) +
           v.x1.pow(2) * v.x2 * v.y2.pow(3) * cn(4);
  return BiForm33Model<CycNum>{f};
}

Model<CycNum> g192_net() {
  auto half = CycNum::from_rational(F, rat(1, 2));
  M a1(5, 5, cz()), a2(5, 5, cz()), a3(5, 5, cz());
  a1.at(0, 0) = cn(1);
  a1.at(3, 3) = cn(1);
  a1.at(4, 4) = cn(1);
  a2.at(1, 1) = cn(1);
  a2.at(3, 3) = cn(1);
  a2.at(4, 4) = cn(-1);
  a3.at(2, 2) = cn(1);
  a3.at(3, 4) = half;
  a3.at(4, 3) = half;
  return QuadricNetModel<CycNum>{a1, a2, a3};
}

Model<CycNum> bring_pentahedral() {
  auto vt = VarTable::make({"z1", "z2", "z3", "z4"});
  auto z1 = P::variable(vt, 0, CycNum::zero(F)), z2 = P::variable(vt, 1, CycNum::zero(F)),
       z3 = P::variable(vt, 2, CycNum::zero(F)), z4 = P::variable(vt, 3, CycNum::zero(F));
  auto z5 = -(z1 + z2 + z3 + z4);
  return SpaceQCModel<CycNum>{z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4 + z5 * z5,
                              z1.pow(3) + z2.pow(3) + z3.pow(3) + z4.pow(3) + z5.pow(3)};
}
}  // namespace

TEST_CASE("system-swapping involution fixes six points, quotient genus 1") {
  auto model = swap_family();
  auto I2 = M::identity(2, cz());
  auto swap = El::bimoebius(I2, I2, true);
  auto fx = fixed_points(model, swap);
  CHECK(fx.isolated_count == 6);
  auto grp = closure<CycNum>({swap});
  auto z = quotient_genus(model, grp);
  CHECK(z.quotient_genus == 1);
  CHECK(z.coincidence_sum == 6);
  CHECK(verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch) == 0);
}

TEST_CASE("non-swapping involution fixes two points, quotient genus 2") {
  auto model = noswap_family();
  auto g = El::bimoebius(diag2(cn(-1), cn(1)), diag2(cn(-1), cn(1)), false);
  invariance(model, g);
  auto fx = fixed_points(model, g);
  CHECK(fx.isolated_count == 2);
  auto z = quotient_genus(model, closure<CycNum>({g}));
  CHECK(z.quotient_genus == 2);
}

TEST_CASE("type alpha fixes 8, type beta fixes none on the order-192 net") {
  auto model = g192_net();
  M alpha = M::identity(5, cz());
  alpha.at(0, 0) = cn(-1);
  auto ga = El::proj(alpha);
  invariance(model, ga);
  CHECK(fixed_points(model, ga).isolated_count == 8);

  M beta = M::identity(5, cz());
  beta.at(0, 0) = cn(-1);
  beta.at(1, 1) = cn(-1);
  auto gb = El::proj(beta);
  invariance(model, gb);
  CHECK(fixed_points(model, gb).isolated_count == 0);

  auto za = quotient_genus(model, closure<CycNum>({ga}));
  CHECK(za.quotient_genus == 1);
  auto zb = quotient_genus(model, closure<CycNum>({gb}));
  CHECK(zb.quotient_genus == 3);
  CHECK(verify_zeuthen(5, 2, 3, {}) == 0);
}

TEST_CASE("diagonal period-5 element fixes the four ruling intersections") {
  BiVars v;
  auto eps = CycNum::root(F, 5, 1);
  // x1^3 y1^2 y2 + x1^2 x2 y2^3 + x1 x2^2 y1^3 + a^5 x2^3 y1 y2^2, a = 2
  auto f = v.x1.pow(3) * v.y1.pow(2) * v.y2 + v.x1.pow(2) * v.x2 * v.y2.pow(3) +
           v.x1 * v.x2.pow(2) * v.y1.pow(3) + v.x2.pow(3) * v.y1 * v.y2.pow(2) * cn(32);
  Model<CycNum> model = BiForm33Model<CycNum>{f};
  auto g5 = El::bimoebius(diag2(eps, eps.pow(4)), diag2(eps * eps, eps.pow(3)), false);
  invariance(model, g5);
  CHECK(fixed_points(model, g5).isolated_count == 4);
  auto z = quotient_genus(model, closure<CycNum>({g5}));
  CHECK(z.quotient_genus == 0);
  REQUIRE(z.branch.size() == 1);
  CHECK(z.branch[0].stabilizer == 5);
  CHECK(z.branch[0].orbits == 4);
}

TEST_CASE("perspective fiber rotation on the pure triple cover fixes six points") {
  std::vector<CycNum> c{cn(1), cn(2), cn(1), cn(3), cn(1), cn(1), cn(1)};
  TrigonalModel<CycNum> tm{BF::zero(cz()), BF(c, cz())};
  REQUIRE(smoothness_check(tm).status == SmoothStatus::Smooth);
  Model<CycNum> model = tm;
  auto j = CycNum::root(F, 3, 1);
  auto g = El::trigonal(M::identity(2, cz()), j);
  invariance(model, g);
  CHECK(fixed_points(model, g).isolated_count == 6);
  auto data = cyclic_branch_data(model, g);
  REQUIRE(data.size() == 1);
  CHECK(data[0].stabilizer == 3);
  CHECK(data[0].orbits == 6);
  auto z = quotient_genus(model, closure<CycNum>({g}));
  CHECK(z.quotient_genus == 0);
}

TEST_CASE("pentahedral fixed point counts") {
  auto model = bring_pentahedral();
  // perspective involution (two coordinates swapped): 6 fixed points
  M t12 = M::from_rows({{cz(), cn(1), cz(), cz()},
                        {cn(1), cz(), cz(), cz()},
                        {cz(), cz(), cn(1), cz()},
                        {cz(), cz(), cz(), cn(1)}});
  auto g1 = El::proj(t12);
  CHECK(fixed_points(model, g1).isolated_count == 6);
  auto z1 = quotient_genus(model, closure<CycNum>({g1}));
  CHECK(z1.quotient_genus == 1);

  // axis involution (two disjoint swaps): 2 fixed points, quotient genus 2
  M ax = M::from_rows({{cz(), cn(1), cz(), cz()},
                       {cn(1), cz(), cz(), cz()},
                       {cz(), cz(), cz(), cn(1)},
                       {cz(), cz(), cn(1), cz()}});
  auto g2 = El::proj(ax);
  CHECK(fixed_points(model, g2).isolated_count == 2);
  CHECK(quotient_genus(model, closure<CycNum>({g2})).quotient_genus == 2);

  // five-cycle: 4 fixed points
  M c5 = M::from_rows({{cz(), cn(1), cz(), cz()},
                       {cz(), cz(), cn(1), cz()},
                       {cz(), cz(), cz(), cn(1)},
                       {cn(-1), cn(-1), cn(-1), cn(-1)}});
  auto g5 = El::proj(c5);
  CHECK(projective_order(g5).order == 5);
  CHECK(fixed_points(model, g5).isolated_count == 4);

  // fixed counts are conjugation invariant
  auto conj = compose(compose(g5, g1), inverse(g5));
  CHECK(fixed_points(model, conj).isolated_count == 6);
}

TEST_CASE("order-4 swap branch data is consistent with its square") {
  BiVars v;
  // Klein family with c = -b: x1^3 y1^3 + x2^3 y2^3 + a(...) + b(...) - b(...)
  auto f = v.x1.pow(3) * v.y1.pow(3) + v.x2.pow(3) * v.y2.pow(3) +
           (v.x1 * v.y1 * v.x2 * v.y2 * (v.x1 * v.y1 + v.x2 * v.y2)) * cn(3) +
           (v.y1 * v.y2 * (v.x1.pow(3) * v.y2 + v.x2.pow(3) * v.y1)) * cn(2) +
           (v.x1 * v.x2 * (v.x1 * v.y2.pow(3) + v.x2 * v.y1.pow(3))) * cn(-2);
  Model<CycNum> model = BiForm33Model<CycNum>{f};
  auto i = CycNum::root(F, 4, 1);
  auto g4 = El::bimoebius(m2(cz(), cn(1), i, cz()), m2(cz(), cn(1), -i, cz()), true);
  invariance(model, g4);
  CHECK(projective_order(g4).order == 4);
  auto data = cyclic_branch_data(model, g4);
  // every datum divisible and nonnegative was already enforced; Zeuthen closes
  long fix_g = fixed_points(model, g4).isolated_count;
  long fix_g2 = fixed_points(model, compose(g4, g4)).isolated_count;
  CHECK(fix_g == 2);
  CHECK(fix_g2 == 2);
  auto z = quotient_genus(model, closure<CycNum>({g4}));
  CHECK(verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch) == 0);
}

TEST_CASE("zeuthen enumeration for genus 4 admits exactly the primes 2, 3, 5") {
  auto sols = enumerate_zeuthen(4, 60, true);
  std::set<long> orders;
  for (const auto& z : sols) {
    orders.insert(z.order);
    CHECK(verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch) == 0);
  }
  CHECK(orders == std::set<long>{2, 3, 5});
}

TEST_CASE("zeuthen enumeration contents") {
  // genus 2, order 5: the quotient-rational solution with three full orbits
  auto sols = enumerate_zeuthen(2, 10, false);
  bool found = false;
  for (const auto& z : sols) {
    if (z.order == 5 && z.quotient_genus == 0 && z.branch.size() == 1 &&
        z.branch[0].stabilizer == 5 && z.branch[0].orbits == 3)
      found = true;
  }
  CHECK(found);

  // genus 4, order 3: exactly the three admissible rows
  auto s3 = enumerate_zeuthen(4, 3, false);
  std::vector<std::string> rows;
  for (const auto& z : s3) {
    if (z.order != 3) continue;
    std::string r = std::to_string(z.quotient_genus) + "|";
    for (const auto& b : z.branch)
      r += std::to_string(b.stabilizer) + "^" + std::to_string(b.orbits);
    rows.push_back(r);
  }
  CHECK(rows == std::vector<std::string>{"0|3^6", "1|3^3", "2|"});

  // duplicates absent
  std::set<std::string> keys;
  for (const auto& z : sols) {
    std::string k = std::to_string(z.order) + "." + std::to_string(z.quotient_genus) + ".";
    for (const auto& b : z.branch)
      k += std::to_string(b.stabilizer) + "^" + std::to_string(b.orbits) + ";";
    CHECK(keys.insert(k).second);
  }
}

TEST_CASE("no admissible signature for genus 4 order 7") {
  auto sols = enumerate_zeuthen(4, 7, false);
  for (const auto& z : sols) CHECK(z.order != 7);
}

TEST_CASE("cover branching formula") {
  CHECK(rh_cover_branch(3, 6, 0) == 16);
  CHECK(rh_cover_branch(3, 4, 0) == 12);
  CHECK(rh_cover_branch(2, 5, 0) == 12);
  CHECK_THROWS_AS(rh_cover_branch(1, 4, 0), Error);
}

TEST_CASE("burnside divisibility over cyclic subgroups") {
  auto model = swap_family();
  auto I2 = M::identity(2, cz());
  auto swap = El::bimoebius(I2, I2, true);
  long n = projective_order(swap).order;
  // sum over the cyclic group of |Fix| restricted to the coincidence set:
  // sum_{k != 0} |Fix(g^k)| + |U| must be divisible by n, with |U| the number
  // of points with nontrivial stabilizer
  auto data = cyclic_branch_data(model, swap);
  long u = 0;
  for (const auto& b : data) u += b.orbits * (n / b.stabilizer);
  long total = u;  // identity contribution
  El g = swap;
  for (long k = 1; k < n; ++k) {
    total += fixed_points(model, g).isolated_count;
    g = compose(g, swap);
  }
  CHECK(total % n == 0);
}
