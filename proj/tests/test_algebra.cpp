#include "doctest.h"

#include "curveaut/cyclotomic.hpp"

#include <random>

using namespace curveaut;

static const CycField* F120 = CycField::get(120);

TEST_CASE("cyclotomic polynomial degrees and small cases") {
  CHECK(cyclotomic_polynomial_int(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial_int(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial_int(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial_int(120).size() == 33);  // degree phi(120) = 32
  CHECK(euler_phi(120) == 32);
}

TEST_CASE("named roots of unity behave") {
  auto i = CycNum::root(F120, 4, 1);
  CHECK(i * i == CycNum::from_int(F120, -1));

  auto j = CycNum::root(F120, 3, 1);
  auto j2 = CycNum::root(F120, 3, 2);
  CHECK(j + j2 == CycNum::from_int(F120, -1));

  CHECK(CycNum::root(F120, 120, 40) == j);

  auto z8 = CycNum::root(F120, 8, 1);
  CHECK(z8 * z8 == CycNum::root(F120, 4, 1));

  auto eps = CycNum::root(F120, 5, 1);
  CHECK(CycNum::one(F120) / eps == eps.pow(4));

  auto one_plus_i = CycNum::one(F120) + i;
  auto one_minus_i = CycNum::one(F120) - i;
  CHECK(one_plus_i * one_minus_i == CycNum::from_int(F120, 2));
}

TEST_CASE("unsupported root index") {
  CHECK_THROWS_AS(CycNum::root(F120, 7, 1), Error);
}

TEST_CASE("root exponent lookup") {
  auto z = CycNum::root(F120, 120, 37);
  CHECK(z.as_root_exponent() == 37);
  auto nonroot = CycNum::from_int(F120, 2);
  CHECK(nonroot.as_root_exponent() == -1);
  CHECK(CycNum::from_int(F120, -1).as_root_exponent() == 60);
}

static CycNum random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> nz(0, 3), num(-4, 4), den(1, 3), pw(0, 31);
  std::vector<Rational> c(32, rat(0));
  int k = nz(rng) + 1;
  for (int t = 0; t < k; ++t) c[pw(rng)] = rat(num(rng), den(rng));
  return CycNum(F120, std::move(c));
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937 rng(20240811);
  int inverses_checked = 0;
  for (int iter = 0; iter < 120; ++iter) {
    CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycNum::one(F120));
      ++inverses_checked;
    }
  }
  CHECK(inverses_checked >= 100);
}
