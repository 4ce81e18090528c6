#include "doctest.h"

#include "curveaut/catalog.hpp"
#include "curveaut/fixedpoints.hpp"
#include "curveaut/report.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace curveaut;

static Catalog& shipped() {
  static Catalog cat = load_catalog_file(default_catalog_path());
  return cat;
}

TEST_CASE("shipped catalog loads with the expected census") {
  auto& cat = shipped();
  CHECK(cat.field_index == 120);
  CHECK(cat.entries.size() == 45);
  long p4q = 0, p4c = 0, p5 = 0, p6 = 0, bring = 0, hyp = 0;
  for (const auto& e : cat.entries) {
    if (e.id.rfind("p4q-", 0) == 0) ++p4q;
    if (e.id.rfind("p4c-", 0) == 0) ++p4c;
    if (e.id.rfind("p5-", 0) == 0) ++p5;
    if (e.id.rfind("p6-", 0) == 0) ++p6;
    if (e.id == "bring-pentahedral") ++bring;
    if (e.id == "hyp-p5-footnote") ++hyp;
  }
  CHECK(p4q == 15);
  CHECK(p4c == 21);
  CHECK(p5 == 4);
  CHECK(p6 == 3);
  CHECK(bring == 1);
  CHECK(hyp == 1);
}

TEST_CASE("round trip is stable") {
  auto& cat = shipped();
  auto text = save_catalog(cat);
  auto again = load_catalog(text);
  CHECK(save_catalog(again) == text);
}

TEST_CASE("duplicate ids are rejected") {
  auto text = save_catalog(shipped());
  // duplicate the first entry
  auto cat = load_catalog(text);
  Catalog dup = cat;
  dup.entries.push_back(dup.entries.front());
  auto bad = save_catalog(dup);
  CHECK_THROWS_AS(load_catalog(bad), Error);
}

TEST_CASE("schema violations carry the entry id") {
  std::string bad = R"({"field_index": 120, "entries": [
    {"id": "broken", "genus": 4,
     "model": {"kind": "nosuch"},
     "generators": [], "expected": {"order": 1, "type": "cyclic"}}]})";
  try {
    load_catalog(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::Load);
    CHECK(std::string(e.what()).find("broken") != std::string::npos);
  }
}

TEST_CASE("out-of-range root powers are rejected") {
  std::string bad = R"({"field_index": 120, "entries": [
    {"id": "rootrange", "genus": 4,
     "model": {"kind": "hyper_branch",
               "form": {"vars": ["x", "y"],
                        "monomials": [{"e": [12, 0], "c": [[300, 1, 1]]}]}},
     "generators": [], "expected": {"order": 1, "type": "cyclic"}}]})";
  CHECK_THROWS_AS(load_catalog(bad), Error);
}

TEST_CASE("minimal single-entry file loads") {
  std::string text = R"({"field_index": 120, "entries": [
    {"id": "mini", "genus": 4,
     "model": {"kind": "trigonal",
       "f4": {"vars": ["x", "y"], "monomials": [{"e": [0, 4], "c": [[0, 1, 1]]}]},
       "f6": {"vars": ["x", "y"], "monomials": [{"e": [5, 1], "c": [[0, 1, 1]]}]}},
     "generators": [{"kind": "trigonal",
        "a": [[[[24, 1, 1]], []], [[], [[60, 1, 1]]]],
        "c": [[60, 1, 1]]}],
     "expected": {"order": 10, "type": "cyclic"}}]})";
  auto cat = load_catalog(text);
  REQUIRE(cat.entries.size() == 1);
  auto inst = instantiate_moduli(cat, cat.entries[0], 1);
  auto& g = inst.generators[0];
  REQUIRE(g.element.has_value());
  CHECK(projective_order(*g.element).order == 10);
  invariance(inst.model, *g.element);
}

TEST_CASE("moduli instantiation rejects witness-preserving draws") {
  auto& cat = shipped();
  const auto* e = cat.find("p4q-13");
  REQUIRE(e != nullptr);
  // different seeds give valid, generically distinct instances
  auto i1 = instantiate_moduli(cat, *e, 7);
  auto i2 = instantiate_moduli(cat, *e, 8);
  for (const auto& g : i1.generators)
    if (g.element) invariance(i1.model, *g.element);
  // the witness (the extension to order 72) must fail on the instance
  bool witness_fails = false;
  for (const auto& w : i1.witnesses) {
    if (!w.element) continue;
    try {
      invariance(i1.model, *w.element);
    } catch (const Error&) {
      witness_fails = true;
    }
  }
  CHECK(witness_fails);
  (void)i2;
}

TEST_CASE("closure is generator-order independent on catalog entries") {
  auto& cat = shipped();
  std::mt19937 rng(2024);
  int cases = 0;
  for (const auto& e : cat.entries) {
    if (e.expected.order > 40) continue;
    auto inst = instantiate_moduli(cat, e, 5);
    std::vector<Element<CycNum>> gens;
    for (const auto& g : inst.generators)
      if (g.element) gens.push_back(*g.element);
    if (gens.empty()) continue;
    auto base = closure<CycNum>(gens, 2048);
    for (int t = 0; t < 4; ++t) {
      std::shuffle(gens.begin(), gens.end(), rng);
      auto again = closure<CycNum>(gens, 2048);
      CHECK(again.order() == base.order());
      bool same = true;
      for (const auto& el : again.elems)
        if (!base.contains(el)) same = false;
      CHECK(same);
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("fixed-point counts are conjugation invariant on catalog groups") {
  auto& cat = shipped();
  std::mt19937 rng(77);
  int cases = 0;
  for (const auto& id : {"p4q-01", "p4q-07", "p4q-12", "p4q-13", "p4c-05", "p4c-08", "p4c-10",
                         "p4c-14", "p4c-17", "p4c-20"}) {
    const auto* e = cat.find(id);
    REQUIRE(e != nullptr);
    auto inst = instantiate_moduli(cat, *e, 9);
    std::vector<Element<CycNum>> gens;
    for (const auto& g : inst.generators)
      if (g.element) gens.push_back(*g.element);
    auto grp = closure<CycNum>(gens, 2048);
    std::uniform_int_distribution<size_t> pick(0, grp.order() - 1);
    for (int t = 0; t < 18 && cases < 140; ++t) {
      const auto& g = grp.elems[pick(rng)];
      const auto& h = grp.elems[pick(rng)];
      if (g.is_identity()) continue;
      auto conj = compose(compose(h, g), inverse(h));
      // elements whose factor scalars are not roots of unity fall outside
      // the exact path (field-too-small by contract); skip those samples
      try {
        long a = fixed_points(inst.model, g).isolated_count;
        long b = fixed_points(inst.model, conj).isolated_count;
        long c = fixed_points(inst.model, inverse(g)).isolated_count;
        CHECK(a == b);
        CHECK(a == c);
        ++cases;
      } catch (const Error& e) {
        if (e.kind() != Err::FieldTooSmall && e.kind() != Err::NeedsProbe) throw;
      }
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("invariance scalar is a cocycle on random pairs") {
  auto& cat = shipped();
  std::mt19937 rng(31);
  int cases = 0;
  for (const auto& id : {"p4q-07", "p4q-13", "p4c-08", "p4c-20"}) {
    const auto* e = cat.find(id);
    auto inst = instantiate_moduli(cat, *e, 11);
    std::vector<Element<CycNum>> gens;
    for (const auto& g : inst.generators)
      if (g.element) gens.push_back(*g.element);
    auto grp = closure<CycNum>(gens, 2048);
    std::uniform_int_distribution<size_t> pick(0, grp.order() - 1);
    for (int t = 0; t < 30; ++t) {
      const auto& g = grp.elems[pick(rng)];
      const auto& h = grp.elems[pick(rng)];
      // cocycle on fixed representatives: pulling back through the raw
      // product of the two substitution matrices multiplies the scalars
      if (std::holds_alternative<BiForm33Model<CycNum>>(inst.model)) {
        const auto& form = std::get<BiForm33Model<CycNum>>(inst.model).form;
        auto mg = biform_substitution(g);
        auto mh = biform_substitution(h);
        std::vector<std::vector<CycNum>> prod(4, std::vector<CycNum>(4, CycNum::zero(cat.field)));
        for (int r = 0; r < 4; ++r)
          for (int cc = 0; cc < 4; ++cc)
            for (int k = 0; k < 4; ++k) prod[r][cc] = prod[r][cc] + mg[r][k] * mh[k][cc];
        auto lg = proportionality(form, substitute_linear(form, mg));
        auto lh = proportionality(form, substitute_linear(form, mh));
        auto lp = proportionality(form, substitute_linear(form, prod));
        REQUIRE(lg.has_value());
        REQUIRE(lh.has_value());
        REQUIRE(lp.has_value());
        CHECK(*lp == *lg * *lh);
      } else {
        // trigonal models: the fiber scalar of the composite is the product
        const auto& tg = g.trigonal_payload();
        const auto& th = h.trigonal_payload();
        auto gh = compose(g, h);
        auto li = invariance(inst.model, gh);
        const auto& tgh = gh.trigonal_payload();
        CHECK(*li.lambda == tgh.c * tgh.c * tgh.c);
        (void)tg;
        (void)th;
      }
      ++cases;
    }
  }
  CHECK(cases >= 100);
}
