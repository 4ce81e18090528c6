// Acceptance suite: one pass/fail line per criterion, exercised against the
// shipped catalog at the stated exact values and tolerances.

#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "curveaut/chars.hpp"
#include "curveaut/ffprobe.hpp"
#include "curveaut/fixedpoints.hpp"
#include "curveaut/quadnet.hpp"
#include "curveaut/report.hpp"

using namespace curveaut;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << "\n";
  if (!ok) ++failures;
}

struct Ctx {
  Catalog cat;
  FullReport rep;
  std::map<std::string, const EntryReport*> by_id;

  const EntryReport& of(const std::string& id) const { return *by_id.at(id); }
  bool check_passed(const std::string& id, const std::string& name) const {
    for (const auto& c : of(id).checks)
      if (c.name == name) return c.status == "pass";
    return false;
  }
  std::string check_details(const std::string& id, const std::string& name) const {
    for (const auto& c : of(id).checks)
      if (c.name == name) return c.details;
    return "";
  }
};

long closure_order_of(const Ctx& ctx, const std::string& id) {
  // the closure-order check stores "order N" on success
  auto d = ctx.check_details(id, "closure-order");
  auto pos = d.rfind(' ');
  if (pos == std::string::npos) return -1;
  return std::stol(d.substr(pos + 1));
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  Ctx ctx;
  ctx.cat = load_catalog_file(default_catalog_path());
  VerifyOptions opt;
  opt.seed = 1;
  opt.jobs = 4;
  ctx.rep = verify_catalog(ctx.cat, opt);
  for (const auto& e : ctx.rep.entries) ctx.by_id.emplace(e.id, &e);

  // ------------------------------------------------------------ criterion 1
  {
    std::vector<long> want{2, 2, 4, 4, 6, 3, 8, 12, 6, 24, 12, 10, 36, 72, 120};
    bool ok = true;
    for (int t = 1; t <= 15; ++t) {
      std::string id =
          (t == 15) ? "p4q-15-bring" : (t < 10 ? "p4q-0" : "p4q-1") + std::to_string(t % 10);
      if (t >= 10 && t <= 14) id = "p4q-" + std::to_string(t);
      if (closure_order_of(ctx, id) != want[t - 1]) ok = false;
      if (ctx.of(id).failed) ok = false;
    }
    // the order-12 row carries the discrepancy note rather than a failure
    const auto* e11 = ctx.cat.find("p4q-11");
    if (!e11 || e11->expected.notes.empty()) ok = false;
    if (closure_order_of(ctx, "p4q-11") != 12) ok = false;
    line(1, ok, "quadric table orders 2,2,4,4,6,3,8,12,6,24,12,10,36,72,120 with the order-12 note");
  }

  // ------------------------------------------------------------ criterion 2
  {
    bool ok = true;
    std::map<long, long> want{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}};
    ok = ok && closure_order_of(ctx, "p4q-15-bring") == 120;
    ok = ok && ctx.check_passed("p4q-15-bring", "histogram");
    ok = ok && ctx.cat.find("p4q-15-bring")->expected.histogram == want;
    ok = ok && closure_order_of(ctx, "bring-pentahedral") == 120;
    ok = ok && ctx.check_passed("bring-pentahedral", "histogram");
    ok = ok && ctx.check_passed("bring-pentahedral", "block-action");
    ok = ok && ctx.check_details("bring-pentahedral", "block-action") == "image 120, kernel 1";
    line(2, ok, "order 120, the stated period histogram, faithful action on the five planes");
  }

  // ------------------------------------------------------------ criterion 3
  {
    std::vector<long> want{2, 2, 4, 4, 8, 4, 6, 12, 3, 12, 6, 12, 5, 10, 3, 6, 12, 18, 15, 36, 72};
    bool ok = true;
    for (int t = 1; t <= 21; ++t) {
      std::string id = "p4c-" + std::string(t < 10 ? "0" : "") + std::to_string(t);
      if (closure_order_of(ctx, id) != want[t - 1]) ok = false;
      if (ctx.of(id).failed) ok = false;
    }
    line(3, ok, "cone-case orders 2,2,4,4,8,4,6,12,3,12,6,12,5,10,3,6,12,18,15,36,72");
  }

  // ------------------------------------------------------------ criterion 4
  {
    bool ok = true;
    std::map<std::string, long> want{
        {"p5-192", 192}, {"p5-64", 64}, {"p5-96", 96}, {"p5-160", 160}};
    for (const auto& [id, order] : want) {
      ok = ok && closure_order_of(ctx, id) == order;
      ok = ok && ctx.check_passed(id, "net-actions");
      ok = ok && ctx.check_passed(id, "delta5-factorization");
      ok = ok && ctx.check_passed(id, "split-classification");
    }
    ok = ok && ctx.check_passed("p5-192", "polar-triangle");
    for (const auto& id : {"p5-64", "p5-96", "p5-160"}) {
      const auto* e = ctx.cat.find(id);
      ok = ok && e->expected.split_case && *e->expected.split_case == 7;
      ok = ok && e->expected.root_form_systems && *e->expected.root_form_systems == 10;
    }
    line(4, ok,
         "net orders 192,64,96,160; net actions valid; discriminant splittings verified "
         "(conic+3 lines with polar triangle; three five-line nets of type count 10)");
  }

  // ------------------------------------------------------------ criterion 5
  {
    bool ok = true;
    // exact path (declared data verified inside the pipeline)
    for (const auto& id : {"p5-192", "p5-64", "p5-96", "p5-160"}) {
      ok = ok && ctx.check_passed(id, "fixed-points");
      ok = ok && ctx.check_passed(id, "quotient-genus");
    }
    ok = ok && ctx.check_passed("p4q-01", "fixed-points");   // swap involution -> 6
    ok = ok && ctx.check_passed("p4q-01", "quotient-genus"); // p' = 1
    ok = ok && ctx.check_passed("p4q-02", "fixed-points");
    ok = ok && ctx.check_passed("p4q-02", "quotient-genus"); // p' = 2
    ok = ok && ctx.check_passed("p4q-12", "fixed-points");   // diagonal period 5 -> 4
    ok = ok && ctx.check_passed("p4c-15", "fixed-points");   // fiber rotation -> 6
    ok = ok && ctx.check_passed("p4c-15", "quotient-genus");
    // finite-field path at the two default primes: rational counts over
    // extensions k = 1..kmax determine the geometric count by Moebius
    // inversion over the residue-degree lattice
    auto geometric_count = [&](const std::string& id, const std::string& label, long kmax) {
      auto inst = instantiate_moduli(ctx.cat, *ctx.cat.find(id), 1);
      const InstancedGenerator* g = nullptr;
      for (const auto& cand : inst.generators)
        if (cand.label == label) g = &cand;
      if (!g || !g->element) return std::map<uint64_t, long>{};
      std::map<uint64_t, long> out;
      for (uint64_t q : {241ULL, 601ULL}) {
        std::map<long, long> rational;
        for (long k = 1; k <= kmax; ++k) {
          const FFCtx* fctx = FFCtx::get(q, k, ctx.cat.field_index);
          rational[k] = fixed_count_ff(reduce_model(inst.model, fctx),
                                       reduce_element(*g->element, fctx), fctx);
        }
        long total = 0;
        bool sane = true;
        for (long d = 1; d <= kmax; ++d) {
          long s = 0;
          for (long e = 1; e <= d; ++e)
            if (d % e == 0) s += moebius_mu(d / e) * rational[e];
          if (s % d != 0 || s < 0) sane = false;
          total += s;  // s = d * a_d points of residue degree d
        }
        out[q] = sane ? total : -1;
      }
      return out;
    };
    auto agree = [&](const std::string& id, const std::string& label, long kmax, long expect) {
      auto counts = geometric_count(id, label, kmax);
      if (counts.size() != 2) return false;
      for (const auto& [q, c] : counts)
        if (c != expect) return false;
      return true;
    };
    ok = ok && agree("p5-192", "sign change, first kind", 2, 8);
    ok = ok && agree("p5-192", "sign change, second kind", 2, 0);
    ok = ok && agree("p5-64", "sign change, first kind", 2, 8);
    ok = ok && agree("p5-64", "sign change, second kind", 2, 0);
    ok = ok && agree("p4q-01", "ruling swap", 6, 6);
    ok = ok && agree("p4q-12", "diagonal period 5", 2, 4);
    ok = ok && agree("p4c-15", "fiber rotation", 6, 6);
    line(5, ok,
         "fixed counts 8/0/6/4/6 agree between the exact path and two primes; quotient "
         "genera 1, 2, and {1, 3} exact");
  }

  // ------------------------------------------------------------ criterion 6
  {
    bool ok = true;
    auto sols = enumerate_zeuthen(4, 60, true);
    std::set<long> orders;
    for (const auto& z : sols) {
      orders.insert(z.order);
      if (verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch) != 0) ok = false;
    }
    ok = ok && orders == std::set<long>{2, 3, 5};
    auto t1 = std::chrono::steady_clock::now();
    for (long p = 2; p <= 6; ++p) {
      auto all = enumerate_zeuthen(p, 60, false);
      for (const auto& z : all)
        if (verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch) != 0) ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    ok = ok && secs < 60.0;
    line(6, ok,
         "prime orders for genus 4 are exactly {2,3,5}; all residuals zero; genus <= 6 sweep in " +
             std::to_string(secs).substr(0, 5) + " s");
  }

  // ------------------------------------------------------------ criterion 7
  {
    bool ok = true;
    for (long theta = 0; theta <= 12; ++theta) {
      for (long delta : {0L, 9L, 75L}) {
        auto t = space_sextic_chars(theta, delta);  // throws if g not integral
        ok = ok && t.rank == 18 && t.apparent_double_points == 6 &&
             t.double_touch_class == 96;
        ok = ok && t.cls == 36 - theta && t.double_curve_order == 126 - theta;
        ok = ok && t.stationary_planes == 60 - 2 * theta;
        ok = ok && t.triple_tangent_points == 480 - 12 * theta;
        ok = ok && t.triple_tangent_planes == 120;
        ok = ok && t.osculating_with_tangent == 324 - 12 * theta - 4 * delta;
      }
    }
    ok = ok && weierstrass_count(4) == 60;
    ok = ok && contact_phi_count(4) == 120;
    ok = ok && space_sextic_chars(0, 75).osculating_with_tangent == 24;
    line(7, ok, "degree-6 characteristic table and the counting cross-identities");
  }

  // ------------------------------------------------------------ criterion 8
  {
    bool ok = true;
    ok = ok && ctx.check_passed("p6-sextic-s5", "smoothness");
    ok = ok && ctx.check_passed("p6-sextic-s5", "pencil-action");
    ok = ok && ctx.check_details("p6-sextic-s5", "pencil-action") == "pencil closure 120";
    ok = ok && rh_cover_branch(3, 6, 0) == 16;
    ok = ok && rh_cover_branch(3, 4, 0) == 12;
    line(8, ok, "nodal sextic singularities verified, full pencil action of order 120, cover "
                "branch counts 16 and 12");
  }

  // ------------------------------------------------------------ criterion 9
  {
    bool ok = true;
    ok = ok && closure_order_of(ctx, "hyp-p5-footnote") == 60;
    ok = ok && ctx.check_passed("hyp-p5-footnote", "classification");
    ok = ok && ctx.cat.find("hyp-p5-footnote")->expected.type == "icosahedral";
    ok = ok && ctx.check_passed("hyp-p5-footnote", "double-cover");
    ok = ok &&
         ctx.check_details("hyp-p5-footnote", "double-cover").find("full order 120") == 0;
    line(9, ok, "branch-form group of order 60, icosahedral; full order 120 with the "
                "icosahedral lift normal");
  }

  // ------------------------------------------------------------ criterion 10
  {
    bool ok = true;
    const CycField* F = ctx.cat.field;
    std::mt19937 rng(20260810);
    // field axioms
    {
      std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pw(0, 31);
      auto rand_cyc = [&]() {
        std::vector<Rational> c(32, rat(0));
        for (int t = 0; t < 3; ++t) c[pw(rng)] = rat(num(rng), den(rng));
        return CycNum(F, c);
      };
      int n = 0;
      for (int t = 0; t < 120; ++t) {
        auto a = rand_cyc(), b = rand_cyc(), c = rand_cyc();
        if (!((a * b) * c == a * (b * c))) ok = false;
        if (!(a * (b + c) == a * b + a * c)) ok = false;
        if (!a.is_zero() && !(a * a.inverse() == CycNum::one(F))) ok = false;
        ++n;
      }
      ok = ok && n >= 100;
    }
    // gcd / resultant contracts
    {
      std::uniform_int_distribution<int> coef(-3, 3);
      int n = 0;
      for (int t = 0; t < 400 && n < 120; ++t) {
        std::vector<CycNum> fc, gc;
        for (int u = 0; u < 4; ++u) fc.push_back(CycNum::from_int(F, coef(rng)));
        for (int u = 0; u < 4; ++u) gc.push_back(CycNum::from_int(F, coef(rng)));
        BinaryForm<CycNum> f(fc, CycNum::zero(F)), g(gc, CycNum::zero(F));
        if (f.is_zero() || g.is_zero()) continue;
        auto d = bf_gcd(f, g);
        if (!(bf_divide_exact(f, d) * d == f)) ok = false;
        if (!(bf_divide_exact(g, d) * d == g)) ok = false;
        if (bf_resultant(f, g).is_zero() != (d.degree() > 0)) ok = false;
        ++n;
      }
      ok = ok && n >= 100;
    }
    // closure determinism on catalog entries (shuffled generator lists)
    {
      int n = 0;
      for (const auto& e : ctx.cat.entries) {
        if (e.expected.order > 40) continue;
        auto inst = instantiate_moduli(ctx.cat, e, 3);
        std::vector<Element<CycNum>> gens;
        for (const auto& g : inst.generators)
          if (g.element) gens.push_back(*g.element);
        if (gens.empty()) continue;
        auto base = closure<CycNum>(gens, 2048);
        for (int t = 0; t < 4; ++t) {
          std::shuffle(gens.begin(), gens.end(), rng);
          auto again = closure<CycNum>(gens, 2048);
          if (again.order() != base.order()) ok = false;
          for (const auto& el : again.elems)
            if (!base.contains(el)) ok = false;
          ++n;
        }
      }
      ok = ok && n >= 100;
    }
    // conjugation invariance of fixed counts
    {
      int n = 0;
      for (const auto& id :
           {"p4q-01", "p4q-07", "p4q-12", "p4q-13", "p4c-05", "p4c-08", "p4c-10", "p4c-14",
            "p4c-17", "p4c-20"}) {
        auto inst = instantiate_moduli(ctx.cat, *ctx.cat.find(id), 9);
        std::vector<Element<CycNum>> gens;
        for (const auto& g : inst.generators)
          if (g.element) gens.push_back(*g.element);
        auto grp = closure<CycNum>(gens, 2048);
        std::uniform_int_distribution<size_t> pick(0, grp.order() - 1);
        for (int t = 0; t < 18 && n < 140; ++t) {
          const auto& g = grp.elems[pick(rng)];
          const auto& h = grp.elems[pick(rng)];
          if (g.is_identity()) continue;
          try {
            long a = fixed_points(inst.model, g).isolated_count;
            long b =
                fixed_points(inst.model, compose(compose(h, g), inverse(h))).isolated_count;
            if (a != b) ok = false;
            ++n;
          } catch (const Error& err) {
            if (err.kind() != Err::FieldTooSmall && err.kind() != Err::NeedsProbe) throw;
          }
        }
      }
      ok = ok && n >= 100;
    }
    // Burnside divisibility over cyclic subgroups of catalog generators
    {
      int n = 0;
      for (const auto& e : ctx.cat.entries) {
        if (e.model.kind != "biform33" && e.model.kind != "trigonal") continue;
        auto inst = instantiate_moduli(ctx.cat, e, 13);
        for (const auto& g : inst.generators) {
          if (!g.element || g.element->is_identity()) continue;
          try {
            long m = projective_order(*g.element).order;
            if (m < 2) continue;
            auto data = cyclic_branch_data(inst.model, *g.element);
            long u = 0;
            for (const auto& b : data) u += b.orbits * (m / b.stabilizer);
            long total = u;
            Element<CycNum> p = *g.element;
            for (long k = 1; k < m; ++k) {
              total += fixed_points(inst.model, p).isolated_count;
              p = compose(p, *g.element);
            }
            if (total % m != 0) ok = false;
            ++n;
          } catch (const Error& err) {
            if (err.kind() != Err::FieldTooSmall && err.kind() != Err::NeedsProbe) throw;
          }
        }
      }
      // top up with powers of generators across the cone entries
      for (const auto& e : ctx.cat.entries) {
        if (n >= 100) break;
        if (e.model.kind != "trigonal") continue;
        auto inst = instantiate_moduli(ctx.cat, e, 17);
        std::vector<Element<CycNum>> gens;
        for (const auto& g : inst.generators)
          if (g.element) gens.push_back(*g.element);
        if (gens.empty()) continue;
        auto grp = closure<CycNum>(gens, 2048);
        for (const auto& el : grp.elems) {
          if (n >= 100) break;
          if (el.is_identity()) continue;
          try {
            long m = projective_order(el).order;
            if (m < 2) continue;
            auto data = cyclic_branch_data(inst.model, el);
            long u = 0;
            for (const auto& b : data) u += b.orbits * (m / b.stabilizer);
            long total = u;
            Element<CycNum> p = el;
            for (long k = 1; k < m; ++k) {
              total += fixed_points(inst.model, p).isolated_count;
              p = compose(p, el);
            }
            if (total % m != 0) ok = false;
            ++n;
          } catch (const Error& err) {
            if (err.kind() != Err::FieldTooSmall && err.kind() != Err::NeedsProbe) throw;
          }
        }
      }
      ok = ok && n >= 100;
    }
    // reduction functoriality
    {
      const FFCtx* fctx = FFCtx::get(241, 1, 120);
      int n = 0;
      for (const auto& id : {"p4q-13", "p4q-15-bring", "p5-96"}) {
        auto inst = instantiate_moduli(ctx.cat, *ctx.cat.find(id), 1);
        std::vector<Element<CycNum>> gens;
        for (const auto& g : inst.generators)
          if (g.element) gens.push_back(*g.element);
        auto grp = closure<CycNum>(gens, 2048);
        std::uniform_int_distribution<size_t> pick(0, grp.order() - 1);
        for (int t = 0; t < 40; ++t) {
          const auto& g = grp.elems[pick(rng)];
          const auto& h = grp.elems[pick(rng)];
          auto lhs = reduce_element(compose(g, h), fctx);
          auto rhs = compose(reduce_element(g, fctx), reduce_element(h, fctx));
          if (!(lhs == rhs)) ok = false;
          ++n;
        }
      }
      ok = ok && n >= 100;
    }
    line(10, ok,
         "property suites (field axioms, gcd/resultant, closure determinism, conjugation "
         "invariance, Burnside, reduction functoriality) at 100+ seeded cases each");
  }

  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " ("
            << static_cast<long>(total) << " s)\n";
  return failures == 0 ? 0 : 1;
}
