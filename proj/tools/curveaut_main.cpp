// Command-line workbench: catalog verification, coincidence-equation
// enumeration, characteristic tables, discriminant checks, and finite-field
// probes.

#include <iostream>

#include "CLI11.hpp"
#include "curveaut/chars.hpp"
#include "curveaut/ffprobe.hpp"
#include "curveaut/fixedpoints.hpp"
#include "curveaut/quadnet.hpp"
#include "curveaut/report.hpp"

using namespace curveaut;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case Err::Input:
    case Err::Load:
    case Err::UnsupportedRoot:
    case Err::UnsupportedDegree:
    case Err::Shape:
      return 2;
    case Err::Budget:
    case Err::GroupCap:
    case Err::OrderCap:
      return 3;
    default:
      return 1;
  }
}

Catalog load_or_die(const std::string& path) { return load_catalog_file(path); }

const CatalogEntry& entry_or_die(const Catalog& cat, const std::string& id) {
  const CatalogEntry* e = cat.find(id);
  require(e != nullptr, Err::Input, "no catalog entry with id " + id);
  return *e;
}

int cmd_verify(const std::string& catalog, const std::string& entry, uint64_t seed, bool json,
               int jobs, bool probes) {
  auto cat = load_or_die(catalog);
  VerifyOptions opt;
  opt.seed = seed;
  opt.jobs = jobs;
  opt.run_probes = probes;
  auto rep = verify_catalog(cat, opt, entry);
  if (json)
    std::cout << report_to_json(rep);
  else
    std::cout << report_to_text(rep);
  return rep.failed ? 1 : 0;
}

int cmd_zeuthen(long genus, long max_n, bool primes_only) {
  auto sols = enumerate_zeuthen(genus, max_n, primes_only);
  std::cout << "genus " << genus << ", order <= " << max_n
            << (primes_only ? ", prime orders only" : "") << "\n";
  for (const auto& z : sols) {
    std::cout << "n=" << z.order << "  p'=" << z.quotient_genus << "  branch:";
    if (z.branch.empty()) std::cout << " (free)";
    for (const auto& b : z.branch)
      std::cout << " " << b.orbits << " orbit" << (b.orbits == 1 ? "" : "s") << " of stabilizer "
                << b.stabilizer;
    std::cout << "  [residual "
              << verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch) << "]\n";
  }
  std::cout << sols.size() << " admissible solutions\n";
  return 0;
}

int cmd_chars(long theta, long delta) {
  auto t = space_sextic_chars(theta, delta);
  std::cout << "order m            " << t.order << "\n"
            << "rank r             " << t.rank << "\n"
            << "class n            " << t.cls << "\n"
            << "stationary planes  " << t.stationary_planes << "\n"
            << "apparent dpoints   " << t.apparent_double_points << "\n"
            << "double-curve order " << t.double_curve_order << "\n"
            << "double-touch class " << t.double_touch_class << "\n"
            << "osculating+tangent " << t.osculating_with_tangent << "\n"
            << "triple-tan points  " << t.triple_tangent_points << "\n"
            << "triple-tan planes  " << t.triple_tangent_planes << "\n"
            << "g                  " << t.lines_in_two_osculating_planes << "\n";
  return 0;
}

int cmd_delta5(const std::string& catalog, const std::string& entry_id) {
  auto cat = load_or_die(catalog);
  const auto& entry = entry_or_die(cat, entry_id);
  require(entry.model.kind == "quadric_net", Err::Input, "entry is not a quadric net");
  VerifyOptions opt;
  auto rep = verify_entry(cat, entry, opt);
  bool relevant_failed = false;
  for (const auto& c : rep.checks) {
    if (c.name != "delta5-factorization" && c.name != "polar-triangle" &&
        c.name != "split-classification" && c.name != "net-actions")
      continue;
    std::cout << c.status << "  " << c.name << "  " << c.details << "\n";
    if (c.status == "fail") relevant_failed = true;
  }
  return relevant_failed ? 1 : 0;
}

int cmd_probe(const std::string& catalog, const std::string& entry_id, uint64_t prime,
              long ext) {
  auto cat = load_or_die(catalog);
  const auto& entry = entry_or_die(cat, entry_id);
  auto inst = instantiate_moduli(cat, entry, 1);
  auto spec = find_prime(cat.field_index, prime);
  std::cout << "prime " << spec.q << ", root order " << spec.root_order << ", root image "
            << spec.root_image << "\n";
  for (long k = 1; k <= ext; ++k) {
    const FFCtx* ctx = FFCtx::get(spec.q, k, cat.field_index);
    auto mf = reduce_model(inst.model, ctx);
    std::cout << "extension " << k << ":";
    bool counted = false;
    try {
      long n = count_points(mf, ctx);
      std::cout << "  points " << n;
      counted = true;
    } catch (const Error& e) {
      if (e.kind() != Err::Budget) throw;
      std::cout << "  points (budget exceeded)";
    }
    (void)counted;
    for (const auto& g : inst.generators) {
      if (!g.element || !g.fixed_points) continue;
      long c = fixed_count_ff(mf, reduce_element(*g.element, ctx), ctx);
      std::cout << "  fixed[" << g.label << "] " << c;
    }
    std::cout << "\n";
  }
  const FFCtx* ctx = FFCtx::get(spec.q, 1, cat.field_index);
  auto pr = smooth_probe(reduce_model(inst.model, ctx), ctx);
  std::cout << (pr.singular_found ? "singular: " : "probe: ") << pr.detail
            << " (evidence, not proof)\n";
  return pr.singular_found ? 1 : 0;
}

int cmd_group(const std::string& catalog, const std::string& entry_id, uint64_t seed) {
  auto cat = load_or_die(catalog);
  const auto& entry = entry_or_die(cat, entry_id);
  auto inst = instantiate_moduli(cat, entry, seed);
  std::vector<Element<CycNum>> gens;
  for (const auto& g : inst.generators)
    if (g.element) gens.push_back(*g.element);
  require(!gens.empty(), Err::Input, "entry has no matrix generators");
  auto grp = closure<CycNum>(gens, 2048);
  auto cls = classify(grp);
  std::cout << "order " << grp.order() << "\n";
  std::cout << "type " << cls.name() << (cls.abelian ? " (abelian)" : "") << "\n";
  std::cout << "periods:";
  for (const auto& [k, v] : cls.histogram) std::cout << " " << k << ":" << v;
  std::cout << "\n";
  if (static_cast<long>(grp.order()) != entry.expected.order) {
    std::cout << "expected order " << entry.expected.order << "\n";
    return 1;
  }
  return 0;
}

int cmd_fixed(const std::string& catalog, const std::string& entry_id, uint64_t seed) {
  auto cat = load_or_die(catalog);
  const auto& entry = entry_or_die(cat, entry_id);
  auto inst = instantiate_moduli(cat, entry, seed);
  long p = genus(inst.model);
  bool any_fail = false;
  for (const auto& g : inst.generators) {
    if (!g.element) continue;
    if (g.element->is_identity()) continue;
    auto ord = projective_order(*g.element);
    std::cout << (g.label.empty() ? "generator" : g.label) << " (period " << ord.order << ")";
    try {
      auto fx = fixed_points(inst.model, *g.element, static_cast<unsigned>(seed));
      std::cout << "  fixed " << fx.isolated_count;
      if (g.fixed_points && fx.isolated_count != *g.fixed_points) {
        std::cout << " MISMATCH expected " << *g.fixed_points;
        any_fail = true;
      }
      auto grp = closure<CycNum>({*g.element}, 2048);
      auto z = quotient_genus(inst.model, grp, static_cast<unsigned>(seed));
      std::cout << "  quotient genus " << z.quotient_genus;
      if (!z.branch.empty()) {
        std::cout << "  branch:";
        for (const auto& b : z.branch)
          std::cout << " " << b.orbits << "x" << b.stabilizer;
        std::cout << "  residual "
                  << verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch);
      }
      std::cout << "\n";
    } catch (const Error& e) {
      std::cout << "  (" << e.what() << ")\n";
    }
  }
  std::cout << "genus " << p << "\n";
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for automorphism groups of low-genus curves"};
  app.require_subcommand(1);

  std::string catalog = default_catalog_path();
  std::string entry;
  uint64_t seed = 1;
  bool json = false;
  int jobs = 1;
  bool probes = false;

  auto* v = app.add_subcommand("verify", "verify catalog entries end to end");
  v->add_option("--catalog", catalog, "catalog path");
  v->add_option("--entry", entry, "entry id filter (substring)");
  v->add_option("--seed", seed, "instantiation seed");
  v->add_flag("--json", json, "machine-readable report");
  v->add_option("--jobs", jobs, "parallel entry verification");
  v->add_flag("--probes", probes, "run finite-field cross-checks");

  long zg = 4, zmax = 60;
  bool zprimes = false;
  auto* z = app.add_subcommand("zeuthen", "enumerate admissible coincidence solutions");
  z->add_option("--genus", zg, "curve genus (>= 2)");
  z->add_option("--max-n", zmax, "largest order to consider");
  z->add_flag("--primes-only", zprimes, "restrict to prime orders");

  long theta = 0, delta = 0;
  auto* c = app.add_subcommand("chars", "characteristic table of the degree-6 space curve");
  c->add_option("--theta", theta, "number of stationary tangents (0..12)");
  c->add_option("--delta", delta, "number of double osculating planes");

  auto* d5 = app.add_subcommand("delta5", "discriminant quintic checks for a net entry");
  d5->add_option("--catalog", catalog, "catalog path");
  d5->add_option("--entry", entry, "entry id")->required();

  uint64_t prime = 2;
  long ext = 2;
  auto* pr = app.add_subcommand("probe", "finite-field evidence for an entry");
  pr->add_option("--catalog", catalog, "catalog path");
  pr->add_option("--entry", entry, "entry id")->required();
  pr->add_option("--prime", prime, "lower bound for the reduction prime");
  pr->add_option("--ext", ext, "largest extension degree");

  auto* g = app.add_subcommand("group", "closure and classification for an entry");
  g->add_option("--catalog", catalog, "catalog path");
  g->add_option("--entry", entry, "entry id")->required();
  g->add_option("--seed", seed, "instantiation seed");

  auto* fx = app.add_subcommand("fixed", "fixed points and quotient data per generator");
  fx->add_option("--catalog", catalog, "catalog path");
  fx->add_option("--entry", entry, "entry id")->required();
  fx->add_option("--seed", seed, "instantiation seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) return cmd_verify(catalog, entry, seed, json, jobs, probes);
    if (z->parsed()) return cmd_zeuthen(zg, zmax, zprimes);
    if (c->parsed()) return cmd_chars(theta, delta);
    if (d5->parsed()) return cmd_delta5(catalog, entry);
    if (pr->parsed()) return cmd_probe(catalog, entry, prime, ext);
    if (g->parsed()) return cmd_group(catalog, entry, seed);
    if (fx->parsed()) return cmd_fixed(catalog, entry, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
