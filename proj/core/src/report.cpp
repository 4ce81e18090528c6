#include "curveaut/report.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "curveaut/chars.hpp"
#include "curveaut/ffprobe.hpp"
#include "curveaut/fixedpoints.hpp"
#include "curveaut/quadnet.hpp"
#include "json.hpp"

namespace curveaut {

namespace {

Mat<CycNum> sym_square(const Mat<CycNum>& a) {
  // action on the coefficient space of binary quadratics, basis (x^2, xy, y^2)
  const CycNum &p = a.at(0, 0), &q = a.at(0, 1), &r = a.at(1, 0), &s = a.at(1, 1);
  CycNum two = CycNum::from_int(p.field(), 2);
  return Mat<CycNum>::from_rows({{p * p, p * q, q * q},
                                 {two * p * r, p * s + q * r, two * q * s},
                                 {r * r, r * s, s * s}});
}

Element<CycNum> lift_moebius(const Element<CycNum>& g, int sign) {
  // dividing by the determinant makes the lift independent of the chosen
  // matrix representative, so the lifted classes stay finite
  const Mat<CycNum>& a = g.proj_payload().m;
  CycNum z = CycNum::zero(a.at(0, 0).field());
  Mat<CycNum> m(4, 4, z);
  Mat<CycNum> s = sym_square(a) * a.det().inverse();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m.at(i, j) = s.at(i, j);
  m.at(3, 3) = CycNum::from_int(a.at(0, 0).field(), sign);
  return Element<CycNum>::proj(std::move(m));
}

}  // namespace

Group<CycNum> hyperelliptic_reduced_lift(const Group<CycNum>& moebius) {
  std::vector<Element<CycNum>> gens;
  for (size_t gi : moebius.generator_indices) gens.push_back(lift_moebius(moebius.elems[gi], 1));
  return closure<CycNum>(gens, 4 * moebius.order());
}

Group<CycNum> hyperelliptic_double_cover_group(const Group<CycNum>& moebius) {
  std::vector<Element<CycNum>> gens;
  for (size_t gi : moebius.generator_indices) gens.push_back(lift_moebius(moebius.elems[gi], 1));
  gens.push_back(lift_moebius(moebius.elems[0].identity_like(), -1));
  return closure<CycNum>(gens, 4 * moebius.order());
}

namespace {

struct Checker {
  EntryReport& rep;
  bool stop_on_fail = false;

  template <class Fn>
  void run(const std::string& name, Fn&& fn) {
    if (rep.failed && stop_on_fail) return;
    CheckResult r;
    r.name = name;
    try {
      r = fn();
      r.name = name;
    } catch (const Error& e) {
      r.status = "fail";
      r.details = e.what();
    } catch (const std::exception& e) {
      r.status = "fail";
      r.details = std::string("unexpected: ") + e.what();
    }
    if (r.status == "fail") rep.failed = true;
    rep.checks.push_back(std::move(r));
  }
};

CheckResult pass(const std::string& details = "") { return {"", "pass", details}; }
CheckResult failr(const std::string& details) { return {"", "fail", details}; }
CheckResult skip(const std::string& details) { return {"", "skip", details}; }

std::string histo_str(const std::map<long, long>& h) {
  std::ostringstream os;
  for (const auto& [k, v] : h) os << k << ":" << v << " ";
  return os.str();
}

}  // namespace

EntryReport verify_entry(const Catalog& cat, const CatalogEntry& entry,
                         const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  EntryReport rep;
  rep.id = entry.id;
  Checker ck{rep};

  std::optional<InstancedEntry> inst;
  ck.run("instantiate", [&]() {
    inst = instantiate_moduli(cat, entry, opt.seed);
    return pass(entry.params.empty() ? "no free parameters"
                                     : std::to_string(entry.params.size()) + " parameters drawn");
  });
  if (!inst) {
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
  }

  // invariance of every element generator
  ck.run("invariance", [&]() {
    int n = 0;
    for (const auto& g : inst->generators) {
      if (!g.element) continue;
      invariance(inst->model, *g.element);
      ++n;
    }
    return pass(std::to_string(n) + " generators invariant");
  });

  bool cremona_entry = false;
  for (const auto& g : inst->generators)
    if (g.quad_base) cremona_entry = true;

  std::optional<Group<CycNum>> grp;
  if (!cremona_entry) {
    ck.run("closure-order", [&]() {
      std::vector<Element<CycNum>> gens;
      for (const auto& g : inst->generators)
        if (g.element) gens.push_back(*g.element);
      grp = closure<CycNum>(gens, opt.closure_cap);
      if (static_cast<long>(grp->order()) != entry.expected.order)
        return failr("order " + std::to_string(grp->order()) + " expected " +
                     std::to_string(entry.expected.order));
      return pass("order " + std::to_string(grp->order()));
    });
    ck.run("classification", [&]() {
      if (!grp) return skip("no group");
      auto c = classify(*grp);
      if (c.name() != entry.expected.type)
        return failr("classified " + c.name() + " expected " + entry.expected.type);
      return pass(c.name() + (c.abelian ? " (abelian)" : ""));
    });
    ck.run("histogram", [&]() {
      if (entry.expected.histogram.empty()) return skip("no expected histogram");
      if (!grp) return skip("no group");
      auto h = order_histogram(*grp);
      if (h != entry.expected.histogram)
        return failr("histogram " + histo_str(h) + " expected " +
                     histo_str(entry.expected.histogram));
      return pass(histo_str(h));
    });
  }

  ck.run("genus", [&]() {
    long g = genus(inst->model);
    if (g != entry.genus)
      return failr("genus " + std::to_string(g) + " expected " + std::to_string(entry.genus));
    return pass(std::to_string(g));
  });

  ck.run("smoothness", [&]() {
    auto r = smoothness_check(inst->model);
    if (r.status == SmoothStatus::Smooth) return pass(r.detail);
    if (r.status == SmoothStatus::Singular) return failr(r.detail);
    if (!opt.run_probes) return skip(r.detail);
    // probe at the two default primes
    for (uint64_t q : {241ULL, 601ULL}) {
      const FFCtx* ctx = FFCtx::get(q, 1, cat.field_index);
      auto pr = smooth_probe(reduce_model(inst->model, ctx), ctx);
      if (pr.singular_found) return failr("probe at q=" + std::to_string(q) + ": " + pr.detail);
    }
    return pass("no singular point found at the probe primes (evidence)");
  });

  ck.run("fixed-points", [&]() {
    int n = 0;
    for (const auto& g : inst->generators) {
      if (!g.element || !g.fixed_points) continue;
      long got = fixed_points(inst->model, *g.element, static_cast<unsigned>(opt.seed))
                     .isolated_count;
      if (got != *g.fixed_points)
        return failr(g.label + ": fixed " + std::to_string(got) + " expected " +
                     std::to_string(*g.fixed_points));
      ++n;
    }
    if (n == 0) return skip("no declared fixed-point data");
    return pass(std::to_string(n) + " generators checked");
  });

  ck.run("quotient-genus", [&]() {
    int n = 0;
    for (const auto& g : inst->generators) {
      if (!g.element || !g.quotient_genus) continue;
      auto z = quotient_genus(inst->model, closure<CycNum>({*g.element}, opt.closure_cap),
                              static_cast<unsigned>(opt.seed));
      if (z.quotient_genus != *g.quotient_genus)
        return failr(g.label + ": quotient genus " + std::to_string(z.quotient_genus) +
                     " expected " + std::to_string(*g.quotient_genus));
      if (!z.branch.empty() &&
          verify_zeuthen(z.genus, z.order, z.quotient_genus, z.branch) != 0)
        return failr(g.label + ": nonzero coincidence residual");
      ++n;
    }
    if (n == 0) return skip("no declared quotient data");
    return pass(std::to_string(n) + " cyclic quotients checked");
  });

  if (opt.run_probes) {
    ck.run("fixed-points-ff", [&]() {
      int n = 0;
      for (const auto& g : inst->generators) {
        if (!g.element || !g.fixed_points) continue;
        for (uint64_t q : {241ULL, 601ULL}) {
          long stable = -1;
          for (long k = 1; k <= 2; ++k) {
            const FFCtx* ctx = FFCtx::get(q, k, cat.field_index);
            stable = fixed_count_ff(reduce_model(inst->model, ctx),
                                    reduce_element(*g.element, ctx), ctx);
          }
          if (stable != *g.fixed_points)
            return failr(g.label + ": finite-field count " + std::to_string(stable) +
                         " at q=" + std::to_string(q) + " expected " +
                         std::to_string(*g.fixed_points));
        }
        ++n;
      }
      if (n == 0) return skip("no declared fixed-point data");
      return pass(std::to_string(n) + " generators agree at two primes");
    });
  }

  // model-specific extras
  if (entry.model.kind == "quadric_net") {
    ck.run("net-actions", [&]() {
      for (const auto& g : inst->generators) {
        if (!g.element) continue;
        auto r = invariance(inst->model, *g.element);
        if (!r.net_action || r.net_action->det().is_zero())
          return failr(g.label + ": net action invalid");
      }
      return pass("all generators act linearly on the net");
    });
    if (!entry.model.delta5_factors.empty()) {
      ck.run("delta5-factorization", [&]() {
        const auto& net = std::get<QuadricNetModel<CycNum>>(inst->model);
        auto d = delta5(net);
        std::vector<MultiPoly<CycNum>> factors;
        std::vector<CycNum> values;  // nets carry no parameters
        for (const auto& f : entry.model.delta5_factors) {
          auto vt = VarTable::make(f.vars);
          auto p = MultiPoly<CycNum>::zero(vt, CycNum::zero(cat.field));
          for (const auto& [e, c] : f.monomials) p.add_term(e, c.eval(values, cat.field));
          factors.push_back(std::move(p));
        }
        auto c = verify_factorization(d, factors);
        return pass("scalar " + c.str());
      });
    }
    if (entry.model.polar_triangle) {
      ck.run("polar-triangle", [&]() {
        // identify the conic factor and the three lines among the factors
        const auto& net = std::get<QuadricNetModel<CycNum>>(inst->model);
        std::vector<CycNum> values;
        std::vector<MultiPoly<CycNum>> lines;
        std::optional<MultiPoly<CycNum>> conic;
        for (const auto& f : entry.model.delta5_factors) {
          auto vt = VarTable::make(f.vars);
          auto p = MultiPoly<CycNum>::zero(vt, CycNum::zero(cat.field));
          for (const auto& [e, c] : f.monomials) p.add_term(e, c.eval(values, cat.field));
          long d = p.weighted_degree();
          if (d == 1)
            lines.push_back(p);
          else
            conic = p;
        }
        if (!conic || lines.size() != 3) return failr("expected a conic and three lines");
        // conic matrix
        CycNum z = CycNum::zero(cat.field);
        Mat<CycNum> cm(3, 3, z);
        for (const auto& [e, c] : conic->terms()) {
          int i = -1, j = -1;
          for (size_t v = 0; v < 3; ++v) {
            if (e[v] == 2) i = j = static_cast<int>(v);
            if (e[v] == 1) (i < 0 ? i : j) = static_cast<int>(v);
          }
          if (i == j) {
            cm.at(i, i) = cm.at(i, i) + c;
          } else {
            CycNum half = c / CycNum::from_int(cat.field, 2);
            cm.at(i, j) = cm.at(i, j) + half;
            cm.at(j, i) = cm.at(j, i) + half;
          }
        }
        // line coefficient vectors
        auto line_vec = [&](const MultiPoly<CycNum>& l) {
          std::vector<CycNum> v(3, z);
          for (const auto& [e, c] : l.terms())
            for (size_t t = 0; t < 3; ++t)
              if (e[t] == 1) v[t] = c;
          return v;
        };
        // intersection point of two lines via cross product
        auto cross = [&](const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
          return std::vector<CycNum>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                     a[0] * b[1] - a[1] * b[0]};
        };
        for (int i = 0; i < 3; ++i) {
          auto vi = line_vec(lines[i]);
          auto pj = cross(line_vec(lines[(i + 1) % 3]), line_vec(lines[(i + 2) % 3]));
          auto polar = cm.apply(pj);
          // polar of the opposite vertex must be the line itself
          int piv = -1;
          for (int t = 0; t < 3; ++t)
            if (!vi[t].is_zero()) piv = t;
          if (piv < 0 || polar[piv].is_zero()) return failr("degenerate polar");
          CycNum s = vi[piv] / polar[piv];
          for (int t = 0; t < 3; ++t)
            if (!(polar[t] * s == vi[t])) return failr("polar-triangle identity fails");
        }
        return pass("each line is the polar of the opposite vertex");
      });
    }
    if (entry.expected.split_case) {
      ck.run("split-classification", [&]() {
        const auto& net = std::get<QuadricNetModel<CycNum>>(inst->model);
        auto s = classify_split(net);
        if (s.case_number != *entry.expected.split_case)
          return failr("case " + std::to_string(s.case_number) + " expected " +
                       std::to_string(*entry.expected.split_case));
        if (entry.expected.root_form_systems &&
            s.root_form_systems != *entry.expected.root_form_systems)
          return failr("root-form systems " + std::to_string(s.root_form_systems) +
                       " expected " + std::to_string(*entry.expected.root_form_systems));
        return pass("case " + std::to_string(s.case_number) + ", " +
                    std::to_string(s.root_form_systems) + " root-form systems");
      });
    }
  }

  if (entry.model.kind == "space_qc" && !entry.model.blocks.empty()) {
    ck.run("block-action", [&]() {
      if (!grp) return skip("no group");
      std::vector<Mat<CycNum>> blocks;
      for (const auto& blk : entry.model.blocks) {
        std::vector<std::vector<CycNum>> rows = blk;
        blocks.push_back(Mat<CycNum>::from_rows(rows));
      }
      auto act = action_on_blocks(*grp, blocks);
      if (entry.expected.block_image_order && act.image_order != *entry.expected.block_image_order)
        return failr("image order " + std::to_string(act.image_order));
      if (entry.expected.block_kernel_order &&
          act.kernel_order != *entry.expected.block_kernel_order)
        return failr("kernel order " + std::to_string(act.kernel_order));
      return pass("image " + std::to_string(act.image_order) + ", kernel " +
                  std::to_string(act.kernel_order));
    });
  }

  if (cremona_entry) {
    ck.run("pencil-action", [&]() {
      const auto& pm = std::get<PlaneNodalModel<CycNum>>(inst->model);
      std::vector<CremonaStep<CycNum>> steps;
      for (const auto& g : inst->generators) {
        CremonaStep<CycNum> s;
        if (g.element) s.collineation = *g.element;
        if (g.quad_base) s.quad_base = *g.quad_base;
        steps.push_back(std::move(s));
      }
      long order = verify_pencil_action(pm, steps);
      long want = entry.expected.pencil_order ? *entry.expected.pencil_order
                                              : entry.expected.order;
      if (order != want)
        return failr("pencil closure " + std::to_string(order) + " expected " +
                     std::to_string(want));
      return pass("pencil closure " + std::to_string(order));
    });
  }

  if (entry.model.kind == "hyper_branch") {
    ck.run("double-cover", [&]() {
      if (!grp) return skip("no group");
      if (!entry.expected.full_order) return skip("no declared full order");
      auto full = hyperelliptic_double_cover_group(*grp);
      long full_order = 2 * static_cast<long>(grp->order());
      if (static_cast<long>(full.order()) != full_order)
        return failr("lifted group order " + std::to_string(full.order()));
      if (full_order != *entry.expected.full_order)
        return failr("full order " + std::to_string(full_order) + " expected " +
                     std::to_string(*entry.expected.full_order));
      auto sub = hyperelliptic_reduced_lift(*grp);
      if (!is_normal(sub, full)) return failr("reduced subgroup not normal");
      return pass("full order " + std::to_string(full_order) +
                  ", reduced subgroup normal");
    });
  }

  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

FullReport verify_catalog(const Catalog& cat, const VerifyOptions& opt,
                          const std::string& filter) {
  FullReport out;
  out.seed = opt.seed;
  std::vector<const CatalogEntry*> selected;
  for (const auto& e : cat.entries) {
    if (!filter.empty() && e.id.find(filter) == std::string::npos) continue;
    selected.push_back(&e);
  }
  require(!selected.empty(), Err::Input, "no entries match the filter");
  out.entries.resize(selected.size());
  int jobs = std::max(1, opt.jobs);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) break;
      out.entries[i] = verify_entry(cat, *selected[i], opt);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : out.entries)
    if (e.failed) out.failed = true;
  return out;
}

std::string report_to_json(const FullReport& rep) {
  nlohmann::ordered_json doc;
  doc["seed"] = rep.seed;
  doc["status"] = rep.failed ? "fail" : "pass";
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : rep.entries) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["status"] = e.failed ? "fail" : "pass";
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : e.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["status"] = c.status;
      jc["details"] = c.details;
      checks.push_back(jc);
    }
    je["checks"] = checks;
    entries.push_back(je);
  }
  doc["entries"] = entries;
  return doc.dump(1);
}

std::string report_to_text(const FullReport& rep) {
  std::ostringstream os;
  os << "seed " << rep.seed << "\n";
  for (const auto& e : rep.entries) {
    os << e.id << "  [" << (e.failed ? "FAIL" : "ok") << "]  "
       << static_cast<long>(e.wall_ms) << " ms\n";
    for (const auto& c : e.checks) {
      os << "    " << c.status;
      for (size_t t = c.status.size(); t < 5; ++t) os << ' ';
      os << c.name;
      if (!c.details.empty()) os << "  -  " << c.details;
      os << "\n";
    }
  }
  os << (rep.failed ? "RESULT: FAIL" : "RESULT: PASS") << "\n";
  return os.str();
}

}  // namespace curveaut
