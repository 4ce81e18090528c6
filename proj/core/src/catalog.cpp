#include "curveaut/catalog.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace curveaut {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void load_fail(const std::string& where, const std::string& msg) {
  fail(Err::Load, "catalog: " + where + ": " + msg);
}

CycNum parse_cyclit(const ordered_json& j, const CycField* field, const std::string& where) {
  if (!j.is_array()) load_fail(where, "cyclotomic literal must be an array of triples");
  CycNum acc = CycNum::zero(field);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) load_fail(where, "literal triple malformed");
    long pow = t[0].get<long>();
    long num = t[1].get<long>();
    long den = t[2].get<long>();
    if (pow < 0 || pow >= field->index())
      load_fail(where, "root power outside the session field range");
    if (den <= 0) load_fail(where, "denominator must be positive");
    acc = acc + CycNum::root(field, field->index(), pow) * CycNum::from_rational(field, rat(num, den));
  }
  return acc;
}

ordered_json dump_cyclit(const CycNum& c) {
  ordered_json out = ordered_json::array();
  const auto& coeffs = c.coeffs();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (rat_is_zero(coeffs[i])) continue;
    long num = coeffs[i].get_num().get_si();
    long den = coeffs[i].get_den().get_si();
    require(mpz_cmp_si(coeffs[i].get_num().get_mpz_t(), num) == 0 &&
                mpz_cmp_si(coeffs[i].get_den().get_mpz_t(), den) == 0,
            Err::Load, "coefficient too large for the catalog encoding");
    out.push_back({static_cast<long>(i), num, den});
  }
  return out;
}

ParamCoef parse_coef(const ordered_json& j, const CycField* field,
                     const std::vector<std::string>& params, const std::string& where) {
  ParamCoef out;
  if (j.is_array()) {
    CycNum lit = parse_cyclit(j, field, where);
    return ParamCoef::literal(lit, params.size());
  }
  if (!j.is_object() || !j.contains("terms")) load_fail(where, "coefficient malformed");
  for (const auto& t : j["terms"]) {
    CycNum lit = parse_cyclit(t.at("c"), field, where);
    std::vector<int> e(params.size(), 0);
    if (t.contains("m")) {
      for (auto it = t["m"].begin(); it != t["m"].end(); ++it) {
        auto pos = std::find(params.begin(), params.end(), it.key());
        if (pos == params.end()) load_fail(where, "unknown parameter " + it.key());
        e[pos - params.begin()] = it.value().get<int>();
      }
    }
    auto found = out.terms.find(e);
    if (found == out.terms.end())
      out.terms.emplace(e, lit);
    else
      found->second = found->second + lit;
  }
  return out;
}

ordered_json dump_coef(const ParamCoef& c) {
  if (c.is_literal()) {
    CycNum acc;
    bool any = false;
    for (const auto& [e, lit] : c.terms) {
      acc = lit;
      any = true;
    }
    if (!any) return ordered_json::array();
    return dump_cyclit(acc);
  }
  ordered_json terms = ordered_json::array();
  for (const auto& [e, lit] : c.terms) {
    ordered_json t;
    t["c"] = dump_cyclit(lit);
    ordered_json m = ordered_json::object();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) m["p" + std::to_string(i)] = e[i];
    t["m"] = m;
    terms.push_back(t);
  }
  ordered_json out;
  out["terms"] = terms;
  return out;
}

// parameter names are positional in dump_coef ("p0", "p1", ...): rewrite on
// the way out so files stay readable with the entry's own names
ordered_json dump_coef_named(const ParamCoef& c, const std::vector<std::string>& params) {
  if (c.is_literal()) return dump_coef(c);
  ordered_json terms = ordered_json::array();
  for (const auto& [e, lit] : c.terms) {
    ordered_json t;
    t["c"] = dump_cyclit(lit);
    ordered_json m = ordered_json::object();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) m[params[i]] = e[i];
    if (!m.empty()) t["m"] = m;
    terms.push_back(t);
  }
  ordered_json out;
  out["terms"] = terms;
  return out;
}

ParamForm parse_form(const ordered_json& j, const CycField* field,
                     const std::vector<std::string>& params, const std::string& where) {
  ParamForm out;
  if (!j.contains("vars")) load_fail(where, "form missing vars");
  for (const auto& v : j["vars"]) out.vars.push_back(v.get<std::string>());
  for (const auto& mono : j.at("monomials")) {
    Exps e;
    for (const auto& x : mono.at("e")) e.push_back(x.get<int>());
    if (e.size() != out.vars.size()) load_fail(where, "exponent arity mismatch");
    out.monomials.emplace(std::move(e), parse_coef(mono.at("c"), field, params, where));
  }
  return out;
}

ordered_json dump_form(const ParamForm& f, const std::vector<std::string>& params) {
  ordered_json out;
  out["vars"] = f.vars;
  ordered_json ms = ordered_json::array();
  for (const auto& [e, c] : f.monomials) {
    ordered_json m;
    m["e"] = e;
    m["c"] = dump_coef_named(c, params);
    ms.push_back(m);
  }
  out["monomials"] = ms;
  return out;
}

ParamMatrix parse_matrix(const ordered_json& j, const CycField* field,
                         const std::vector<std::string>& params, const std::string& where) {
  ParamMatrix m;
  for (const auto& row : j) {
    std::vector<ParamCoef> r;
    for (const auto& cell : row) r.push_back(parse_coef(cell, field, params, where));
    m.push_back(std::move(r));
  }
  return m;
}

ordered_json dump_matrix(const ParamMatrix& m, const std::vector<std::string>& params) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& c : row) r.push_back(dump_coef_named(c, params));
    out.push_back(r);
  }
  return out;
}

std::vector<CycNum> parse_point(const ordered_json& j, const CycField* field,
                                const std::string& where) {
  std::vector<CycNum> p;
  for (const auto& c : j) p.push_back(parse_cyclit(c, field, where));
  return p;
}

ordered_json dump_point(const std::vector<CycNum>& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p) out.push_back(dump_cyclit(c));
  return out;
}

ParamGenerator parse_generator(const ordered_json& j, const CycField* field,
                               const std::vector<std::string>& params,
                               const std::string& where) {
  ParamGenerator g;
  g.kind = j.at("kind").get<std::string>();
  if (j.contains("label")) g.label = j["label"].get<std::string>();
  if (j.contains("fixed_points")) g.fixed_points = j["fixed_points"].get<long>();
  if (j.contains("quotient_genus")) g.quotient_genus = j["quotient_genus"].get<long>();
  if (g.kind == "projmap") {
    g.a = parse_matrix(j.at("matrix"), field, params, where);
  } else if (g.kind == "bimoebius") {
    g.a = parse_matrix(j.at("a"), field, params, where);
    g.b = parse_matrix(j.at("b"), field, params, where);
    g.swap = j.at("swap").get<bool>();
  } else if (g.kind == "trigonal") {
    g.a = parse_matrix(j.at("a"), field, params, where);
    g.c = parse_coef(j.at("c"), field, params, where);
  } else if (g.kind == "cremona_quad") {
    auto b = j.at("base");
    if (b.size() != 3) load_fail(where, "cremona base needs three indices");
    for (int i = 0; i < 3; ++i) g.quad_base[i] = b[i].get<int>();
  } else {
    load_fail(where, "unknown generator kind " + g.kind);
  }
  return g;
}

ordered_json dump_generator(const ParamGenerator& g, const std::vector<std::string>& params) {
  ordered_json out;
  out["kind"] = g.kind;
  if (g.kind == "projmap") {
    out["matrix"] = dump_matrix(g.a, params);
  } else if (g.kind == "bimoebius") {
    out["swap"] = g.swap;
    out["a"] = dump_matrix(g.a, params);
    out["b"] = dump_matrix(g.b, params);
  } else if (g.kind == "trigonal") {
    out["a"] = dump_matrix(g.a, params);
    out["c"] = dump_coef_named(g.c, params);
  } else {
    out["base"] = g.quad_base;
  }
  if (!g.label.empty()) out["label"] = g.label;
  if (g.fixed_points) out["fixed_points"] = *g.fixed_points;
  if (g.quotient_genus) out["quotient_genus"] = *g.quotient_genus;
  return out;
}

}  // namespace

Catalog load_catalog(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(Err::Load, std::string("catalog: invalid JSON: ") + e.what());
  }
  Catalog cat;
  cat.field_index = doc.at("field_index").get<long>();
  cat.field = CycField::get(cat.field_index);
  std::map<std::string, bool> seen;
  for (const auto& je : doc.at("entries")) {
    CatalogEntry e;
    e.id = je.at("id").get<std::string>();
    const std::string where = "entry " + e.id;
    if (seen.count(e.id)) load_fail(where, "duplicate id");
    seen[e.id] = true;
    e.genus = je.at("genus").get<long>();
    if (je.contains("ref")) e.ref = je["ref"].get<std::string>();
    if (je.contains("params"))
      for (const auto& p : je["params"]) e.params.push_back(p.get<std::string>());
    if (je.contains("moduli"))
      for (auto it = je["moduli"].begin(); it != je["moduli"].end(); ++it)
        e.default_moduli.emplace(it.key(), parse_cyclit(it.value(), cat.field, where));
    const auto& jm = je.at("model");
    e.model.kind = jm.at("kind").get<std::string>();
    if (e.model.kind == "biform33" || e.model.kind == "plane_nodal" ||
        e.model.kind == "hyper_branch") {
      e.model.form = parse_form(jm.at("form"), cat.field, e.params, where);
    } else if (e.model.kind == "trigonal") {
      e.model.form4 = parse_form(jm.at("f4"), cat.field, e.params, where);
      e.model.form2 = parse_form(jm.at("f6"), cat.field, e.params, where);
    } else if (e.model.kind == "space_qc") {
      e.model.form = parse_form(jm.at("quadric"), cat.field, e.params, where);
      e.model.form2 = parse_form(jm.at("cubic"), cat.field, e.params, where);
      if (jm.contains("blocks"))
        for (const auto& blk : jm["blocks"]) {
          std::vector<std::vector<CycNum>> rows;
          for (const auto& pt : blk) rows.push_back(parse_point(pt, cat.field, where));
          e.model.blocks.push_back(std::move(rows));
        }
    } else if (e.model.kind == "quadric_net") {
      e.model.mats[0] = parse_matrix(jm.at("a1"), cat.field, e.params, where);
      e.model.mats[1] = parse_matrix(jm.at("a2"), cat.field, e.params, where);
      e.model.mats[2] = parse_matrix(jm.at("a3"), cat.field, e.params, where);
      if (jm.contains("delta5_factors"))
        for (const auto& f : jm["delta5_factors"])
          e.model.delta5_factors.push_back(parse_form(f, cat.field, e.params, where));
      if (jm.contains("polar_triangle")) e.model.polar_triangle = jm["polar_triangle"].get<bool>();
    } else {
      load_fail(where, "unknown model kind " + e.model.kind);
    }
    if (jm.contains("singular_points")) {
      for (const auto& sp : jm["singular_points"])
        e.model.marked.emplace_back(parse_point(sp.at("point"), cat.field, where),
                                    sp.at("mult").get<long>());
    }
    for (const auto& jg : je.at("generators"))
      e.generators.push_back(parse_generator(jg, cat.field, e.params, where));
    if (je.contains("witnesses"))
      for (const auto& jw : je["witnesses"])
        e.witnesses.push_back(parse_generator(jw, cat.field, e.params, where));
    const auto& jx = je.at("expected");
    e.expected.order = jx.at("order").get<long>();
    e.expected.type = jx.at("type").get<std::string>();
    if (jx.contains("histogram"))
      for (auto it = jx["histogram"].begin(); it != jx["histogram"].end(); ++it)
        e.expected.histogram[std::stol(it.key())] = it.value().get<long>();
    if (jx.contains("full_order")) e.expected.full_order = jx["full_order"].get<long>();
    if (jx.contains("moduli_count")) e.expected.moduli_count = jx["moduli_count"].get<long>();
    if (jx.contains("split_case")) e.expected.split_case = jx["split_case"].get<int>();
    if (jx.contains("root_form_systems"))
      e.expected.root_form_systems = jx["root_form_systems"].get<long>();
    if (jx.contains("block_image_order"))
      e.expected.block_image_order = jx["block_image_order"].get<long>();
    if (jx.contains("block_kernel_order"))
      e.expected.block_kernel_order = jx["block_kernel_order"].get<long>();
    if (jx.contains("pencil_order")) e.expected.pencil_order = jx["pencil_order"].get<long>();
    if (jx.contains("notes")) e.expected.notes = jx["notes"].get<std::string>();
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::Load, "cannot open catalog file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_catalog(ss.str());
}

std::string save_catalog(const Catalog& cat) {
  ordered_json doc;
  doc["field_index"] = cat.field_index;
  ordered_json entries = ordered_json::array();
  for (const auto& e : cat.entries) {
    ordered_json je;
    je["id"] = e.id;
    je["genus"] = e.genus;
    if (!e.ref.empty()) je["ref"] = e.ref;
    if (!e.params.empty()) je["params"] = e.params;
    if (!e.default_moduli.empty()) {
      ordered_json m;
      for (const auto& [k, v] : e.default_moduli) m[k] = dump_cyclit(v);
      je["moduli"] = m;
    }
    ordered_json jm;
    jm["kind"] = e.model.kind;
    if (e.model.kind == "biform33" || e.model.kind == "plane_nodal" ||
        e.model.kind == "hyper_branch") {
      jm["form"] = dump_form(e.model.form, e.params);
    } else if (e.model.kind == "trigonal") {
      jm["f4"] = dump_form(e.model.form4, e.params);
      jm["f6"] = dump_form(e.model.form2, e.params);
    } else if (e.model.kind == "space_qc") {
      jm["quadric"] = dump_form(e.model.form, e.params);
      jm["cubic"] = dump_form(e.model.form2, e.params);
      if (!e.model.blocks.empty()) {
        ordered_json blocks = ordered_json::array();
        for (const auto& blk : e.model.blocks) {
          ordered_json rows = ordered_json::array();
          for (const auto& pt : blk) rows.push_back(dump_point(pt));
          blocks.push_back(rows);
        }
        jm["blocks"] = blocks;
      }
    } else if (e.model.kind == "quadric_net") {
      jm["a1"] = dump_matrix(e.model.mats[0], e.params);
      jm["a2"] = dump_matrix(e.model.mats[1], e.params);
      jm["a3"] = dump_matrix(e.model.mats[2], e.params);
      if (!e.model.delta5_factors.empty()) {
        ordered_json fs = ordered_json::array();
        for (const auto& f : e.model.delta5_factors) fs.push_back(dump_form(f, e.params));
        jm["delta5_factors"] = fs;
      }
      if (e.model.polar_triangle) jm["polar_triangle"] = true;
    }
    if (!e.model.marked.empty()) {
      ordered_json sp = ordered_json::array();
      for (const auto& [pt, mult] : e.model.marked) {
        ordered_json p;
        p["point"] = dump_point(pt);
        p["mult"] = mult;
        sp.push_back(p);
      }
      jm["singular_points"] = sp;
    }
    je["model"] = jm;
    ordered_json gens = ordered_json::array();
    for (const auto& g : e.generators) gens.push_back(dump_generator(g, e.params));
    je["generators"] = gens;
    if (!e.witnesses.empty()) {
      ordered_json ws = ordered_json::array();
      for (const auto& w : e.witnesses) ws.push_back(dump_generator(w, e.params));
      je["witnesses"] = ws;
    }
    ordered_json jx;
    jx["order"] = e.expected.order;
    jx["type"] = e.expected.type;
    if (!e.expected.histogram.empty()) {
      ordered_json h;
      for (const auto& [k, v] : e.expected.histogram) h[std::to_string(k)] = v;
      jx["histogram"] = h;
    }
    if (e.expected.full_order) jx["full_order"] = *e.expected.full_order;
    if (e.expected.moduli_count) jx["moduli_count"] = *e.expected.moduli_count;
    if (e.expected.split_case) jx["split_case"] = *e.expected.split_case;
    if (e.expected.root_form_systems) jx["root_form_systems"] = *e.expected.root_form_systems;
    if (e.expected.block_image_order) jx["block_image_order"] = *e.expected.block_image_order;
    if (e.expected.block_kernel_order)
      jx["block_kernel_order"] = *e.expected.block_kernel_order;
    if (e.expected.pencil_order) jx["pencil_order"] = *e.expected.pencil_order;
    if (!e.expected.notes.empty()) jx["notes"] = e.expected.notes;
    je["expected"] = jx;
    entries.push_back(je);
  }
  doc["entries"] = entries;
  return doc.dump(1);
}

namespace {

MultiPoly<CycNum> form_to_poly(const ParamForm& f, const std::vector<CycNum>& values,
                               const CycField* field, std::vector<int> weights = {}) {
  if (weights.empty()) weights.assign(f.vars.size(), 1);
  auto vt = VarTable::make(f.vars, weights);
  auto p = MultiPoly<CycNum>::zero(vt, CycNum::zero(field));
  for (const auto& [e, c] : f.monomials) p.add_term(e, c.eval(values, field));
  return p;
}

Mat<CycNum> matrix_to_mat(const ParamMatrix& m, const std::vector<CycNum>& values,
                          const CycField* field) {
  require(!m.empty(), Err::Load, "empty matrix");
  Mat<CycNum> out(m.size(), m[0].size(), CycNum::zero(field));
  for (size_t i = 0; i < m.size(); ++i) {
    require(m[i].size() == m[0].size(), Err::Load, "ragged matrix");
    for (size_t j = 0; j < m[i].size(); ++j) out.at(i, j) = m[i][j].eval(values, field);
  }
  return out;
}

BinaryForm<CycNum> form_to_binary(const ParamForm& f, const std::vector<CycNum>& values,
                                  const CycField* field, long expect_degree) {
  auto p = form_to_poly(f, values, field);
  if (p.is_zero()) return BinaryForm<CycNum>::zero(CycNum::zero(field));
  auto b = as_binary(p, 0, 1);
  require(b.is_zero() || b.degree() == expect_degree, Err::Load,
          "binary form has unexpected degree");
  return b;
}

}  // namespace

InstancedEntry instantiate_with(const Catalog& cat, const CatalogEntry& entry,
                                const std::map<std::string, CycNum>& assignment) {
  std::vector<CycNum> values;
  for (const auto& p : entry.params) {
    auto it = assignment.find(p);
    require(it != assignment.end(), Err::Input,
            "missing value for parameter " + p + " of entry " + entry.id);
    values.push_back(it->second);
  }
  const CycField* field = cat.field;
  InstancedEntry out;
  out.src = &entry;
  out.moduli = assignment;
  const auto& m = entry.model;
  if (m.kind == "biform33") {
    out.model = BiForm33Model<CycNum>{form_to_poly(m.form, values, field)};
  } else if (m.kind == "trigonal") {
    out.model = TrigonalModel<CycNum>{form_to_binary(m.form4, values, field, 4),
                                      form_to_binary(m.form2, values, field, 6)};
  } else if (m.kind == "quadric_net") {
    out.model = QuadricNetModel<CycNum>{matrix_to_mat(m.mats[0], values, field),
                                        matrix_to_mat(m.mats[1], values, field),
                                        matrix_to_mat(m.mats[2], values, field)};
  } else if (m.kind == "space_qc") {
    out.model = SpaceQCModel<CycNum>{form_to_poly(m.form, values, field),
                                     form_to_poly(m.form2, values, field)};
  } else if (m.kind == "plane_nodal") {
    PlaneNodalModel<CycNum> pm;
    pm.form = form_to_poly(m.form, values, field);
    for (const auto& [pt, mult] : m.marked) pm.marked.push_back({pt, mult});
    out.model = pm;
  } else if (m.kind == "hyper_branch") {
    long deg = 0;
    for (const auto& [e, c] : m.form.monomials) deg = std::max<long>(deg, e[0] + e[1]);
    out.model = HyperBranchModel<CycNum>{form_to_binary(m.form, values, field, deg)};
  } else {
    fail(Err::Load, "unknown model kind " + m.kind);
  }
  auto build = [&](const ParamGenerator& g) {
    InstancedGenerator ig;
    ig.label = g.label;
    ig.fixed_points = g.fixed_points;
    ig.quotient_genus = g.quotient_genus;
    if (g.kind == "projmap") {
      ig.element = Element<CycNum>::proj(matrix_to_mat(g.a, values, field));
    } else if (g.kind == "bimoebius") {
      ig.element = Element<CycNum>::bimoebius(matrix_to_mat(g.a, values, field),
                                              matrix_to_mat(g.b, values, field), g.swap);
    } else if (g.kind == "trigonal") {
      ig.element =
          Element<CycNum>::trigonal(matrix_to_mat(g.a, values, field), g.c.eval(values, field));
    } else {
      ig.quad_base = g.quad_base;
    }
    return ig;
  };
  for (const auto& g : entry.generators) out.generators.push_back(build(g));
  for (const auto& w : entry.witnesses) out.witnesses.push_back(build(w));
  return out;
}

InstancedEntry instantiate_moduli(const Catalog& cat, const CatalogEntry& entry, uint64_t seed,
                                  int max_retries) {
  if (entry.params.empty()) return instantiate_with(cat, entry, {});
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::map<std::string, CycNum> assignment;
    for (const auto& p : entry.params) {
      int n = 0;
      while (n == 0) n = num(rng);
      assignment.emplace(p, CycNum::from_rational(cat.field, rat(n, den(rng))));
    }
    try {
      auto inst = instantiate_with(cat, entry, assignment);
      // every generator must preserve the instance
      for (const auto& g : inst.generators)
        if (g.element) invariance(inst.model, *g.element);
      // every witness must fail
      bool witness_passed = false;
      for (const auto& w : inst.witnesses) {
        if (!w.element) continue;
        try {
          invariance(inst.model, *w.element);
          witness_passed = true;
        } catch (const Error&) {
        }
      }
      if (witness_passed) continue;
      auto rep = smoothness_check(inst.model);
      if (rep.status == SmoothStatus::Singular) continue;
      return inst;
    } catch (const Error&) {
      continue;
    }
  }
  fail(Err::DegenerateFamily,
       "entry " + entry.id + ": no admissible parameter values after retries");
}

std::string default_catalog_path() {
#ifdef CURVEAUT_DEFAULT_CATALOG
  return CURVEAUT_DEFAULT_CATALOG;
#else
  return "catalog.json";
#endif
}

}  // namespace curveaut
