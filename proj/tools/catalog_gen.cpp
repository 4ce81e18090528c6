// Builds the shipped curve catalog: every entry is constructed exactly,
// verified end to end (invariance, closure order, classification, histograms,
// fixed-point and quotient data, model extras), and only then serialized.
//
// Usage: catalog_gen <output.json>

#include <fstream>
#include <iostream>

#include "curveaut/catalog.hpp"
#include "curveaut/report.hpp"

using namespace curveaut;

namespace {

const CycField* F = CycField::get(120);
using El = Element<CycNum>;
using M = Mat<CycNum>;
using P = MultiPoly<CycNum>;

CycNum cn(long v) { return CycNum::from_int(F, v); }
CycNum cq(long n, long d) { return CycNum::from_rational(F, rat(n, d)); }
CycNum rt(long k, long j) { return CycNum::root(F, k, j); }
CycNum cz() { return CycNum::zero(F); }

// --- parametric building blocks -------------------------------------------

// polynomial ring over geometric variables plus weight-0 parameters
struct Ring {
  std::vector<std::string> geom;
  std::vector<std::string> params;
  std::shared_ptr<const VarTable> vt;

  Ring(std::vector<std::string> g, std::vector<std::string> p) : geom(g), params(p) {
    std::vector<std::string> names = g;
    std::vector<int> weights(g.size(), 1);
    for (const auto& q : p) {
      names.push_back(q);
      weights.push_back(0);
    }
    vt = VarTable::make(names, weights);
  }
  P var(const std::string& n) const { return P::variable(vt, vt->index_of(n), cz()); }
  P c(const CycNum& v) const { return P::constant(vt, v); }
  P c(long v) const { return c(cn(v)); }

  ParamForm form(const P& poly) const {
    ParamForm out;
    out.vars = geom;
    for (const auto& [e, coef] : poly.terms()) {
      Exps ge(geom.size());
      std::vector<int> pe(params.size());
      for (size_t i = 0; i < geom.size(); ++i) ge[i] = e[i];
      for (size_t i = 0; i < params.size(); ++i) pe[i] = e[geom.size() + i];
      auto it = out.monomials.find(ge);
      if (it == out.monomials.end()) {
        ParamCoef pc;
        pc.terms.emplace(pe, coef);
        out.monomials.emplace(ge, std::move(pc));
      } else {
        auto jt = it->second.terms.find(pe);
        if (jt == it->second.terms.end())
          it->second.terms.emplace(pe, coef);
        else
          jt->second = jt->second + coef;
      }
    }
    return out;
  }
};

ParamCoef pc_lit(const CycNum& v, size_t nparams) { return ParamCoef::literal(v, nparams); }

// coefficient = literal * (param_index ^ power)
ParamCoef pc_mono(const CycNum& lit, size_t nparams, size_t pidx, int power) {
  ParamCoef out;
  std::vector<int> e(nparams, 0);
  e[pidx] = power;
  out.terms.emplace(std::move(e), lit);
  return out;
}

ParamMatrix pmat(const std::vector<std::vector<CycNum>>& rows, size_t nparams) {
  ParamMatrix m;
  for (const auto& r : rows) {
    std::vector<ParamCoef> row;
    for (const auto& v : r) row.push_back(pc_lit(v, nparams));
    m.push_back(std::move(row));
  }
  return m;
}

ParamMatrix pmat_el(const El& e) {
  const Mat<CycNum>& m = e.proj_payload().m;
  std::vector<std::vector<CycNum>> rows;
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<CycNum> r;
    for (size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
    rows.push_back(r);
  }
  return pmat(rows, 0);
}

ParamGenerator gen_proj(const std::vector<std::vector<CycNum>>& rows, size_t nparams,
                        const std::string& label) {
  ParamGenerator g;
  g.kind = "projmap";
  g.a = pmat(rows, nparams);
  g.label = label;
  return g;
}

ParamGenerator gen_bimoebius(const std::vector<std::vector<CycNum>>& a,
                             const std::vector<std::vector<CycNum>>& b, bool swap,
                             size_t nparams, const std::string& label) {
  ParamGenerator g;
  g.kind = "bimoebius";
  g.a = pmat(a, nparams);
  g.b = pmat(b, nparams);
  g.swap = swap;
  g.label = label;
  return g;
}

ParamGenerator gen_trigonal(const std::vector<std::vector<CycNum>>& a, const CycNum& c,
                            size_t nparams, const std::string& label) {
  ParamGenerator g;
  g.kind = "trigonal";
  g.a = pmat(a, nparams);
  g.c = pc_lit(c, nparams);
  g.label = label;
  return g;
}

ParamGenerator with_data(ParamGenerator g, long fixed, long quotient) {
  g.fixed_points = fixed;
  g.quotient_genus = quotient;
  return g;
}

ExpectedData expect(long order, const std::string& type, long moduli = -1) {
  ExpectedData e;
  e.order = order;
  e.type = type;
  if (moduli >= 0) e.moduli_count = moduli;
  return e;
}

// a five-line or mixed factor list over (l1, l2, l3)
ParamForm lambda_form(const std::vector<std::pair<Exps, CycNum>>& monos) {
  ParamForm f;
  f.vars = {"l1", "l2", "l3"};
  for (const auto& [e, c] : monos) {
    ParamCoef pc;
    pc.terms.emplace(std::vector<int>{}, c);
    f.monomials.emplace(e, std::move(pc));
  }
  return f;
}

ParamForm lambda_line(const CycNum& c1, const CycNum& c2, const CycNum& c3) {
  std::vector<std::pair<Exps, CycNum>> m;
  if (!c1.is_zero()) m.push_back({{1, 0, 0}, c1});
  if (!c2.is_zero()) m.push_back({{0, 1, 0}, c2});
  if (!c3.is_zero()) m.push_back({{0, 0, 1}, c3});
  return lambda_form(m);
}

// --- generator searches -----------------------------------------------------

// non-swap partner on the second ruling for a given first-ruling matrix
std::optional<M> find_partner(const BiForm33Model<CycNum>& model, const M& tx,
                              const Group<CycNum>& ruling_group, bool swap) {
  for (const auto& w : ruling_group.elems) {
    try {
      auto cand = El::bimoebius(tx, w.proj_payload().m, swap);
      invariance(model, cand);
      return w.proj_payload().m;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

static void add_p4q(Catalog& cat) {
  auto i = rt(4, 1);
  auto j = rt(3, 1);
  auto eps = rt(5, 1);
  std::vector<std::vector<CycNum>> I2{{cn(1), cz()}, {cz(), cn(1)}};
  std::vector<std::vector<CycNum>> SG{{cz(), cn(1)}, {cn(1), cz()}};
  std::vector<std::vector<CycNum>> RHO{{cz(), cn(-1)}, {cn(1), cz()}};

  // 1) involution swapping the rulings
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b", "c", "d", "e", "f"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b"), c = R.var("c"), d = R.var("d"), e = R.var("e"),
         f = R.var("f");
    auto form = x1.pow(2) * y1.pow(2) * (x1 * y2 + x2 * y1) +
                x1 * y1 * (x1.pow(2) * y2.pow(2) + x2.pow(2) * y1.pow(2) +
                           a * x1 * x2 * y1 * y2) +
                b * (x1.pow(3) * y2.pow(3) + x2.pow(3) * y1.pow(3)) +
                c * x1 * x2 * y1 * y2 * (x1 * y2 + x2 * y1) +
                x2 * y2 * (d * (x1.pow(2) * y2.pow(2) + x2.pow(2) * y1.pow(2)) +
                           e * x1 * x2 * y1 * y2) +
                f * x2.pow(2) * y2.pow(2) * (x1 * y2 + x2 * y1);
    CatalogEntry en;
    en.id = "p4q-01";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: involution exchanging the two rulings";
    en.params = R.params;
    for (auto [k, v] : std::map<std::string, long>{
             {"a", 2}, {"b", 3}, {"c", 5}, {"d", 7}, {"e", 1}, {"f", 4}})
      en.default_moduli.emplace(k, cn(v));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    en.generators.push_back(with_data(gen_bimoebius(I2, I2, true, 6, "ruling swap"), 6, 1));
    en.expected = expect(2, "cyclic", 6);
    cat.entries.push_back(std::move(en));
  }

  // 2) involution preserving the rulings
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b", "c", "d", "e"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b"), c = R.var("c"), d = R.var("d"), e = R.var("e");
    auto form = x1.pow(3) * y1.pow(3) +
                x1 * y1 * x2 * y2 * (a * x1 * y1 + b * x2 * y2) + c * x2.pow(3) * y2.pow(3) +
                x1.pow(3) * y1 * y2.pow(2) + x1 * x2.pow(2) * y1.pow(3) +
                d * x2.pow(3) * y1.pow(2) * y2 + e * x1.pow(2) * x2 * y2.pow(3);
    CatalogEntry en;
    en.id = "p4q-02";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: involution fixing both rulings";
    en.params = R.params;
    for (auto [k, v] :
         std::map<std::string, long>{{"a", 2}, {"b", 3}, {"c", 5}, {"d", 7}, {"e", 4}})
      en.default_moduli.emplace(k, cn(v));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> D{{cn(-1), cz()}, {cz(), cn(1)}};
    en.generators.push_back(with_data(gen_bimoebius(D, D, false, 5, "sign involution"), 2, 2));
    en.witnesses.push_back(gen_bimoebius(I2, I2, true, 5, "swap specialization"));
    en.expected = expect(2, "cyclic", 5);
    cat.entries.push_back(std::move(en));
  }

  // 3) Klein four-group with ruling exchange (d = e member of the family above)
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b", "c", "d"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b"), c = R.var("c"), d = R.var("d");
    auto form = x1.pow(3) * y1.pow(3) +
                x1 * y1 * x2 * y2 * (a * x1 * y1 + b * x2 * y2) + c * x2.pow(3) * y2.pow(3) +
                x1.pow(3) * y1 * y2.pow(2) + x1 * x2.pow(2) * y1.pow(3) +
                d * x2.pow(3) * y1.pow(2) * y2 + d * x1.pow(2) * x2 * y2.pow(3);
    CatalogEntry en;
    en.id = "p4q-03";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: Klein four-group with ruling exchange";
    en.params = R.params;
    for (auto [k, v] : std::map<std::string, long>{{"a", 2}, {"b", 3}, {"c", 5}, {"d", 7}})
      en.default_moduli.emplace(k, cn(v));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> D{{cn(-1), cz()}, {cz(), cn(1)}};
    en.generators.push_back(gen_bimoebius(D, D, false, 4, "sign involution"));
    en.generators.push_back(gen_bimoebius(I2, I2, true, 4, "ruling swap"));
    en.expected = expect(4, "klein4", 4);
    en.expected.histogram = {{1, 1}, {2, 3}};
    cat.entries.push_back(std::move(en));
  }

  // 4) Klein four-group preserving the rulings
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b", "c"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b"), c = R.var("c");
    auto form = x1.pow(3) * y1.pow(3) + x2.pow(3) * y2.pow(3) +
                a * x1 * y1 * x2 * y2 * (x1 * y1 + x2 * y2) +
                b * y1 * y2 * (x1.pow(3) * y2 + x2.pow(3) * y1) +
                c * x1 * x2 * (x1 * y2.pow(3) + x2 * y1.pow(3));
    CatalogEntry en;
    en.id = "p4q-04";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: Klein four-group fixing both rulings";
    en.params = R.params;
    for (auto [k, v] : std::map<std::string, long>{{"a", 2}, {"b", 3}, {"c", 5}})
      en.default_moduli.emplace(k, cn(v));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    en.generators.push_back(gen_bimoebius(SG, SG, false, 3, "coordinate swap pair"));
    en.generators.push_back(gen_bimoebius(RHO, RHO, false, 3, "signed swap pair"));
    // the period-4 ruling exchange exists exactly on the c = -b member
    std::vector<std::vector<CycNum>> A4{{cz(), cn(1)}, {i, cz()}};
    std::vector<std::vector<CycNum>> B4{{cz(), cn(1)}, {-i, cz()}};
    en.witnesses.push_back(gen_bimoebius(A4, B4, true, 3, "period-4 exchange"));
    en.expected = expect(4, "klein4", 3);
    cat.entries.push_back(std::move(en));
  }

  // 5) dihedral of order 6 with ruling exchange
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b", "c"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b"), c = R.var("c");
    auto form = x1.pow(3) * y1.pow(3) + x2.pow(3) * y2.pow(3) +
                a * (x1.pow(3) * y2.pow(3) + x2.pow(3) * y1.pow(3)) +
                b * x1.pow(2) * y1.pow(2) * x2 * y2 + c * x1 * y1 * x2.pow(2) * y2.pow(2);
    CatalogEntry en;
    en.id = "p4q-05";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: dihedral of order 6 with ruling exchange";
    en.params = R.params;
    for (auto [k, v] : std::map<std::string, long>{{"a", 2}, {"b", 3}, {"c", 5}})
      en.default_moduli.emplace(k, cn(v));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> D3{{j * j, cz()}, {cz(), cn(1)}};
    std::vector<std::vector<CycNum>> D3b{{j, cz()}, {cz(), cn(1)}};
    en.generators.push_back(gen_bimoebius(D3, D3b, false, 3, "period-3 rotation"));
    en.generators.push_back(gen_bimoebius(I2, I2, true, 3, "ruling swap"));
    std::vector<std::vector<CycNum>> A6{{cz(), j}, {cn(1), cz()}};
    std::vector<std::vector<CycNum>> B6{{cz(), j * j}, {cn(1), cz()}};
    en.witnesses.push_back(gen_bimoebius(A6, B6, true, 3, "period-6 exchange"));
    en.expected = expect(6, "dihedral", 3);
    cat.entries.push_back(std::move(en));
  }

  // 6) cyclic of order 3 fixing every generator of one ruling
  {
    Ring R({"x1", "x2", "y1", "y2"},
           {"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto f3 = R.var("a0") * y1.pow(3) + R.var("a1") * y1.pow(2) * y2 +
              R.var("a2") * y1 * y2.pow(2) + R.var("a3") * y2.pow(3);
    auto p3 = R.var("b0") * y1.pow(3) + R.var("b1") * y1.pow(2) * y2 +
              R.var("b2") * y1 * y2.pow(2) + R.var("b3") * y2.pow(3);
    auto form = x1.pow(3) * f3 + x2.pow(3) * p3;
    CatalogEntry en;
    en.id = "p4q-06";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: period 3 fixing one ruling generatorwise";
    en.params = R.params;
    long dv[] = {1, 2, 3, 5, 7, 1, 4, 2};
    for (size_t t = 0; t < 8; ++t) en.default_moduli.emplace(R.params[t], cn(dv[t]));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> DJ{{j, cz()}, {cz(), cn(1)}};
    en.generators.push_back(
        with_data(gen_bimoebius(DJ, I2, false, 8, "period-3 on the first ruling"), 6, 0));
    en.expected = expect(3, "cyclic", 3);
    cat.entries.push_back(std::move(en));
  }

  // 7) dihedral of order 8 (c = -b member of the Klein family)
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b");
    auto form = x1.pow(3) * y1.pow(3) + x2.pow(3) * y2.pow(3) +
                a * x1 * y1 * x2 * y2 * (x1 * y1 + x2 * y2) +
                b * y1 * y2 * (x1.pow(3) * y2 + x2.pow(3) * y1) -
                b * x1 * x2 * (x1 * y2.pow(3) + x2 * y1.pow(3));
    CatalogEntry en;
    en.id = "p4q-07";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: dihedral of order 8 with ruling exchange";
    en.params = R.params;
    en.default_moduli.emplace("a", cn(2));
    en.default_moduli.emplace("b", cn(3));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> A4{{cz(), cn(1)}, {i, cz()}};
    std::vector<std::vector<CycNum>> B4{{cz(), cn(1)}, {-i, cz()}};
    en.generators.push_back(gen_bimoebius(A4, B4, true, 2, "period-4 exchange"));
    en.generators.push_back(gen_bimoebius(SG, SG, false, 2, "coordinate swap pair"));
    en.expected = expect(8, "dihedral", 2);
    cat.entries.push_back(std::move(en));
  }

  // 8) dihedral of order 12 with ruling exchange (b = c member)
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b");
    auto form = x1.pow(3) * y1.pow(3) + x2.pow(3) * y2.pow(3) +
                a * (x1.pow(3) * y2.pow(3) + x2.pow(3) * y1.pow(3)) +
                b * x1.pow(2) * y1.pow(2) * x2 * y2 + b * x1 * y1 * x2.pow(2) * y2.pow(2);
    CatalogEntry en;
    en.id = "p4q-08";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: dihedral of order 12 with ruling exchange";
    en.params = R.params;
    en.default_moduli.emplace("a", cn(2));
    en.default_moduli.emplace("b", cn(3));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> D3{{j * j, cz()}, {cz(), cn(1)}};
    std::vector<std::vector<CycNum>> D3b{{j, cz()}, {cz(), cn(1)}};
    std::vector<std::vector<CycNum>> A6{{cz(), j}, {cn(1), cz()}};
    std::vector<std::vector<CycNum>> B6{{cz(), j * j}, {cn(1), cz()}};
    en.generators.push_back(gen_bimoebius(D3, D3b, false, 2, "period-3 rotation"));
    en.generators.push_back(gen_bimoebius(I2, I2, true, 2, "ruling swap"));
    en.generators.push_back(gen_bimoebius(A6, B6, true, 2, "period-6 exchange"));
    en.expected = expect(12, "dihedral", 2);
    cat.entries.push_back(std::move(en));
  }

  // 9) dihedral of order 6 preserving the rulings
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a", "b"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a"), b = R.var("b");
    auto fplus = (y1 - y2) * (y1 - a * y2) * (y1 - b * y2);
    auto fminus = (y1 + y2) * (y1 + a * y2) * (y1 + b * y2);
    auto form = x1.pow(3) * fplus + x2.pow(3) * fminus;
    CatalogEntry en;
    en.id = "p4q-09";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: dihedral of order 6 fixing both rulings";
    en.params = R.params;
    en.default_moduli.emplace("a", cn(2));
    en.default_moduli.emplace("b", cn(3));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> DJ{{j, cz()}, {cz(), cn(1)}};
    std::vector<std::vector<CycNum>> DS{{cn(1), cz()}, {cz(), cn(-1)}};
    en.generators.push_back(gen_bimoebius(DJ, I2, false, 2, "period-3 on the first ruling"));
    en.generators.push_back(gen_bimoebius(SG, DS, false, 2, "pairing involution"));
    en.expected = expect(6, "dihedral", 2);
    cat.entries.push_back(std::move(en));
  }

  // 10) octahedral group (search completes the generator set)
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"b"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto b = R.var("b");
    auto f0 = x1 * y1 + x2 * y2;
    auto f1 = x1 * y1 - x2 * y2;
    auto f2 = x1 * y2 - x2 * y1;
    auto f3 = x1 * y2 + x2 * y1;
    auto form = f0.pow(3) + b * f1 * f2 * f3;
    CatalogEntry en;
    en.id = "p4q-10";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: octahedral group";
    en.params = R.params;
    en.default_moduli.emplace("b", cn(2));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    en.generators.push_back(gen_bimoebius(SG, SG, false, 1, "coordinate swap pair"));
    en.generators.push_back(gen_bimoebius(RHO, RHO, false, 1, "signed swap pair"));
    // period-3 element: sign search over the stated shape
    Catalog probecat;
    probecat.field_index = 120;
    probecat.field = F;
    auto inst_model = [&](long bval) {
      auto one = cn(1);
      auto vt = VarTable::make({"x1", "x2", "y1", "y2"});
      auto X1 = P::variable(vt, 0, cz()), X2 = P::variable(vt, 1, cz()),
           Y1 = P::variable(vt, 2, cz()), Y2 = P::variable(vt, 3, cz());
      auto F0 = X1 * Y1 + X2 * Y2;
      auto F1 = X1 * Y1 - X2 * Y2;
      auto F2 = X1 * Y2 - X2 * Y1;
      auto F3 = X1 * Y2 + X2 * Y1;
      (void)one;
      return BiForm33Model<CycNum>{F0.pow(3) + (F1 * F2 * F3) * cn(bval)};
    };
    auto model1 = inst_model(2);
    std::optional<El> g3;
    for (long s1 : {1, -1})
      for (long s2 : {1, -1})
        for (long t1 : {1, -1})
          for (long t2 : {1, -1}) {
            if (g3) continue;
            // inner signs must differ across the rows for invertibility
            M A = M::from_rows({{i * cn(s1), i * cn(s1 * s2)}, {cn(1), cn(-s2)}});
            M B = M::from_rows({{i * cn(t1), i * cn(t1 * t2)}, {cn(1), cn(-t2)}});
            if (A.det().is_zero() || B.det().is_zero()) continue;
            try {
              auto cand = El::bimoebius(A, B, false);
              if (projective_order(cand).order != 3) continue;
              invariance(model1, cand);
              invariance(inst_model(5), cand);
              g3 = cand;
            } catch (const Error&) {
            }
          }
    require(g3.has_value(), Err::Inconsistency, "octahedral period-3 search failed");
    {
      ParamGenerator g;
      g.kind = "bimoebius";
      const auto& p = g3->bimoebius_payload();
      std::vector<std::vector<CycNum>> ra, rb;
      for (size_t r = 0; r < 2; ++r) {
        ra.push_back({p.a.at(r, 0), p.a.at(r, 1)});
        rb.push_back({p.b.at(r, 0), p.b.at(r, 1)});
      }
      g.a = pmat(ra, 1);
      g.b = pmat(rb, 1);
      g.swap = false;
      g.label = "period-3 rotation";
      en.generators.push_back(std::move(g));
    }
    // swap element: search over the non-swap group's matrices
    auto kg1 = El::bimoebius(M::from_rows(SG), M::from_rows(SG), false);
    auto kg2 = El::bimoebius(M::from_rows(RHO), M::from_rows(RHO), false);
    auto tet = closure<CycNum>({kg1, kg2, *g3});
    require(tet.order() == 12, Err::Inconsistency, "tetrahedral subgroup wrong order");
    std::optional<El> sw;
    // candidate first-ruling matrices: tetrahedral elements twisted by i
    std::vector<M> candidates;
    for (const auto& e : tet.elems) {
      candidates.push_back(e.bimoebius_payload().a);
      M twisted = e.bimoebius_payload().a * M::from_rows({{cn(1), cz()}, {cz(), i}});
      candidates.push_back(twisted);
    }
    for (const auto& A : candidates) {
      if (sw) break;
      for (const auto& B : candidates) {
        try {
          auto cand = El::bimoebius(A, B, true);
          invariance(model1, cand);
          invariance(inst_model(5), cand);
          sw = cand;
          break;
        } catch (const Error&) {
        }
      }
    }
    require(sw.has_value(), Err::Inconsistency, "octahedral swap search failed");
    {
      ParamGenerator g;
      g.kind = "bimoebius";
      const auto& p = sw->bimoebius_payload();
      std::vector<std::vector<CycNum>> ra, rb;
      for (size_t r = 0; r < 2; ++r) {
        ra.push_back({p.a.at(r, 0), p.a.at(r, 1)});
        rb.push_back({p.b.at(r, 0), p.b.at(r, 1)});
      }
      g.a = pmat(ra, 1);
      g.b = pmat(rb, 1);
      g.swap = true;
      g.label = "ruling exchange";
      en.generators.push_back(std::move(g));
    }
    en.expected = expect(24, "octahedral", 1);
    en.expected.histogram = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    cat.entries.push_back(std::move(en));
  }

  // 11) dihedral of order 12 preserving the rulings
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a");
    auto form = x1.pow(3) * y1 * (y1 * y1 + a * y2 * y2) +
                x2.pow(3) * y2 * (a * y1 * y1 + y2 * y2);
    CatalogEntry en;
    en.id = "p4q-11";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: dihedral of order 12 fixing both rulings";
    en.params = R.params;
    en.default_moduli.emplace("a", cn(2));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> D6{{-j, cz()}, {cz(), cn(1)}};
    std::vector<std::vector<CycNum>> DS{{cn(-1), cz()}, {cz(), cn(1)}};
    en.generators.push_back(gen_bimoebius(D6, DS, false, 1, "period-6 rotation"));
    en.generators.push_back(gen_bimoebius(SG, SG, false, 1, "swap involution"));
    en.expected = expect(12, "dihedral", 1);
    en.expected.notes =
        "summary tables of this classification print the family as a dihedral of order 6; "
        "the closure of the stated operations is the dihedral of order 12 expected here, and "
        "the order-6 reading is recorded as a discrepancy, not a failure.";
    cat.entries.push_back(std::move(en));
  }

  // 12) dihedral of order 10 (five-term family)
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a");
    auto form = x1.pow(3) * y1.pow(2) * y2 + x1.pow(2) * x2 * y2.pow(3) +
                x1 * x2.pow(2) * y1.pow(3) + a.pow(5) * x2.pow(3) * y1 * y2.pow(2);
    CatalogEntry en;
    en.id = "p4q-12";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: dihedral of order 10";
    en.params = R.params;
    en.default_moduli.emplace("a", cn(2));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> D5A{{eps, cz()}, {cz(), eps.pow(4)}};
    std::vector<std::vector<CycNum>> D5B{{eps * eps, cz()}, {cz(), eps.pow(3)}};
    en.generators.push_back(
        with_data(gen_bimoebius(D5A, D5B, false, 1, "diagonal period 5"), 4, 0));
    {
      // involution with parameter-dependent entries: A = [[0, a^3 e^4],[e, 0]],
      // B = [[0, a e^3],[e^2, 0]] after projective clearing of 1/a
      ParamGenerator g;
      g.kind = "bimoebius";
      g.a = {{pc_lit(cz(), 1), pc_mono(eps.pow(4), 1, 0, 3)},
             {pc_lit(eps, 1), pc_lit(cz(), 1)}};
      g.b = {{pc_lit(cz(), 1), pc_mono(eps.pow(3), 1, 0, 1)},
             {pc_lit(eps * eps, 1), pc_lit(cz(), 1)}};
      g.swap = false;
      g.label = "pairing involution";
      en.generators.push_back(std::move(g));
    }
    std::vector<std::vector<CycNum>> SA{{eps * eps, cz()}, {cz(), eps.pow(3)}};
    std::vector<std::vector<CycNum>> SB{{cz(), -eps.pow(4)}, {eps, cz()}};
    en.witnesses.push_back(gen_bimoebius(SA, SB, true, 1, "period-4 exchange"));
    en.expected = expect(10, "dihedral", 1);
    cat.entries.push_back(std::move(en));
  }

  // 13) group of order 36
  {
    Ring R({"x1", "x2", "y1", "y2"}, {"a"});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto a = R.var("a");
    auto form = x1.pow(3) * y1.pow(3) + x1.pow(3) * y2.pow(3) + x2.pow(3) * y1.pow(3) +
                a.pow(3) * x2.pow(3) * y2.pow(3);
    CatalogEntry en;
    en.id = "p4q-13";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: group of order 36";
    en.params = R.params;
    en.default_moduli.emplace("a", cn(2));
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> DJ{{j, cz()}, {cz(), cn(1)}};
    en.generators.push_back(gen_bimoebius(DJ, I2, false, 1, "period-3 first ruling"));
    en.generators.push_back(gen_bimoebius(I2, DJ, false, 1, "period-3 second ruling"));
    {
      ParamGenerator g;
      g.kind = "bimoebius";
      g.a = {{pc_lit(cz(), 1), pc_mono(cn(1), 1, 0, 1)}, {pc_lit(cn(1), 1), pc_lit(cz(), 1)}};
      g.b = g.a;
      g.swap = false;
      g.label = "generator twist";
      en.generators.push_back(std::move(g));
    }
    en.generators.push_back(gen_bimoebius(I2, I2, true, 1, "ruling swap"));
    std::vector<std::vector<CycNum>> DS{{cn(1), cz()}, {cz(), cn(-1)}};
    en.witnesses.push_back(gen_bimoebius(SG, DS, false, 1, "order-72 boundary"));
    en.expected = expect(36, "other", 1);
    en.expected.histogram = {{1, 1}, {2, 15}, {3, 8}, {6, 12}};
    cat.entries.push_back(std::move(en));
  }

  // 14) group of order 72
  {
    Ring R({"x1", "x2", "y1", "y2"}, {});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto form = x1.pow(3) * y1.pow(3) + x1.pow(3) * y2.pow(3) + x2.pow(3) * y1.pow(3) -
                x2.pow(3) * y2.pow(3);
    CatalogEntry en;
    en.id = "p4q-14";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: group of order 72";
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> DJ{{j, cz()}, {cz(), cn(1)}};
    std::vector<std::vector<CycNum>> TW{{cz(), cn(-1)}, {cn(1), cz()}};
    std::vector<std::vector<CycNum>> DS{{cn(1), cz()}, {cz(), cn(-1)}};
    en.generators.push_back(gen_bimoebius(DJ, I2, false, 0, "period-3 first ruling"));
    en.generators.push_back(gen_bimoebius(I2, DJ, false, 0, "period-3 second ruling"));
    en.generators.push_back(gen_bimoebius(TW, TW, false, 0, "generator twist"));
    en.generators.push_back(gen_bimoebius(I2, I2, true, 0, "ruling swap"));
    en.generators.push_back(gen_bimoebius(SG, DS, false, 0, "extending involution"));
    en.expected = expect(72, "other", 0);
    en.expected.histogram = {{1, 1}, {2, 21}, {3, 8}, {4, 18}, {6, 24}};
    cat.entries.push_back(std::move(en));
  }

  // 15) group of order 120 on the quadric
  {
    Ring R({"x1", "x2", "y1", "y2"}, {});
    auto x1 = R.var("x1"), x2 = R.var("x2"), y1 = R.var("y1"), y2 = R.var("y2");
    auto form = x1.pow(3) * y1.pow(2) * y2 + x1.pow(2) * x2 * y2.pow(3) +
                x1 * x2.pow(2) * y1.pow(3) - x2.pow(3) * y1 * y2.pow(2);
    CatalogEntry en;
    en.id = "p4q-15-bring";
    en.genus = 4;
    en.ref = "genus 4 on the quadric: the curve with 120 collineations";
    en.model.kind = "biform33";
    en.model.form = R.form(form);
    std::vector<std::vector<CycNum>> D5A{{eps, cz()}, {cz(), eps.pow(4)}};
    std::vector<std::vector<CycNum>> D5B{{eps * eps, cz()}, {cz(), eps.pow(3)}};
    std::vector<std::vector<CycNum>> SB{{cz(), -eps.pow(4)}, {eps, cz()}};
    en.generators.push_back(
        with_data(gen_bimoebius(D5A, D5B, false, 0, "diagonal period 5"), 4, 0));
    en.generators.push_back(gen_bimoebius(D5A /*unused*/, SB, true, 0, "period-4 exchange"));
    en.generators.back().a = pmat(D5B, 0);  // A factor is diag(e^2, e^3)
    // the icosahedral involution pair, found by exact search on the second
    // ruling's icosahedral group
    auto p = eps - eps.pow(4), q = eps * eps - eps.pow(3);
    M TX = M::from_rows({{-p, q}, {q, p}});
    auto vt = VarTable::make({"x1", "x2", "y1", "y2"});
    auto X1 = P::variable(vt, 0, cz()), X2 = P::variable(vt, 1, cz()),
         Y1 = P::variable(vt, 2, cz()), Y2 = P::variable(vt, 3, cz());
    BiForm33Model<CycNum> model{X1.pow(3) * Y1.pow(2) * Y2 + X1.pow(2) * X2 * Y2.pow(3) +
                                X1 * X2.pow(2) * Y1.pow(3) - X2.pow(3) * Y1 * Y2.pow(2)};
    auto iy = closure<CycNum>(
        {El::proj(M::from_rows({{eps * eps, cz()}, {cz(), eps.pow(3)}})), El::proj(TX)});
    auto partner = find_partner(model, TX, iy, false);
    require(partner.has_value(), Err::Inconsistency, "icosahedral partner search failed");
    std::vector<std::vector<CycNum>> TXr{{TX.at(0, 0), TX.at(0, 1)}, {TX.at(1, 0), TX.at(1, 1)}};
    std::vector<std::vector<CycNum>> TYr{{partner->at(0, 0), partner->at(0, 1)},
                                         {partner->at(1, 0), partner->at(1, 1)}};
    en.generators.push_back(gen_bimoebius(TXr, TYr, false, 0, "icosahedral involution pair"));
    en.expected = expect(120, "other", 0);
    en.expected.histogram = {{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}};
    cat.entries.push_back(std::move(en));
  }
}

// ---------------------------------------------------------------------------

static void add_bring_pentahedral(Catalog& cat) {
  Ring R({"z1", "z2", "z3", "z4"}, {});
  auto z1 = R.var("z1"), z2 = R.var("z2"), z3 = R.var("z3"), z4 = R.var("z4");
  auto z5 = -(z1 + z2 + z3 + z4);
  CatalogEntry en;
  en.id = "bring-pentahedral";
  en.genus = 4;
  en.ref = "genus 4 in pentahedral coordinates: quadric and cubic symmetric sums";
  en.model.kind = "space_qc";
  en.model.form = R.form(z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4 + z5 * z5);
  en.model.form2 = R.form(z1.pow(3) + z2.pow(3) + z3.pow(3) + z4.pow(3) + z5.pow(3));
  auto one = cn(1), zero = cz(), neg = cn(-1);
  std::vector<std::vector<CycNum>> t12{{zero, one, zero, zero},
                                       {one, zero, zero, zero},
                                       {zero, zero, one, zero},
                                       {zero, zero, zero, one}};
  std::vector<std::vector<CycNum>> ax{{zero, one, zero, zero},
                                      {one, zero, zero, zero},
                                      {zero, zero, zero, one},
                                      {zero, zero, one, zero}};
  std::vector<std::vector<CycNum>> c5{{zero, one, zero, zero},
                                      {zero, zero, one, zero},
                                      {zero, zero, zero, one},
                                      {neg, neg, neg, neg}};
  en.generators.push_back(with_data(gen_proj(t12, 0, "perspective involution"), 6, 1));
  en.generators.push_back(with_data(gen_proj(ax, 0, "axis involution"), 2, 2));
  en.generators.push_back(with_data(gen_proj(c5, 0, "five-cycle"), 4, 0));
  // the five coordinate planes as invariant blocks
  auto pt = [&](long a, long b, long c, long d) {
    return std::vector<CycNum>{cn(a), cn(b), cn(c), cn(d)};
  };
  en.model.blocks = {
      {pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1)},
      {pt(1, 0, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1)},
      {pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 0, 1)},
      {pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0)},
      {pt(1, -1, 0, 0), pt(0, 1, -1, 0), pt(0, 0, 1, -1)},
  };
  en.expected = expect(120, "other", 0);
  en.expected.histogram = {{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}};
  en.expected.block_image_order = 120;
  en.expected.block_kernel_order = 1;
  cat.entries.push_back(std::move(en));
}

// ---------------------------------------------------------------------------

static void add_p4c(Catalog& cat) {
  auto i = rt(4, 1);
  auto j = rt(3, 1);
  auto eps = rt(5, 1);
  std::vector<std::vector<CycNum>> SG{{cz(), cn(1)}, {cn(1), cz()}};

  struct ConeSpec {
    std::string id;
    std::string ref;
    std::vector<std::string> params;
    std::vector<long> defaults;
    std::function<std::pair<P, P>(const Ring&)> forms;  // (f4, f6)
    std::vector<ParamGenerator> gens;
    std::vector<ParamGenerator> witnesses;
    ExpectedData exp;
  };

  auto add = [&](ConeSpec s) {
    Ring R({"x", "y"}, s.params);
    auto [f4, f6] = s.forms(R);
    CatalogEntry en;
    en.id = s.id;
    en.genus = 4;
    en.ref = s.ref;
    en.params = s.params;
    for (size_t t = 0; t < s.params.size(); ++t)
      en.default_moduli.emplace(s.params[t], cn(s.defaults[t]));
    en.model.kind = "trigonal";
    en.model.form4 = R.form(f4);
    en.model.form2 = R.form(f6);
    en.generators = std::move(s.gens);
    en.witnesses = std::move(s.witnesses);
    en.expected = std::move(s.exp);
    cat.entries.push_back(std::move(en));
  };

  auto D = [&](CycNum a, CycNum b) {
    return std::vector<std::vector<CycNum>>{{a, cz()}, {cz(), b}};
  };

  // 1
  add({"p4c-01",
       "cone case 1: perspective involution",
       {"a", "b", "c", "d", "e", "f", "g"},
       {2, 3, 5, 7, 1, 4, 2},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * x.pow(4) + R.var("b") * x.pow(2) * y.pow(2) +
                   R.var("c") * y.pow(4);
         auto f6 = R.var("d") * x.pow(6) + R.var("e") * x.pow(4) * y.pow(2) +
                   R.var("f") * x.pow(2) * y.pow(4) + R.var("g") * y.pow(6);
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(cn(-1), cn(1)), cn(1), 7, "perspective involution")},
       {},
       expect(2, "cyclic", 4)});
  // 2
  add({"p4c-02",
       "cone case 2: involution with axes",
       {"a", "b", "c", "d", "e", "f"},
       {2, 3, 5, 7, 1, 4},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * x.pow(4) + R.var("b") * x.pow(2) * y.pow(2) +
                   R.var("c") * y.pow(4);
         auto f6 = x * y *
                   (R.var("d") * x.pow(4) + R.var("e") * x.pow(2) * y.pow(2) +
                    R.var("f") * y.pow(4));
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(cn(1), cn(-1)), cn(-1), 6, "axis involution")},
       {},
       expect(2, "cyclic", 4)});
  // 3
  add({"p4c-03",
       "cone case 3: Klein four-group, mixed types",
       {"a", "b", "c", "d"},
       {2, 3, 5, 7},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * (x.pow(4) + y.pow(4)) + R.var("b") * x.pow(2) * y.pow(2);
         auto f6 =
             x * y * (R.var("c") * (x.pow(4) + y.pow(4)) + R.var("d") * x.pow(2) * y.pow(2));
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(SG, cn(1), 4, "coordinate swap"),
        gen_trigonal(D(cn(-1), cn(1)), cn(-1), 4, "sign flip")},
       {},
       expect(4, "klein4", 2)});
  // 4
  add({"p4c-04",
       "cone case 4: Klein four-group of axis type",
       {"a", "b"},
       {2, 3},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * (x.pow(4) + y.pow(4)) + R.var("b") * x.pow(2) * y.pow(2);
         auto f6 = x * y * (x.pow(4) - y.pow(4));
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(SG, cn(-1), 2, "swap with sheet flip"),
        gen_trigonal(D(cn(1), cn(-1)), cn(-1), 2, "axis involution")},
       {},
       expect(4, "klein4", 2)});
  // 5
  add({"p4c-05",
       "cone case 5: dihedral of order 8",
       {"a"},
       {2},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * x.pow(2) * y.pow(2);
         auto f6 = x * y * (x.pow(4) + y.pow(4));
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(cn(1), i), -i, 1, "period-4 rotation"),
        gen_trigonal(SG, cn(1), 1, "coordinate swap")},
       {},
       expect(8, "dihedral", 1)});
  // 6
  add({"p4c-06",
       "cone case 6: cyclic of order 4",
       {"a", "b", "c"},
       {2, 3, 5},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = x.pow(4) + R.var("a") * y.pow(4);
         auto f6 = y.pow(2) * (R.var("b") * x.pow(4) + R.var("c") * y.pow(4));
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(i, cn(1)), cn(1), 3, "period-4 rotation")},
       {},
       expect(4, "cyclic", 3)});
  // 7
  add({"p4c-07",
       "cone case 7: dihedral of order 6",
       {"a", "b"},
       {2, 3},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * x.pow(2) * y.pow(2);
         auto f6 = x.pow(6) + R.var("b") * x.pow(3) * y.pow(3) + y.pow(6);
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(cn(1), j), j, 2, "period-3 rotation"),
        gen_trigonal(SG, cn(1), 2, "coordinate swap")},
       {},
       expect(6, "dihedral", 2)});
  // 8
  add({"p4c-08",
       "cone case 8: dihedral of order 12",
       {"a"},
       {2},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * x.pow(2) * y.pow(2);
         auto f6 = x.pow(6) + y.pow(6);
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(cn(-1), j), j, 1, "period-6 rotation"),
        gen_trigonal(SG, cn(1), 1, "coordinate swap")},
       {},
       expect(12, "dihedral", 1)});
  // 9
  add({"p4c-09",
       "cone case 9: period 3 fixing a generator pointwise",
       {"a", "b", "c", "d"},
       {2, 3, 5, 7},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * x.pow(3) * y + R.var("b") * y.pow(4);
         auto f6 = x.pow(6) + R.var("c") * x.pow(3) * y.pow(3) + R.var("d") * y.pow(6);
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(j, cn(1)), cn(1), 4, "period-3 rotation")},
       {},
       expect(3, "cyclic", 2)});
  // 10 (tetrahedral): fiber multiplier fixed by the relation c = k / l
  {
    Ring R({"x", "y"}, {"a"});
    auto x = R.var("x"), y = R.var("y");
    auto f4p = R.var("a") * (x.pow(3) * y + y.pow(4));
    auto f6p = x.pow(6) + R.c(20) * x.pow(3) * y.pow(3) - R.c(8) * y.pow(6);
    // determine the fiber scalar for the edge rotation [[-1, 2], [1, 1]]
    BinaryForm<CycNum> f6c({cn(-8), cz(), cz(), cn(20), cz(), cz(), cn(1)}, cz());
    BinaryForm<CycNum> f4c({cn(1), cz(), cz(), cn(1), cz()}, cz());  // x^3 y + y^4
    M A = M::from_rows({{cn(-1), cn(2)}, {cn(1), cn(1)}});
    auto l = bf_proportionality(f4c, bf_substitute(f4c, A));
    auto k = bf_proportionality(f6c, bf_substitute(f6c, A));
    require(l && k, Err::Inconsistency, "tetrahedral multipliers not scalar");
    CycNum c = *k / *l;
    require(c * c == *l && c * c * c == *k, Err::Inconsistency, "tetrahedral scalar relation");
    CatalogEntry en;
    en.id = "p4c-10";
    en.genus = 4;
    en.ref = "cone case 10: tetrahedral group";
    en.params = {"a"};
    en.default_moduli.emplace("a", cn(2));
    en.model.kind = "trigonal";
    en.model.form4 = R.form(f4p);
    en.model.form2 = R.form(f6p);
    en.generators.push_back(gen_trigonal(D(j, cn(1)), cn(1), 1, "period-3 rotation"));
    en.generators.push_back(gen_trigonal({{cn(-1), cn(2)}, {cn(1), cn(1)}}, c, 1,
                                         "edge rotation"));
    en.expected = expect(12, "tetrahedral", 1);
    en.expected.histogram = {{1, 1}, {2, 3}, {3, 8}};
    cat.entries.push_back(std::move(en));
  }
  // 11
  add({"p4c-11",
       "cone case 11: cyclic of order 6",
       {"a", "b"},
       {2, 3},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * y.pow(4);
         auto f6 = x.pow(6) + R.var("b") * y.pow(6);
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(-j, cn(1)), cn(1), 2, "period-6 rotation")},
       {},
       expect(6, "cyclic", 2)});
  // 12
  add({"p4c-12",
       "cone case 12: cyclic of order 12",
       {},
       {},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         return std::make_pair(y.pow(4), x.pow(6));
       },
       {gen_trigonal(D(-j, i), cn(1), 0, "period-12 rotation")},
       {},
       expect(12, "cyclic", 0)});
  // 13
  add({"p4c-13",
       "cone case 13: cyclic of order 5",
       {"a", "b"},
       {2, 3},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f4 = R.var("a") * y.pow(4);
         auto f6 = x.pow(5) * y + R.var("b") * y.pow(6);
         return std::make_pair(f4, f6);
       },
       {gen_trigonal(D(eps, cn(1)), cn(1), 2, "period-5 rotation")},
       {},
       expect(5, "cyclic", 2)});
  // 14
  add({"p4c-14",
       "cone case 14: cyclic of order 10",
       {},
       {},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         return std::make_pair(y.pow(4), x.pow(5) * y);
       },
       {gen_trigonal(D(eps, cn(-1)), cn(-1), 0, "period-10 rotation")},
       {},
       expect(10, "cyclic", 0)});
  // 15
  add({"p4c-15",
       "cone case 15: perspective period 3 alone",
       {"a", "b", "c", "d", "e"},
       {2, 3, 5, 7, 1},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f6 = x.pow(6) + R.var("a") * x.pow(5) * y + R.var("b") * x.pow(4) * y.pow(2) +
                   R.var("c") * x.pow(3) * y.pow(3) + R.var("d") * x.pow(2) * y.pow(4) +
                   R.var("e") * x * y.pow(5) + y.pow(6);
         return std::make_pair(P::zero(R.vt, cz()), f6);
       },
       {with_data(gen_trigonal(D(cn(1), cn(1)), j, 5, "fiber rotation"), 6, 0)},
       {},
       expect(3, "cyclic", 3)});
  // 16
  add({"p4c-16",
       "cone case 16: cyclic of order 6 on the triple cover",
       {"a", "b"},
       {2, 3},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f6 = x.pow(6) + R.var("a") * x.pow(4) * y.pow(2) +
                   R.var("b") * x.pow(2) * y.pow(4) + y.pow(6);
         return std::make_pair(P::zero(R.vt, cz()), f6);
       },
       {gen_trigonal(D(cn(-1), cn(1)), j, 2, "signed fiber rotation")},
       {gen_trigonal(SG, cn(1), 2, "coordinate swap")},
       expect(6, "cyclic", 2)});
  // 17
  add({"p4c-17",
       "cone case 17: order 12 on the triple cover",
       {"a"},
       {2},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f6 = x * y * (x.pow(4) + R.var("a") * x.pow(2) * y.pow(2) + y.pow(4));
         return std::make_pair(P::zero(R.vt, cz()), f6);
       },
       {gen_trigonal(D(cn(-1), cn(1)), -j, 1, "signed fiber rotation"),
        gen_trigonal(SG, cn(1), 1, "coordinate swap")},
       {},
       expect(12, "other", 1)});
  // 18
  add({"p4c-18",
       "cone case 18: order 18 on the triple cover",
       {"a"},
       {2},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         auto f6 = x.pow(6) + R.var("a") * x.pow(3) * y.pow(3) + y.pow(6);
         return std::make_pair(P::zero(R.vt, cz()), f6);
       },
       {gen_trigonal(D(j, cn(1)), cn(1), 1, "period-3 rotation"),
        gen_trigonal(SG, cn(1), 1, "coordinate swap"),
        gen_trigonal(D(cn(1), cn(1)), j, 1, "fiber rotation")},
       {},
       expect(18, "other", 1)});
  // 19
  add({"p4c-19",
       "cone case 19: cyclic of order 15",
       {},
       {},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         return std::make_pair(P::zero(R.vt, cz()), x.pow(5) * y + y.pow(6));
       },
       {gen_trigonal(D(eps, cn(1)), j, 0, "period-15 rotation")},
       {},
       expect(15, "cyclic", 0)});
  // 20
  add({"p4c-20",
       "cone case 20: order 36 on the triple cover",
       {},
       {},
       [&](const Ring& R) {
         auto x = R.var("x"), y = R.var("y");
         return std::make_pair(P::zero(R.vt, cz()), x.pow(6) + y.pow(6));
       },
       {gen_trigonal(D(rt(6, 1), cn(1)), cn(1), 0, "period-6 rotation"),
        gen_trigonal(SG, cn(1), 0, "coordinate swap"),
        gen_trigonal(D(cn(1), cn(1)), j, 0, "fiber rotation")},
       {},
       expect(36, "other", 0)});
  // 21: order 72; the octahedral period-3 element is found by search
  {
    Ring R({"x", "y"}, {});
    auto x = R.var("x"), y = R.var("y");
    auto f6p = x.pow(5) * y + x * y.pow(5);
    BinaryForm<CycNum> f6c({cz(), cn(1), cz(), cz(), cz(), cn(1), cz()}, cz());
    std::optional<El> g3;
    auto z8 = rt(8, 1);
    std::vector<CycNum> pool{cn(0), cn(1), cn(-1), i, -i, z8, -z8, z8.pow(3), -z8.pow(3)};
    for (const auto& a : pool)
      for (const auto& b : pool)
        for (const auto& c : pool)
          for (const auto& d : pool) {
            if (g3) continue;
            M A = M::from_rows({{a, b}, {c, d}});
            if (A.det().is_zero()) continue;
            try {
              auto cand = El::proj(A);
              if (projective_order(cand).order != 3) continue;
              auto img = bf_substitute(f6c, cand.proj_payload().m);
              auto lam = bf_proportionality(f6c, img);
              if (!lam) continue;
              // fiber scalar: c^3 = k
              for (const auto& croot : kth_roots(cn(1), 3)) {
                CycNum c3 = croot * croot * croot;
                (void)c3;
              }
              g3 = cand;
            } catch (const Error&) {
            }
          }
    require(g3.has_value(), Err::Inconsistency, "octahedral period-3 search failed (cone)");
    const M& A3 = g3->proj_payload().m;
    auto img = bf_substitute(f6c, A3);
    auto k = bf_proportionality(f6c, img);
    // fiber scalar with c^3 = k: search small rational multiples of the
    // session roots of unity
    std::optional<CycNum> cval;
    for (long mn : {1L, 2L, 3L, 4L, 8L}) {
      for (long md : {1L, 2L, 3L, 4L, 8L}) {
        for (const auto& r : session_roots(cn(1))) {
          CycNum c = r * cq(mn, md);
          if (c * c * c == *k) {
            cval = c;
            break;
          }
        }
        if (cval) break;
      }
      if (cval) break;
    }
    require(cval.has_value(), Err::Inconsistency, "no cube root for the octahedral scalar");
    CatalogEntry en;
    en.id = "p4c-21";
    en.genus = 4;
    en.ref = "cone case 21: order 72 on the triple cover";
    en.model.kind = "trigonal";
    en.model.form4 = R.form(P::zero(R.vt, cz()));
    en.model.form2 = R.form(f6p);
    en.generators.push_back(gen_trigonal(D(cn(1), i), -i * j, 0, "period-12 rotation"));
    en.generators.push_back(gen_trigonal(SG, cn(1), 0, "coordinate swap"));
    en.generators.push_back(gen_trigonal(
        {{A3.at(0, 0), A3.at(0, 1)}, {A3.at(1, 0), A3.at(1, 1)}}, *cval, 0, "vertex rotation"));
    en.expected = expect(72, "other", 0);
    cat.entries.push_back(std::move(en));
  }
}

// ---------------------------------------------------------------------------

static void add_p5(Catalog& cat) {
  auto i = rt(4, 1);
  auto j = rt(3, 1);
  auto eps = rt(5, 1);
  auto z8 = rt(8, 1);
  auto half = cq(1, 2);

  auto flip = [&](int k) {
    std::vector<std::vector<CycNum>> m(5, std::vector<CycNum>(5, cz()));
    for (int t = 0; t < 5; ++t) m[t][t] = (t == k) ? cn(-1) : cn(1);
    return m;
  };
  auto flip2 = [&](int k, int l) {
    std::vector<std::vector<CycNum>> m(5, std::vector<CycNum>(5, cz()));
    for (int t = 0; t < 5; ++t) m[t][t] = (t == k || t == l) ? cn(-1) : cn(1);
    return m;
  };

  // order 192
  {
    CatalogEntry en;
    en.id = "p5-192";
    en.genus = 5;
    en.ref = "genus 5 net: group of order 192";
    en.model.kind = "quadric_net";
    std::vector<std::vector<CycNum>> a1(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a2(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a3(5, std::vector<CycNum>(5, cz()));
    a1[0][0] = cn(1);
    a1[3][3] = cn(1);
    a1[4][4] = cn(1);
    a2[1][1] = cn(1);
    a2[3][3] = cn(1);
    a2[4][4] = cn(-1);
    a3[2][2] = cn(1);
    a3[3][4] = half;
    a3[4][3] = half;
    en.model.mats[0] = pmat(a1, 0);
    en.model.mats[1] = pmat(a2, 0);
    en.model.mats[2] = pmat(a3, 0);
    en.generators.push_back(with_data(gen_proj(flip(0), 0, "sign change, first kind"), 8, 1));
    en.generators.push_back(gen_proj(flip(1), 0, "sign change"));
    en.generators.push_back(gen_proj(flip(2), 0, "sign change"));
    en.generators.push_back(gen_proj(flip2(3, 4), 0, "paired sign change"));
    en.generators.push_back(
        with_data(gen_proj(flip2(0, 1), 0, "sign change, second kind"), 0, 3));
    std::vector<std::vector<CycNum>> gr(5, std::vector<CycNum>(5, cz()));
    gr[0][1] = z8;
    gr[1][0] = z8;
    gr[2][2] = cn(1);
    gr[3][3] = z8;
    gr[4][4] = z8.pow(7);
    en.generators.push_back(gen_proj(gr, 0, "octahedral rotation"));
    std::vector<std::vector<CycNum>> gs(5, std::vector<CycNum>(5, cz()));
    gs[0][0] = cn(1);
    gs[1][1] = i;
    gs[2][2] = cn(1);
    gs[3][4] = cn(1);
    gs[4][3] = cn(1);
    en.generators.push_back(gen_proj(gs, 0, "octahedral reflection pair"));
    auto sq2 = z8 + z8.pow(7);  // sqrt(2)
    std::vector<std::vector<CycNum>> gt(5, std::vector<CycNum>(5, cz()));
    gt[0][0] = cn(1);
    gt[1][2] = sq2;
    gt[2][1] = cn(1) / sq2;
    gt[3][3] = cn(1) / sq2;
    gt[3][4] = cn(1) / sq2;
    gt[4][3] = cn(1) / sq2;
    gt[4][4] = cn(-1) / sq2;
    en.generators.push_back(gen_proj(gt, 0, "octahedral edge rotation"));
    en.expected = expect(192, "other");
    en.expected.split_case = 6;
    en.expected.root_form_systems = 9;
    en.model.polar_triangle = true;
    en.model.delta5_factors = {
        lambda_line(cn(1), cz(), cz()), lambda_line(cz(), cn(1), cz()),
        lambda_line(cz(), cz(), cn(1)),
        lambda_form({{{2, 0, 0}, cn(1)}, {{0, 2, 0}, cn(-1)}, {{0, 0, 2}, cq(-1, 4)}})};
    cat.entries.push_back(std::move(en));
  }

  // order 64
  {
    CatalogEntry en;
    en.id = "p5-64";
    en.genus = 5;
    en.ref = "genus 5 net: group of order 64";
    en.model.kind = "quadric_net";
    std::vector<std::vector<CycNum>> a1(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a2(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a3(5, std::vector<CycNum>(5, cz()));
    for (int t = 0; t < 5; ++t) a1[t][t] = cn(1);
    std::vector<CycNum> d2{cn(1), i, cn(-1), -i, cz()};
    std::vector<CycNum> d3{cn(1), cn(-1), cn(1), cn(-1), cz()};
    for (int t = 0; t < 5; ++t) a2[t][t] = d2[t];
    for (int t = 0; t < 5; ++t) a3[t][t] = d3[t];
    en.model.mats[0] = pmat(a1, 0);
    en.model.mats[1] = pmat(a2, 0);
    en.model.mats[2] = pmat(a3, 0);
    en.generators.push_back(with_data(gen_proj(flip(0), 0, "sign change, first kind"), 8, 1));
    en.generators.push_back(gen_proj(flip(1), 0, "sign change"));
    en.generators.push_back(gen_proj(flip(2), 0, "sign change"));
    en.generators.push_back(gen_proj(flip(3), 0, "sign change"));
    en.generators.push_back(
        with_data(gen_proj(flip2(0, 1), 0, "sign change, second kind"), 0, 3));
    std::vector<std::vector<CycNum>> cyc(5, std::vector<CycNum>(5, cz()));
    cyc[0][1] = cn(1);
    cyc[1][2] = cn(1);
    cyc[2][3] = cn(1);
    cyc[3][0] = cn(1);
    cyc[4][4] = cn(1);
    en.generators.push_back(gen_proj(cyc, 0, "four-cycle"));
    en.expected = expect(64, "other");
    en.expected.split_case = 7;
    en.expected.root_form_systems = 10;
    en.model.delta5_factors = {lambda_line(cn(1), cn(1), cn(1)),
                               lambda_line(cn(1), i, cn(-1)),
                               lambda_line(cn(1), cn(-1), cn(1)),
                               lambda_line(cn(1), -i, cn(-1)),
                               lambda_line(cn(1), cz(), cz())};
    cat.entries.push_back(std::move(en));
  }

  // order 96
  {
    CatalogEntry en;
    en.id = "p5-96";
    en.genus = 5;
    en.ref = "genus 5 net: group of order 96";
    en.model.kind = "quadric_net";
    std::vector<std::vector<CycNum>> a1(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a2(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a3(5, std::vector<CycNum>(5, cz()));
    a1[0][0] = cn(1);
    a1[3][3] = cn(1);
    a1[4][4] = cn(1);
    a2[1][1] = cn(1);
    a2[3][3] = j;
    a2[4][4] = j * j;
    a3[2][2] = cn(1);
    a3[3][3] = j * j;
    a3[4][4] = j;
    en.model.mats[0] = pmat(a1, 0);
    en.model.mats[1] = pmat(a2, 0);
    en.model.mats[2] = pmat(a3, 0);
    en.generators.push_back(with_data(gen_proj(flip(0), 0, "sign change, first kind"), 8, 1));
    en.generators.push_back(gen_proj(flip(1), 0, "sign change"));
    en.generators.push_back(gen_proj(flip(2), 0, "sign change"));
    en.generators.push_back(gen_proj(flip(3), 0, "sign change"));
    en.generators.push_back(
        with_data(gen_proj(flip2(0, 1), 0, "sign change, second kind"), 0, 3));
    std::vector<std::vector<CycNum>> g3(5, std::vector<CycNum>(5, cz()));
    g3[0][1] = cn(1);
    g3[1][2] = cn(1);
    g3[2][0] = cn(1);
    g3[3][3] = j * j;
    g3[4][4] = j;
    en.generators.push_back(gen_proj(g3, 0, "three-cycle with scaling"));
    std::vector<std::vector<CycNum>> g23(5, std::vector<CycNum>(5, cz()));
    g23[0][0] = cn(1);
    g23[1][2] = cn(1);
    g23[2][1] = cn(1);
    g23[3][4] = cn(1);
    g23[4][3] = cn(1);
    en.generators.push_back(gen_proj(g23, 0, "double transposition"));
    en.expected = expect(96, "other");
    en.expected.split_case = 7;
    en.expected.root_form_systems = 10;
    en.model.delta5_factors = {lambda_line(cn(1), cz(), cz()), lambda_line(cz(), cn(1), cz()),
                               lambda_line(cz(), cz(), cn(1)), lambda_line(cn(1), j, j * j),
                               lambda_line(cn(1), j * j, j)};
    cat.entries.push_back(std::move(en));
  }

  // order 160
  {
    CatalogEntry en;
    en.id = "p5-160";
    en.genus = 5;
    en.ref = "genus 5 net: group of order 160";
    en.model.kind = "quadric_net";
    std::vector<std::vector<CycNum>> a1(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a2(5, std::vector<CycNum>(5, cz()));
    std::vector<std::vector<CycNum>> a3(5, std::vector<CycNum>(5, cz()));
    for (int t = 0; t < 5; ++t) {
      a1[t][t] = cn(1);
      a2[t][t] = eps.pow(t);
      a3[t][t] = eps.pow((5 - t) % 5);
    }
    en.model.mats[0] = pmat(a1, 0);
    en.model.mats[1] = pmat(a2, 0);
    en.model.mats[2] = pmat(a3, 0);
    en.generators.push_back(with_data(gen_proj(flip(0), 0, "sign change, first kind"), 8, 1));
    en.generators.push_back(gen_proj(flip(1), 0, "sign change"));
    en.generators.push_back(gen_proj(flip(2), 0, "sign change"));
    en.generators.push_back(gen_proj(flip(3), 0, "sign change"));
    en.generators.push_back(
        with_data(gen_proj(flip2(0, 1), 0, "sign change, second kind"), 0, 3));
    std::vector<std::vector<CycNum>> c5(5, std::vector<CycNum>(5, cz()));
    c5[0][1] = cn(1);
    c5[1][2] = cn(1);
    c5[2][3] = cn(1);
    c5[3][4] = cn(1);
    c5[4][0] = cn(1);
    en.generators.push_back(gen_proj(c5, 0, "five-cycle"));
    std::vector<std::vector<CycNum>> rev(5, std::vector<CycNum>(5, cz()));
    rev[0][4] = cn(1);
    rev[1][3] = cn(1);
    rev[2][2] = cn(1);
    rev[3][1] = cn(1);
    rev[4][0] = cn(1);
    en.generators.push_back(gen_proj(rev, 0, "reversal"));
    en.expected = expect(160, "other");
    en.expected.split_case = 7;
    en.expected.root_form_systems = 10;
    en.model.delta5_factors = {lambda_line(cn(1), cn(1), cn(1)),
                               lambda_line(cn(1), eps, eps.pow(4)),
                               lambda_line(cn(1), eps.pow(2), eps.pow(3)),
                               lambda_line(cn(1), eps.pow(3), eps.pow(2)),
                               lambda_line(cn(1), eps.pow(4), eps)};
    cat.entries.push_back(std::move(en));
  }
}

// ---------------------------------------------------------------------------

static void add_p6_and_hyper(Catalog& cat) {
  auto eps = rt(5, 1);
  auto z5 = rt(5, 1);

  // genus 6, type with a plane quintic model
  {
    Ring R({"x", "y", "z"}, {});
    auto x = R.var("x"), y = R.var("y"), z = R.var("z");
    CatalogEntry en;
    en.id = "p6-quintic";
    en.genus = 6;
    en.ref = "genus 6 with a plane quintic model: diagonal and permutation collineations";
    en.model.kind = "plane_nodal";
    en.model.form = R.form(x.pow(5) + y.pow(5) + z.pow(5));
    en.generators.push_back(with_data(
        gen_proj({{z5, cz(), cz()}, {cz(), cn(1), cz()}, {cz(), cz(), cn(1)}}, 0,
                 "diagonal period 5"),
        5, 0));
    en.generators.push_back(gen_proj(
        {{cn(1), cz(), cz()}, {cz(), z5, cz()}, {cz(), cz(), cn(1)}}, 0, "diagonal period 5"));
    en.generators.push_back(gen_proj(
        {{cz(), cn(1), cz()}, {cz(), cz(), cn(1)}, {cn(1), cz(), cz()}}, 0, "coordinate cycle"));
    en.generators.push_back(gen_proj(
        {{cz(), cn(1), cz()}, {cn(1), cz(), cz()}, {cz(), cz(), cn(1)}}, 0, "transposition"));
    en.expected = expect(150, "other");
    cat.entries.push_back(std::move(en));
  }

  // genus 6, trigonal type: plane sextic with a triple and a double point
  {
    Ring R({"x", "y", "z"}, {});
    auto x = R.var("x"), y = R.var("y"), z = R.var("z");
    auto form = z.pow(3) * (x.pow(3) + y.pow(3)) + x.pow(2) * (x.pow(4) + y.pow(4));
    CatalogEntry en;
    en.id = "p6-trigonal";
    en.genus = 6;
    en.ref = "genus 6 with a degree-3 pencil: sextic with a triple and a double point";
    en.model.kind = "plane_nodal";
    en.model.form = R.form(form);
    en.model.marked = {{{cz(), cz(), cn(1)}, 3}, {{cz(), cn(1), cz()}, 2}};
    en.generators.push_back(gen_proj(
        {{cn(1), cz(), cz()}, {cz(), cn(1), cz()}, {cz(), cz(), rt(3, 1)}}, 0,
        "fiber rotation of the pencil"));
    en.expected = expect(3, "cyclic");
    en.expected.notes =
        "the degree-3 pencil through the triple point has 16 doubly-coincident groups "
        "(degree-3 cover of the line from genus 6), matching the stated cover formula.";
    cat.entries.push_back(std::move(en));
  }

  // genus 6, general type: nodal sextic with the full symmetric action
  {
    Ring R({"x", "y", "z"}, {});
    auto x = R.var("x"), y = R.var("y"), z = R.var("z");
    auto form = (x.pow(4) * y * z + y.pow(4) * x * z + z.pow(4) * x * y) * cn(2) +
                (y.pow(3) * z.pow(3) + x.pow(3) * z.pow(3) + x.pow(3) * y.pow(3)) * cn(2) -
                (x.pow(4) * y.pow(2) + x.pow(4) * z.pow(2) + y.pow(4) * x.pow(2) +
                 y.pow(4) * z.pow(2) + z.pow(4) * x.pow(2) + z.pow(4) * y.pow(2)) *
                    cn(2) +
                (x.pow(3) * y.pow(2) * z + x.pow(3) * z.pow(2) * y + y.pow(3) * x.pow(2) * z +
                 y.pow(3) * z.pow(2) * x + z.pow(3) * x.pow(2) * y + z.pow(3) * y.pow(2) * x) -
                x.pow(2) * y.pow(2) * z.pow(2) * cn(6);
    CatalogEntry en;
    en.id = "p6-sextic-s5";
    en.genus = 6;
    en.ref = "genus 6, general type: nodal sextic whose five pencils carry the full symmetric group";
    en.model.kind = "plane_nodal";
    en.model.form = R.form(form);
    en.model.marked = {{{cn(1), cz(), cz()}, 2},
                       {{cz(), cn(1), cz()}, 2},
                       {{cz(), cz(), cn(1)}, 2},
                       {{cn(1), cn(1), cn(1)}, 2}};
    en.generators.push_back(gen_proj(
        {{cz(), cn(1), cz()}, {cz(), cz(), cn(1)}, {cn(1), cz(), cz()}}, 0, "coordinate cycle"));
    en.generators.push_back(gen_proj(
        {{cz(), cn(1), cz()}, {cn(1), cz(), cz()}, {cz(), cz(), cn(1)}}, 0, "transposition"));
    en.generators.push_back(gen_proj(
        {{cn(1), cz(), cz()}, {cn(1), cn(-1), cz()}, {cn(1), cz(), cn(-1)}}, 0, "node exchange"));
    {
      ParamGenerator g;
      g.kind = "cremona_quad";
      g.quad_base = {0, 1, 2};
      g.label = "quadratic transform at three nodes";
      en.generators.push_back(std::move(g));
    }
    en.expected = expect(120, "other");
    en.expected.pencil_order = 120;
    en.expected.notes = "all 120 permutations of the five special pencils are realized.";
    cat.entries.push_back(std::move(en));
  }

  // the order-120 hyperelliptic curve of genus 5
  {
    Ring R({"x", "y"}, {});
    auto x = R.var("x"), y = R.var("y");
    auto form = x.pow(11) * y + x.pow(6) * y.pow(6) * cn(11) - x * y.pow(11);
    CatalogEntry en;
    en.id = "hyp-p5-footnote";
    en.genus = 5;
    en.ref = "hyperelliptic genus 5: branch form with the icosahedral symmetry";
    en.model.kind = "hyper_branch";
    en.model.form = R.form(form);
    en.generators.push_back(gen_proj({{eps, cz()}, {cz(), cn(1)}}, 0, "period-5 rotation"));
    en.generators.push_back(gen_proj({{cz(), cn(-1)}, {cn(1), cz()}}, 0, "point swap"));
    auto p = eps - eps.pow(4), q = eps * eps - eps.pow(3);
    en.generators.push_back(gen_proj({{-p, q}, {q, p}}, 0, "icosahedral involution"));
    en.expected = expect(60, "icosahedral");
    en.expected.full_order = 120;
    en.expected.notes =
        "the sheet involution is adjoined centrally; the icosahedral lift is normal of index 2.";
    cat.entries.push_back(std::move(en));
  }
}

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: catalog_gen <output.json>\n";
    return 2;
  }
  try {
    Catalog cat;
    cat.field_index = 120;
    cat.field = F;
    add_p4q(cat);
    add_bring_pentahedral(cat);
    add_p4c(cat);
    add_p5(cat);
    add_p6_and_hyper(cat);

    std::cout << "built " << cat.entries.size() << " entries; verifying...\n";
    VerifyOptions opt;
    opt.seed = 1;
    opt.run_probes = false;
    opt.jobs = 4;
    auto rep = verify_catalog(cat, opt);
    std::cout << report_to_text(rep);
    if (rep.failed) {
      std::cerr << "catalog verification failed; not writing output\n";
      return 1;
    }

    // round-trip check before freezing
    auto text = save_catalog(cat);
    auto reparsed = load_catalog(text);
    require(reparsed.entries.size() == cat.entries.size(), Err::Inconsistency,
            "round trip lost entries");
    auto text2 = save_catalog(reparsed);
    require(text == text2, Err::Inconsistency, "serialization not stable");

    std::ofstream out(argv[1]);
    out << text;
    std::cout << "wrote " << argv[1] << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "catalog_gen failed: " << e.what() << "\n";
    return 1;
  }
}
