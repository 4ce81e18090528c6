#ifndef CURVEAUT_CATALOG_HPP
#define CURVEAUT_CATALOG_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curveaut/cremona.hpp"
#include "curveaut/cyclotomic.hpp"
#include "curveaut/models.hpp"

namespace curveaut {

// Coefficients in catalog data are sums of cyclotomic literals times
// monomials in the entry's free parameters.
struct ParamCoef {
  // exponent vector aligned with the entry's parameter list -> literal
  std::map<std::vector<int>, CycNum> terms;

  static ParamCoef literal(const CycNum& c, size_t nparams) {
    ParamCoef p;
    if (!c.is_zero()) p.terms.emplace(std::vector<int>(nparams, 0), c);
    return p;
  }
  bool is_literal() const {
    for (const auto& [e, c] : terms)
      for (int x : e)
        if (x) return false;
    return true;
  }
  CycNum eval(const std::vector<CycNum>& values, const CycField* field) const {
    CycNum acc = CycNum::zero(field);
    for (const auto& [e, c] : terms) {
      CycNum t = c;
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t = t * values[i];
      acc = acc + t;
    }
    return acc;
  }
};

struct ParamForm {
  std::vector<std::string> vars;
  std::map<Exps, ParamCoef> monomials;
};

using ParamMatrix = std::vector<std::vector<ParamCoef>>;

struct ParamGenerator {
  std::string kind;  // projmap | bimoebius | trigonal | cremona_quad
  ParamMatrix a, b;  // projmap uses a; bimoebius a+b; trigonal a + c
  ParamCoef c;
  bool swap = false;
  std::array<int, 3> quad_base{0, 1, 2};
  std::string label;
  std::optional<long> fixed_points;
  std::optional<long> quotient_genus;
};

struct ExpectedData {
  long order = 1;
  std::string type = "other";
  std::map<long, long> histogram;  // empty when unspecified
  std::optional<long> full_order;
  std::optional<long> moduli_count;
  std::optional<int> split_case;
  std::optional<long> root_form_systems;
  std::optional<long> block_image_order;
  std::optional<long> block_kernel_order;
  std::optional<long> pencil_order;
  std::string notes;
};

struct ParamModel {
  std::string kind;  // biform33 | trigonal | quadric_net | space_qc | plane_nodal | hyper_branch
  ParamForm form;                      // biform33 / space_qc(q) / plane_nodal / hyper_branch
  ParamForm form2;                     // trigonal f6 / space_qc cubic
  ParamForm form4;                     // trigonal f4
  std::array<ParamMatrix, 3> mats;     // quadric_net
  std::vector<std::pair<std::vector<CycNum>, long>> marked;  // plane_nodal
  std::vector<std::vector<std::vector<CycNum>>> blocks;      // space_qc invariant planes
  std::vector<ParamForm> delta5_factors;                     // quadric_net
  bool polar_triangle = false;
};

struct CatalogEntry {
  std::string id;
  long genus = 4;
  std::string ref;
  std::vector<std::string> params;
  std::map<std::string, CycNum> default_moduli;
  ParamModel model;
  std::vector<ParamGenerator> generators;
  std::vector<ParamGenerator> witnesses;
  ExpectedData expected;
};

struct Catalog {
  long field_index = 120;
  const CycField* field = nullptr;
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

// Instantiated view of an entry: concrete model and transformations.
struct InstancedGenerator {
  std::optional<Element<CycNum>> element;       // absent for cremona steps
  std::optional<std::array<int, 3>> quad_base;  // present for cremona steps
  std::string label;
  std::optional<long> fixed_points;
  std::optional<long> quotient_genus;
};

struct InstancedEntry {
  const CatalogEntry* src = nullptr;
  std::map<std::string, CycNum> moduli;
  Model<CycNum> model;
  std::vector<InstancedGenerator> generators;
  std::vector<InstancedGenerator> witnesses;
};

Catalog load_catalog(const std::string& json_text);
Catalog load_catalog_file(const std::string& path);
std::string save_catalog(const Catalog& cat);

// Substitute a full assignment of the entry's parameters.
InstancedEntry instantiate_with(const Catalog& cat, const CatalogEntry& entry,
                                const std::map<std::string, CycNum>& values);

// Seeded random small-rational assignment, retried until the instance is
// non-degenerate: the model passes its exact smoothness check where one
// exists, every generator is invariant, and every witness fails invariance.
InstancedEntry instantiate_moduli(const Catalog& cat, const CatalogEntry& entry, uint64_t seed,
                                  int max_retries = 32);

std::string default_catalog_path();

}  // namespace curveaut

#endif
