#ifndef CURVEAUT_REPORT_HPP
#define CURVEAUT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "curveaut/catalog.hpp"

namespace curveaut {

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | skip
  std::string details;
};

struct EntryReport {
  std::string id;
  std::vector<CheckResult> checks;
  bool failed = false;
  double wall_ms = 0.0;
};

struct VerifyOptions {
  uint64_t seed = 1;
  bool run_probes = false;  // finite-field cross-checks (slower)
  int jobs = 1;
  long closure_cap = 2048;
};

struct FullReport {
  std::vector<EntryReport> entries;
  bool failed = false;
  uint64_t seed = 1;
};

EntryReport verify_entry(const Catalog& cat, const CatalogEntry& entry,
                         const VerifyOptions& opt);
FullReport verify_catalog(const Catalog& cat, const VerifyOptions& opt,
                          const std::string& filter = "");

// JSON is the stable machine interface: no wall-clock fields, so identical
// inputs and seed give byte-identical output.
std::string report_to_json(const FullReport& rep);
std::string report_to_text(const FullReport& rep);

// order-120 realization of the hyperelliptic automorphism group: symmetric
// square of the Moebius action extended by the central sheet involution
Group<CycNum> hyperelliptic_double_cover_group(const Group<CycNum>& moebius);
Group<CycNum> hyperelliptic_reduced_lift(const Group<CycNum>& moebius);

}  // namespace curveaut

#endif
