#pragma once

// Classification data for potentials of degree a+b+c with their expected
// invariants, and a runner that recomputes and compares them.

#include "wpoisson/complexes.hpp"
#include "wpoisson/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wpoisson::catalog {

enum class OmegaType { i, q, bw, nw, r };
enum class Tri { yes, no, unknown };

std::string to_string(OmegaType t);
std::string to_string(Tri t);

/// An exact value, an upper bound ("<=-1") or a set of values ("1|2").
class IntExpectation {
 public:
  static IntExpectation parse(const std::string& text);
  bool matches(int v) const;
  std::string to_string() const;
  std::optional<int> exact() const { return values_.size() == 1 && !bound_ ? std::optional<int>(values_[0]) : std::nullopt; }

 private:
  std::vector<int> values_;
  std::optional<int> bound_;
};

struct CatalogEntry {
  std::string id;
  std::string table;  // "111", "112", "a=b<c", "a<b=c", "123", "a<b<c"
  Weights weights{1, 1, 1};
  std::string omega_text;
  Poly omega{Weights(1, 1, 1)};
  OmegaType type = OmegaType::r;
  bool irreducible = false;
  IntExpectation rgt;
  IntExpectation gk;
  Tri vacant = Tri::unknown;
  Tri sealed = Tri::unknown;
  bool isolated = false;
  std::vector<std::string> conditions;  // side conditions on the weights
  std::vector<std::string> flags;       // e.g. "asterisk"
  std::string notes;                    // the raw notes column
};

/// Path of the bundled catalog, overridable through WPOISSON_CATALOG.
std::string default_catalog_path();

/// Parses and validates a catalog file; throws on malformed records,
/// violated side conditions or potentials of the wrong degree.
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> parse_catalog(const std::string& text);

/// Does the weight triple satisfy a named side condition?  Throws on an
/// unknown condition.
bool condition_holds(const std::string& cond, const Weights& w);

/// Filters: "table:<name>", "type:<label>", "weights:a,b,c", "id:<id>",
/// "irreducible:yes|no".  All filters must match.  Throws on unknown kinds.
std::vector<CatalogEntry> entries(const std::vector<CatalogEntry>& all,
                                  const std::vector<std::string>& filters);

enum class Status { pass, fail, info };
std::string to_string(Status s);

struct ReportItem {
  std::string check;
  Status status;
  std::string expected;
  std::string computed;
};

struct EntryReport {
  std::string id;
  std::string omega;
  std::string weights;
  int max_degree = 0;
  std::vector<ReportItem> items;
  bool failed() const;
};

struct AggregateReport {
  std::vector<EntryReport> entries;
  std::size_t passed = 0, failed = 0, infos = 0;
  bool ok() const { return failed == 0; }
};

/// Recomputes every invariant of an entry up to degree D (default 3n+12).
EntryReport verify_entry(const CatalogEntry& e, std::optional<int> max_degree = std::nullopt,
                         complexes::Execution ex = complexes::Execution::parallel);
AggregateReport verify_all(const std::vector<CatalogEntry>& es, std::optional<int> max_degree = std::nullopt,
                           complexes::Execution ex = complexes::Execution::parallel);

/// Does ph_dims agree with all four closed forms on [-(a+b+c), D]?
bool ph_matches_closed_forms(const complexes::DimsTable& t, const Weights& w);

}  // namespace wpoisson::catalog
