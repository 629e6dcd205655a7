#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "meander/codes.hpp"
#include "meander/diagram.hpp"
#include "meander/invariants.hpp"

namespace meander {

struct CatalogEntry {
  std::optional<std::string> name;
  std::string conway;
  std::string dt_text;     // as printed
  std::string short_text;  // as printed
  std::string kind;        // "knot" or "link"
  std::string table;
  int meander_number = 0;  // 0 when the table has no such column
  bool verified = false;
  std::string note;
  int source_line = 0;
};

// Outcome of re-checking a row: both codes parse and realize, with equal fingerprints.
struct EntryCheck {
  bool ok = false;
  std::string problem;
  std::optional<Fingerprint> fp;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

// MEANDER_CATALOG overrides the fixture path.
std::filesystem::path default_catalog_path();
Catalog load_catalog();
Catalog load_catalog(const std::filesystem::path& path);  // throws CatalogError

// Full code of a short code: the axis visits 1..n with the opposite signs.
GaussCode full_code_from_short(const std::vector<int>& short_code, bool link);
std::optional<Diagram> entry_diagram_from_dt(const CatalogEntry& e);
std::optional<Diagram> entry_diagram_from_short(const CatalogEntry& e);
EntryCheck check_entry(const CatalogEntry& e);

// Fingerprint index over verified named entries.
class NameIndex {
 public:
  explicit NameIndex(const Catalog& c);
  // Several names when the fingerprint does not separate them.
  std::vector<std::string> names(const Fingerprint& f) const;
  // Names joined by '|' when ambiguous; names whose crossing number exceeds
  // max_crossings are dropped.
  std::optional<std::string> lookup(const Fingerprint& f, int max_crossings = -1) const;
  std::optional<Fingerprint> fingerprint_of(const std::string& name) const;

 private:
  std::vector<std::pair<Fingerprint, std::string>> items_;  // sorted by fingerprint
};

// Worked examples printed alongside the tables.
struct CatalogExample {
  std::optional<std::string> name;
  std::string what;
  std::optional<GaussCode> code;  // a short code is completed axis-first
};
std::vector<CatalogExample> load_examples();
// Example code by its description (and name when given); throws CatalogError.
GaussCode example_code(const std::string& what, const std::string& name = "");

// Crossing number encoded in a table name ("9_7" -> 9, "K11a94" -> 11, "L10a114" -> 10).
int name_crossing_number(const std::string& name);
std::optional<std::string> lookup_name(const Diagram& d);
const NameIndex& default_name_index();

// KnotInfo/LinkInfo reference tables shipped next to the catalog.
struct ReferenceEntry {
  std::string name;
  std::string alias;  // Rolfsen-style link name, may be empty
  int crossings = 0;
  bool alternating = false;
  bool link = false;
  std::string code;  // DT code for knots, Gauss code for links
};
std::vector<ReferenceEntry> load_reference();
std::optional<Diagram> reference_diagram(const std::string& name);
// Reference tables (minimal diagrams) first, then catalog rows.
std::optional<Diagram> named_diagram(const std::string& name);
std::optional<Fingerprint> resolve_fingerprint(const std::string& name);

}  // namespace meander
