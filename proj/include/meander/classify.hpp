#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meander/codes.hpp"
#include "meander/diagram.hpp"
#include "meander/invariants.hpp"

namespace meander {

enum class CensusKind { knot, link, multi };
std::string kind_name(CensusKind k);
CensusKind parse_kind(const std::string& s);  // "knot", "link", "multi"

struct CensusMember {
  Fingerprint fp;
  Diagram representative;  // smallest DT code in the class
  DTCode dt;
  std::vector<int> short_code;  // curve part of the code; empty for multi
  std::optional<std::string> name;
  int diagrams = 0;  // closures falling in this class
};

// One fingerprint shared by several flype classes, i.e. distinct types.
struct Collision {
  Fingerprint fp;
  std::vector<DTCode> dts;  // one representative per type
};

struct CensusRow {
  int n = 0;
  CensusKind kind = CensusKind::knot;
  int c = 1;
  int type_count = 0;         // flype classes of reduced alternating diagrams
  int fingerprint_count = 0;  // distinct fingerprints among them
  std::vector<CensusMember> members;  // sorted by DT code
  std::vector<Collision> collisions;
};

// Alternating closures of all open meanders of order n, reduced and prime.
CensusRow census_meander_knots(int n, int jobs = 1);
CensusRow census_meander_links(int n, int jobs = 1);
// Alternating drawings of c simple closed curves (c >= 3), every pair of curves
// forming a two-component meander link.
CensusRow census_multicomponent(int n, int c, int jobs = 1);

// "n,kind,c,count" lines under a header.
std::string export_census_csv(const std::vector<CensusRow>& rows);
std::vector<CensusRow> import_census_csv(const std::string& text);  // counts only
std::string export_census_json(const std::vector<CensusRow>& rows);
std::vector<CensusRow> import_census_json(const std::string& text);

}  // namespace meander
