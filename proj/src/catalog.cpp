#include "meander/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "meander/arrangement.hpp"
#include "meander/errors.hpp"

namespace meander {

using nlohmann::json;

std::filesystem::path default_catalog_path() {
  if (const char* p = std::getenv("MEANDER_CATALOG"); p && *p) return p;
  return std::filesystem::path(MEANDER_DATA_DIR) / "catalog.json";
}

Catalog load_catalog() { return load_catalog(default_catalog_path()); }

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path.string());
  Catalog cat;
  try {
    json j = json::parse(in);
    for (const auto& r : j.at("entries")) {
      CatalogEntry e;
      if (!r.at("name").is_null()) e.name = r.at("name").get<std::string>();
      e.conway = r.at("conway").get<std::string>();
      e.dt_text = r.at("dt").get<std::string>();
      e.short_text = r.at("short_gauss").get<std::string>();
      e.kind = r.at("kind").get<std::string>();
      e.table = r.at("table").get<std::string>();
      e.meander_number = r.value("meander_number", 0);
      e.verified = r.at("verified").get<bool>();
      e.note = r.value("note", "");
      e.source_line = r.value("source_line", 0);
      if (e.kind != "knot" && e.kind != "link") throw CatalogError("bad kind " + e.kind);
      cat.entries.push_back(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw CatalogError(std::string("corrupt catalog: ") + ex.what());
  }
  return cat;
}

GaussCode full_code_from_short(const std::vector<int>& c, bool link) {
  std::vector<int> axis(c.size());
  for (int v : c) {
    int a = std::abs(v);
    if (a < 1 || a > static_cast<int>(c.size())) throw MalformedInput("short code labels must be 1..n");
    axis[a - 1] = v > 0 ? -a : a;
  }
  GaussCode g;
  if (link) {
    g.components = {axis, c};
  } else {
    axis.insert(axis.end(), c.begin(), c.end());
    g.components = {axis};
  }
  validate_gauss_code(g);
  return g;
}

std::optional<Diagram> entry_diagram_from_dt(const CatalogEntry& e) {
  try {
    DTCode dt = parse_dt_code(e.dt_text);
    validate_dt_code(dt);
    return from_dt_code(dt);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<Diagram> entry_diagram_from_short(const CatalogEntry& e) {
  try {
    return realize_gauss_code(full_code_from_short(parse_int_sequence(e.short_text), e.kind == "link"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

EntryCheck check_entry(const CatalogEntry& e) {
  EntryCheck r;
  auto a = entry_diagram_from_dt(e);
  auto b = entry_diagram_from_short(e);
  if (!a) r.problem = "dt code does not parse or realize";
  if (!b) r.problem += std::string(r.problem.empty() ? "" : "; ") + "short code does not parse or realize";
  if (a) r.fp = fingerprint(*a);
  else if (b) r.fp = fingerprint(*b);
  if (!a || !b) return r;
  int want = e.kind == "link" ? 2 : 1;
  if (a->component_count() != want || b->component_count() != want) {
    r.problem = "component count differs from the table kind";
    return r;
  }
  if (a->crossing_count() != b->crossing_count()) {
    r.problem = "dt and short codes have different crossing counts";
    return r;
  }
  if (!(fingerprint(*b) == *r.fp)) {
    r.problem = "dt and short codes give different fingerprints";
    return r;
  }
  r.ok = true;
  return r;
}

int name_crossing_number(const std::string& name) {
  size_t i = 0;
  if (!name.empty() && (name[0] == 'K' || name[0] == 'L')) i = 1;
  int v = 0;
  bool any = false;
  for (; i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])); ++i) {
    v = v * 10 + (name[i] - '0');
    any = true;
  }
  return any ? v : -1;
}

NameIndex::NameIndex(const Catalog& c) {
  for (const auto& e : c.entries) {
    if (!e.name) continue;
    std::optional<Diagram> d;
    if (e.verified) {
      d = entry_diagram_from_dt(e);
    } else if (e.note.find("repeats") == std::string::npos && e.note.find("no knot") == std::string::npos) {
      // a row with one unreadable code is still named by the other
      auto a = entry_diagram_from_dt(e), b = entry_diagram_from_short(e);
      if (a.has_value() != b.has_value()) d = a ? a : b;
    }
    if (!d) continue;
    items_.emplace_back(fingerprint(*d), *e.name);
  }
  std::sort(items_.begin(), items_.end(), [](const auto& x, const auto& y) {
    if (x.first < y.first) return true;
    if (y.first < x.first) return false;
    return x.second < y.second;
  });
  items_.erase(std::unique(items_.begin(), items_.end(),
                           [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; }),
               items_.end());
}

std::vector<std::string> NameIndex::names(const Fingerprint& f) const {
  auto lo = std::lower_bound(items_.begin(), items_.end(), f,
                             [](const auto& it, const Fingerprint& v) { return it.first < v; });
  std::vector<std::string> out;
  for (; lo != items_.end() && lo->first == f; ++lo) out.push_back(lo->second);
  return out;
}

std::optional<std::string> NameIndex::lookup(const Fingerprint& f, int max_crossings) const {
  auto v = names(f);
  if (max_crossings >= 0)
    std::erase_if(v, [&](const std::string& s) { return name_crossing_number(s) > max_crossings; });
  if (v.empty()) return std::nullopt;
  std::string s = v[0];
  for (size_t i = 1; i < v.size(); ++i) s += "|" + v[i];
  return s;
}

std::optional<Fingerprint> NameIndex::fingerprint_of(const std::string& name) const {
  for (const auto& [f, n] : items_)
    if (n == name) return f;
  return std::nullopt;
}

const NameIndex& default_name_index() {
  static const NameIndex idx(load_catalog());
  return idx;
}

std::optional<std::string> lookup_name(const Diagram& d) {
  auto f = fingerprint(d);
  Diagram r = remove_nugatory(d);
  auto names = default_name_index().names(f);
  std::erase_if(names, [&](const std::string& s) { return name_crossing_number(s) > r.crossing_count(); });
  if (names.empty()) return std::nullopt;
  if (names.size() > 1) {
    // mutants share every polynomial; reduced alternating diagrams are told apart by flypes
    auto flags = analyze(r);
    if (flags.alternating && flags.prime) {
      FlypeClasses fc;
      int mine = fc.classify(map_of(r));
      std::vector<std::string> hit;
      for (const auto& s : names) {
        auto other = named_diagram(s);
        if (!other || other->crossing_count() != r.crossing_count() || !analyze(*other).alternating) continue;
        if (fc.classify(map_of(*other)) == mine) hit.push_back(s);
      }
      if (hit.size() == 1) return hit[0];
    }
  }
  std::string s = names[0];
  for (size_t i = 1; i < names.size(); ++i) s += "|" + names[i];
  return s;
}

std::vector<CatalogExample> load_examples() {
  std::ifstream in(default_catalog_path());
  if (!in) throw CatalogError("cannot open catalog " + default_catalog_path().string());
  std::vector<CatalogExample> out;
  try {
    json j = json::parse(in);
    for (const auto& r : j.at("examples")) {
      CatalogExample e;
      if (!r.at("name").is_null()) e.name = r.at("name").get<std::string>();
      e.what = r.at("what").get<std::string>();
      if (r.contains("gauss")) e.code = parse_gauss_code(r.at("gauss").get<std::string>());
      else if (r.contains("short_gauss"))
        e.code = full_code_from_short(parse_int_sequence(r.at("short_gauss").get<std::string>()), false);
      out.push_back(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw CatalogError(std::string("corrupt catalog: ") + ex.what());
  }
  return out;
}

GaussCode example_code(const std::string& what, const std::string& name) {
  static const std::vector<CatalogExample> ex = load_examples();
  for (const auto& e : ex)
    if (e.what == what && e.code && (name.empty() || e.name == name)) return *e.code;
  throw CatalogError("no printed example: " + what + (name.empty() ? "" : " " + name));
}

std::vector<ReferenceEntry> load_reference() {
  std::vector<ReferenceEntry> out;
  auto dir = default_catalog_path().parent_path();
  auto read = [&](const char* file) {
    std::ifstream in(dir / file);
    if (!in) throw CatalogError(std::string("cannot open ") + file);
    try {
      return json::parse(in);
    } catch (const json::exception& e) {
      throw CatalogError(std::string(file) + ": " + e.what());
    }
  };
  json knots = read("reference_knots.json");
  for (const auto& r : knots.at("knots")) {
    ReferenceEntry e;
    e.name = r.at("name").get<std::string>();
    e.crossings = r.at("crossings").get<int>();
    e.alternating = r.at("alternating").get<bool>();
    e.code = r.at("dt").get<std::string>();
    out.push_back(std::move(e));
  }
  json links = read("reference_links.json");
  for (const auto& r : links.at("links")) {
    ReferenceEntry e;
    e.name = r.at("name").get<std::string>();
    e.alias = r.value("rolfsen", "");
    e.crossings = r.at("crossings").get<int>();
    e.alternating = r.at("alternating").get<bool>();
    e.link = true;
    e.code = r.at("gauss").get<std::string>();
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Diagram> reference_diagram(const std::string& name) {
  static const std::vector<ReferenceEntry> ref = load_reference();
  for (const auto& e : ref) {
    if (e.name != name && (e.alias.empty() || e.alias != name)) continue;
    if (e.code.empty()) return std::nullopt;  // unknot
    if (e.link) return realize_gauss_code(parse_gauss_code(e.code));
    return from_dt_code(parse_dt_code(e.code));
  }
  return std::nullopt;
}

std::optional<Diagram> named_diagram(const std::string& name) {
  if (auto d = reference_diagram(name)) return d;
  static const Catalog cat = load_catalog();
  for (const auto& e : cat.entries) {
    if (!e.name || *e.name != name || !e.verified) continue;
    if (auto d = entry_diagram_from_dt(e)) return d;
  }
  if (name == "0_1" || name == "unknot") return realize_gauss_code(parse_gauss_code("{1, -1}"));
  return std::nullopt;
}

std::optional<Fingerprint> resolve_fingerprint(const std::string& name) {
  if (auto f = default_name_index().fingerprint_of(name)) return f;
  if (auto d = named_diagram(name)) return fingerprint(*d);
  return std::nullopt;
}

}  // namespace meander
