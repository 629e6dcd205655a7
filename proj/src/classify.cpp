#include "meander/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "meander/arrangement.hpp"
#include "meander/catalog.hpp"
#include "meander/errors.hpp"
#include "meander/meander.hpp"

namespace meander {

using nlohmann::json;

std::string kind_name(CensusKind k) {
  switch (k) {
    case CensusKind::knot: return "knot";
    case CensusKind::link: return "link";
    case CensusKind::multi: return "multi";
  }
  return "";
}

CensusKind parse_kind(const std::string& s) {
  if (s == "knot" || s == "knots") return CensusKind::knot;
  if (s == "link" || s == "links") return CensusKind::link;
  if (s == "multi") return CensusKind::multi;
  throw MalformedInput("unknown census kind: " + s);
}

namespace {

struct Entry {
  Fingerprint fp;
  Diagram d;
  DTCode dt;
  std::vector<int> short_code;
};

struct Group {
  Entry best;
  int count = 0;
};

// Types are flype classes; reduced alternating diagrams of one link are flype related.
class Collector {
 public:
  void add(Entry e) {
    PlanarMap m = map_of(e.d);
    std::lock_guard lock(mu_);
    int id = classes_.classify(m);
    auto [it, fresh] = groups_.try_emplace(id);
    Group& g = it->second;
    ++g.count;
    if (fresh || e.dt < g.best.dt) g.best = std::move(e);
  }

  CensusRow finish(int n, CensusKind kind, int c) {
    CensusRow row;
    row.n = n, row.kind = kind, row.c = c;
    std::map<std::string, std::vector<const Group*>> by_fp;
    for (auto& [id, g] : groups_) {
      CensusMember m;
      m.fp = g.best.fp;
      m.representative = g.best.d;
      m.dt = g.best.dt;
      m.short_code = g.best.short_code;
      m.name = lookup_name(m.representative);
      m.diagrams = g.count;
      row.members.push_back(std::move(m));
      by_fp[g.best.fp.key()].push_back(&g);
    }
    for (auto& [k, v] : by_fp) {
      if (v.size() < 2) continue;
      Collision col;
      col.fp = v[0]->best.fp;
      for (const Group* g : v) col.dts.push_back(g->best.dt);
      std::sort(col.dts.begin(), col.dts.end());
      row.collisions.push_back(std::move(col));
    }
    std::sort(row.members.begin(), row.members.end(),
              [](const CensusMember& a, const CensusMember& b) { return a.dt < b.dt; });
    std::sort(row.collisions.begin(), row.collisions.end(),
              [](const Collision& a, const Collision& b) { return a.dts < b.dts; });
    row.type_count = static_cast<int>(row.members.size());
    row.fingerprint_count = static_cast<int>(by_fp.size());
    return row;
  }

 private:
  std::mutex mu_;
  FlypeClasses classes_;
  std::map<int, Group> groups_;
};

template <class Work>
void run_sharded(int jobs, Work&& work) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back([&, t] { work(t, jobs); });
  for (auto& th : pool) th.join();
}

Entry make_entry(Diagram d, std::vector<int> short_code) {
  Entry e{fingerprint(d), std::move(d), {}, std::move(short_code)};
  e.dt = to_dt_code(e.d);
  return e;
}

CensusRow meander_census(int n, CensusKind kind, int jobs) {
  Collector col;
  run_sharded(jobs, [&](int shard, int shards) {
    std::uint64_t i = 0;
    for_each_open_meander(n, [&](const OpenMeander& m) {
      if (i++ % shards != static_cast<std::uint64_t>(shard)) return true;
      Diagram d = close_open_meander(m);
      auto a = analyze(d);
      // the one-crossing unknot stands in for n = 1
      if (n > 1 && !(a.reduced && a.prime)) return true;
      if (kind == CensusKind::link && !a.components_simple) return true;
      std::vector<int> short_code;
      const auto& g = d.gauss();
      if (g.components.size() == 1) short_code.assign(g.components[0].begin() + n, g.components[0].end());
      else short_code = g.components[1];
      col.add(make_entry(std::move(d), std::move(short_code)));
      return true;
    });
  });
  return col.finish(n, kind, kind == CensusKind::knot ? 1 : 2);
}

}  // namespace

CensusRow census_meander_knots(int n, int jobs) {
  if (n < 1 || n % 2 == 0) throw DomainError("meander knots need an odd order");
  return meander_census(n, CensusKind::knot, jobs);
}

CensusRow census_meander_links(int n, int jobs) {
  if (n < 2 || n % 2) throw DomainError("meander links need an even order");
  return meander_census(n, CensusKind::link, jobs);
}

CensusRow census_multicomponent(int n, int c, int jobs) {
  if (c < 3) throw DomainError("multi-component census needs at least three components");
  if (n % 2) throw DomainError("multi-component meander links have an even number of crossings");
  // two-component meander link types by crossing count
  std::set<std::string> pairs;
  for (int m = 2; m <= n - 2 * (c - 2); m += 2)
    for (const auto& mem : census_meander_links(m, jobs).members) pairs.insert(mem.fp.key());
  auto maps = curve_arrangements(n, c);
  Collector col;
  run_sharded(jobs, [&](int shard, int shards) {
    for (size_t i = shard; i < maps.size(); i += shards) {
      Diagram d = alternating_diagram(maps[i]);
      auto a = analyze(d);
      if (!(a.reduced && a.prime)) continue;
      bool ok = true;
      for (int x = 0; x < c && ok; ++x)
        for (int y = x + 1; y < c && ok; ++y) {
          std::vector<int> comps{x, y};
          Diagram s = sublink(d, comps);
          // disjoint pairs, split pairs and non-meander pairs all fail here
          ok = s.crossing_count() > 0 && pairs.count(fingerprint(s).key());
        }
      if (ok) col.add(make_entry(std::move(d), {}));
    }
  });
  return col.finish(n, CensusKind::multi, c);
}

std::string export_census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,kind,c,count\n";
  for (const auto& r : rows) out << r.n << ',' << kind_name(r.kind) << ',' << r.c << ',' << r.type_count << '\n';
  return out.str();
}

std::vector<CensusRow> import_census_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<CensusRow> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line != "n,kind,c,count") throw MalformedInput("census csv: bad header");
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    if (f.size() != 4) throw MalformedInput("census csv: bad row: " + line);
    CensusRow r;
    try {
      r.n = std::stoi(f[0]);
      r.kind = parse_kind(f[1]);
      r.c = std::stoi(f[2]);
      r.type_count = std::stoi(f[3]);
    } catch (const std::logic_error&) {
      throw MalformedInput("census csv: bad row: " + line);
    }
    rows.push_back(std::move(r));
  }
  if (header) throw MalformedInput("census csv: empty");
  return rows;
}

std::string export_census_json(const std::vector<CensusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json jr{{"n", r.n}, {"kind", kind_name(r.kind)}, {"c", r.c}, {"count", r.type_count},
            {"fingerprints", r.fingerprint_count}};
    json mem = json::array();
    for (const auto& m : r.members) {
      json jm{{"name", m.name ? json(*m.name) : json(nullptr)},
              {"dt", format_dt_code(m.dt)},
              {"gauss", format_gauss_code(m.representative.gauss())},
              {"diagrams", m.diagrams},
              {"jones", m.fp.chirality_class.serialize()}};
      if (!m.short_code.empty()) {
        GaussCode s;
        s.components.push_back(m.short_code);
        jm["short_gauss"] = format_gauss_code(s);
      }
      mem.push_back(std::move(jm));
    }
    jr["members"] = std::move(mem);
    json cols = json::array();
    for (const auto& c : r.collisions) {
      json dts = json::array();
      for (const auto& dt : c.dts) dts.push_back(format_dt_code(dt));
      cols.push_back({{"jones", c.fp.chirality_class.serialize()}, {"dts", dts}});
    }
    jr["collisions"] = std::move(cols);
    out.push_back(std::move(jr));
  }
  return out.dump(1) + "\n";
}

std::vector<CensusRow> import_census_json(const std::string& text) {
  std::vector<CensusRow> rows;
  try {
    json j = json::parse(text);
    for (const auto& jr : j) {
      CensusRow r;
      r.n = jr.at("n").get<int>();
      r.kind = parse_kind(jr.at("kind").get<std::string>());
      r.c = jr.at("c").get<int>();
      r.type_count = jr.at("count").get<int>();
      r.fingerprint_count = jr.value("fingerprints", r.type_count);
      for (const auto& jm : jr.value("members", json::array())) {
        CensusMember m;
        if (!jm.at("name").is_null()) m.name = jm.at("name").get<std::string>();
        m.dt = parse_dt_code(jm.at("dt").get<std::string>());
        m.representative = jm.contains("gauss") ? realize_gauss_code(parse_gauss_code(jm.at("gauss").get<std::string>()))
                                                : from_dt_code(m.dt);
        m.fp = fingerprint(m.representative);
        m.diagrams = jm.value("diagrams", 0);
        if (jm.contains("short_gauss")) m.short_code = parse_int_sequence(jm.at("short_gauss").get<std::string>());
        r.members.push_back(std::move(m));
      }
      rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("census json: ") + e.what());
  }
  return rows;
}

}  // namespace meander
