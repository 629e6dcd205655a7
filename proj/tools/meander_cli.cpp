#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "meander/algebra.hpp"
#include "meander/catalog.hpp"
#include "meander/classify.hpp"
#include "meander/errors.hpp"
#include "meander/render.hpp"
#include "meander/search.hpp"
#include "meander/verify.hpp"

using namespace meander;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

bool strip_prefix(std::string& s, const std::string& p) {
  if (s.rfind(p, 0) != 0) return false;
  s = trim(s.substr(p.size()));
  return true;
}

// Permutation "(1,2,3)", Gauss code "{...}", DT code, or a table name.
Diagram parse_diagram(std::string s) {
  s = trim(s);
  if (strip_prefix(s, "perm:") || (!s.empty() && s[0] == '(')) return close_open_meander(meander_from_permutation(parse_permutation(s)));
  if (strip_prefix(s, "dt:")) {
    DTCode c = parse_dt_code(s);
    validate_dt_code(c);
    return from_dt_code(c);
  }
  bool forced = strip_prefix(s, "gauss:");
  if (!s.empty() && (s[0] == '{' || s[0] == '[')) {
    GaussCode g;
    try {
      g = parse_gauss_code(s);
      validate_gauss_code(g);
    } catch (const MalformedInput& ge) {
      if (forced) throw;
      try {
        DTCode c = parse_dt_code(s);
        validate_dt_code(c);
        return from_dt_code(c);
      } catch (const MalformedInput&) {
        throw MalformedInput(std::string("neither a gauss code nor a dt code: ") + ge.what());
      }
    }
    return realize_gauss_code(g);
  }
  if (auto d = named_diagram(s)) return *d;
  throw UsageError("unknown knot or link name: " + s);
}

// An ordered code for the product: printed ordered codes first, then table rows
// (their short codes read axis-first), then any ordered rotation.
GaussCode ordered_operand(const std::string& input) {
  std::string s = trim(input);
  if (!s.empty() && (s[0] == '{' || s[0] == '[' || s.rfind("gauss:", 0) == 0)) {
    strip_prefix(s, "gauss:");
    GaussCode g = parse_gauss_code(s);
    validate_gauss_code(g);
    return g;
  }
  if (!s.empty() && (s[0] == '(' || s.rfind("perm:", 0) == 0)) return ordered_code_of(parse_diagram(s));
  try {
    return example_code("ordered code", s);
  } catch (const CatalogError&) {
  }
  static const Catalog cat = load_catalog();
  for (const auto& e : cat.entries) {
    if (!e.name || *e.name != s || e.kind != "knot" || !e.verified) continue;
    if (auto d = entry_diagram_from_short(e)) return d->gauss();
  }
  Diagram d = parse_diagram(s);
  if (d.component_count() != 1) return d.gauss();
  return ordered_code_of(d);
}

// A diagram drawn over the axis: names go to a table row with a meander short code.
std::optional<Diagram> meander_diagram_for(const std::string& input) {
  std::string s = trim(input);
  bool named = !s.empty() && s[0] != '(' && s[0] != '{' && s[0] != '[' && s.find(':') == std::string::npos;
  if (named) {
    static const Catalog cat = load_catalog();
    for (const auto& e : cat.entries) {
      if (!e.name || *e.name != s || !e.verified) continue;
      if (auto x = entry_diagram_from_short(e))
        if (auto d = with_meander_layout(*x)) return d;
    }
  }
  return with_meander_layout(parse_diagram(s));
}

std::string name_of(const Diagram& d) {
  if (d.crossing_count() == 0) return d.component_count() == 1 ? "0_1" : "unlink";
  return lookup_name(d).value_or("-");
}

std::string flags_text(const DiagramFlags& f) {
  std::string s;
  auto add = [&](bool on, const char* w) {
    if (on) s += (s.empty() ? "" : " ") + std::string(w);
  };
  add(f.reduced, "reduced");
  add(f.prime, "prime");
  add(f.split, "split");
  add(f.alternating, "alternating");
  add(f.positive, "positive");
  return s.empty() ? "-" : s;
}

void print_invariants(const Diagram& d, std::ostream& out) {
  const bool knot = d.component_count() == 1;
  Diagram r = remove_nugatory(d);
  out << "gauss: " << format_gauss_code(d.gauss()) << "\n";
  if (d.crossing_count() > 0) out << "dt: " << format_dt_code(to_dt_code(d)) << "\n";
  out << "components: " << d.component_count() << "\n";
  out << "crossings: " << d.crossing_count() << "\n";
  out << "reduced crossings: " << r.crossing_count() << "\n";
  out << "writhe: " << d.writhe() << "\n";
  out << "flags: " << flags_text(analyze(d)) << "\n";
  out << "bracket: " << kauffman_bracket(d).pretty("A") << "\n";
  auto jones = jones_polynomial(d);
  if (knot) out << "jones: " << jones.divided_exponents(2).pretty("t") << "\n";
  else out << "jones: " << jones.pretty("s") << "  (s = t^(1/2))\n";
  out << "determinant: " << determinant(d) << "\n";
  if (knot) out << "alexander: " << alexander_polynomial(d).pretty("t") << "\n";
  else {
    out << "linking matrix:";
    for (const auto& row : linking_matrix(d)) {
      out << " [";
      for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << "]";
    }
    out << "\n";
  }
  out << "coloring module: " << coloring_module(d).str() << "\n";
  out << "name: " << name_of(d) << "\n";
}

int default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void print_hit(const std::optional<SearchHit>& h, const std::string& what, int max_n, std::ostream& out) {
  if (!h) {
    out << "no " << what << " up to " << max_n << " crossings\n";
    return;
  }
  out << what << " with " << h->n << " crossings\n";
  if (h->diagram.layout() && !h->diagram.layout()->permutation.empty())
    out << "permutation: " << format_permutation(h->diagram.layout()->permutation) << "\n";
  out << "gauss: " << format_gauss_code(h->diagram.gauss()) << "\n";
  out << "dt: " << format_dt_code(h->dt) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open meanders, meander knots and links: enumeration, censuses, invariants and drawings."};
  app.require_subcommand(1);
  int jobs = default_jobs();

  auto* en = app.add_subcommand("enumerate", "List open meanders (or meandric systems) of one order");
  int en_n = 0, en_loops = 0;
  bool en_count = false, en_words = false;
  en->add_option("--n", en_n, "order (number of axis crossings)")->required()->check(CLI::Range(1, 16));
  en->add_option("--systems", en_loops, "list meandric systems with this many loops instead")->check(CLI::Range(1, 16));
  en->add_flag("--count", en_count, "print only the count");
  en->add_flag("--words", en_words, "add the upper and lower Dyck words");

  auto* ce = app.add_subcommand("census", "Count types of alternating meander knots, links or multi-component links");
  std::string ce_kind;
  std::vector<int> ce_n;
  int ce_c = 3;
  std::string ce_format = "csv";
  bool ce_slow = false;
  ce->add_option("kind", ce_kind, "knots, links or multi")->required()->check(CLI::IsMember({"knots", "links", "multi"}));
  ce->add_option("--n", ce_n, "crossing numbers (repeat or comma-separate)")->required()->delimiter(',')->check(CLI::Range(1, 16));
  ce->add_option("--c", ce_c, "components for multi")->check(CLI::Range(3, 8));
  ce->add_option("--format", ce_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ce->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  ce->add_flag("--slow", ce_slow, "allow the long runs (knots n >= 13, links and multi n >= 14)");

  auto* inv = app.add_subcommand("invariants", "Invariants of a diagram");
  std::string inv_input;
  inv->add_option("input", inv_input, "permutation, gauss code, dt code or name")->required();

  auto* pr = app.add_subcommand("product", "Product of two ordered Gauss codes");
  std::vector<std::string> pr_in;
  bool pr_ogc = false, pr_knot = false, pr_link = false;
  pr->add_flag("--ogc", pr_ogc, "operands are ordered Gauss codes (the only product available)");
  pr->add_option("operands", pr_in, "two codes or names")->required()->expected(2);
  auto* fk = pr->add_flag("--as-knot", pr_knot, "knot product (odd crossing numbers)");
  auto* fl = pr->add_flag("--as-link", pr_link, "two-component product (even crossing numbers)");
  fk->excludes(fl);

  auto* su = app.add_subcommand("sum", "Sum of two meander diagrams");
  std::vector<std::string> su_in;
  su->add_option("operands", su_in, "two permutations (or meander codes)")->required()->expected(2);

  auto* se = app.add_subcommand("search", "Smallest meander (or ordered) diagram of a knot or link");
  std::string se_target;
  int se_max = 13;
  bool se_ogc = false;
  se->add_option("target", se_target, "name or code of the target")->required();
  se->add_option("--max-n", se_max, "largest order tried")->check(CLI::Range(1, 16));
  se->add_flag("--ogc", se_ogc, "search ordered Gauss code diagrams (knots, max 14)");

  auto* re = app.add_subcommand("render", "SVG drawing of a meander or its closure");
  std::string re_input, re_style = "alternating", re_out;
  bool re_open = false;
  re->add_option("input", re_input, "permutation, meander-shaped code, or name")->required();
  re->add_option("--style", re_style, "shadow, alternating or checkerboard")
      ->check(CLI::IsMember({"shadow", "alternating", "checkerboard"}));
  re->add_flag("--open", re_open, "draw the open meander itself (permutations only)");
  re->add_option("-o,--output", re_out, "output file (default stdout)");

  auto* ve = app.add_subcommand("verify", "Replay the acceptance checks");
  bool ve_slow = false, ve_verbose = false;
  std::vector<int> ve_only;
  ve->add_flag("--slow", ve_slow, "include the long censuses");
  ve->add_flag("-v,--verbose", ve_verbose, "print every check, not only misses");
  ve->add_option("--criterion", ve_only, "run only these criteria")->check(CLI::Range(1, kCriteria));
  ve->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostream& out = std::cout;
  try {
    if (en->parsed()) {
      if (en_loops > 0) {
        auto sys = enumerate_meandric_systems(en_n, en_loops);
        if (en_count) {
          out << sys.size() << "\n";
          return 0;
        }
        for (const auto& s : sys) {
          out << dyck_encode(s.upper).text << " " << dyck_encode(s.lower).text;
          for (const auto& l : s.loops) out << " " << format_permutation(l);
          out << "\n";
        }
        return 0;
      }
      if (en_count) {
        out << count_open_meanders(en_n) << "\n";
        return 0;
      }
      for (const auto& m : enumerate_open_meanders(en_n)) {
        out << format_permutation(m.permutation);
        if (en_words) {
          auto [u, l] = words_from_meander(m);
          out << " " << u.text << " " << l.text;
        }
        out << "\n";
      }
      return 0;
    }

    if (ce->parsed()) {
      CensusKind kind = ce_kind == "knots" ? CensusKind::knot : ce_kind == "links" ? CensusKind::link : CensusKind::multi;
      std::vector<CensusRow> rows;
      for (int n : ce_n) {
        bool slow = kind == CensusKind::knot ? n >= 13 : n >= 14;
        if (slow && !ce_slow) throw UsageError("census at n=" + std::to_string(n) + " is a long run; pass --slow");
        if (kind == CensusKind::knot && n % 2 == 0) throw DomainError("meander knots have an odd number of crossings");
        if (kind != CensusKind::knot && n % 2 == 1) throw DomainError("meander links have an even number of crossings");
        rows.push_back(kind == CensusKind::knot   ? census_meander_knots(n, jobs)
                       : kind == CensusKind::link ? census_meander_links(n, jobs)
                                                  : census_multicomponent(n, ce_c, jobs));
      }
      out << (ce_format == "csv" ? export_census_csv(rows) : export_census_json(rows));
      return 0;
    }

    if (inv->parsed()) {
      print_invariants(parse_diagram(inv_input), out);
      return 0;
    }

    if (pr->parsed()) {
      if (!pr_ogc) throw UsageError("only the ordered Gauss code product is available; pass --ogc");
      GaussCode a = ordered_operand(pr_in[0]), b = ordered_operand(pr_in[1]);
      int n = a.crossing_count();
      bool as_link = pr_link || (!pr_knot && n % 2 == 0);
      Diagram p;
      GaussCode code, ordered;
      if (as_link) {
        code = ogc_link_product_code(a, b);
        p = realize_gauss_code(code);
        ordered = ordered_link_form(code);
      } else {
        code = ogc_product_code(a, b);
        p = realize_gauss_code(code);
        ordered = find_ordered_form(code).value_or(code);
      }
      out << "operands: " << format_gauss_code(a) << " " << format_gauss_code(b) << "\n";
      out << "product: " << format_gauss_code(code) << "\n";
      out << "ordered: " << format_gauss_code(ordered) << "\n";
      out << "components: " << p.component_count() << "\n";
      out << "name: " << name_of(p) << "\n";
      return 0;
    }

    if (su->parsed()) {
      auto operand = [](const std::string& s) {
        auto d = meander_diagram_for(s);
        if (!d) throw DomainError("operand is not a meander diagram: " + s);
        return *d;
      };
      Diagram a = operand(su_in[0]), b = operand(su_in[1]);
      Diagram s = meander_sum(a, b);
      out << "permutation: " << format_permutation(s.layout()->permutation) << "\n";
      out << "gauss: " << format_gauss_code(s.gauss()) << "\n";
      out << "components: " << s.component_count() << "\n";
      out << "name: " << name_of(s) << "\n";
      return 0;
    }

    if (se->parsed()) {
      Diagram target = parse_diagram(se_target);
      SearchTarget t = search_target(target);
      if (se_ogc) {
        if (se_max > 14) throw UsageError("ordered search goes up to 14 crossings");
        print_hit(search_ogc_diagram(t, se_max), "ordered diagram", se_max, out);
      } else {
        print_hit(search_meander_diagram(t, se_max), "meander diagram", se_max, out);
      }
      return 0;
    }

    if (re->parsed()) {
      std::string svg;
      std::string s = trim(re_input);
      bool perm = !s.empty() && (s[0] == '(' || s.rfind("perm:", 0) == 0);
      if (re_open) {
        if (!perm) throw UsageError("--open needs a permutation");
        strip_prefix(s, "perm:");
        svg = render_open_meander(meander_from_permutation(parse_permutation(s)));
      } else {
        std::optional<Diagram> d = meander_diagram_for(s);
        if (!d) d = parse_diagram(s);
        svg = render_diagram(*d, parse_render_style(re_style));
      }
      if (re_out.empty()) {
        out << svg;
      } else {
        std::ofstream f(re_out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + re_out);
        f << svg;
      }
      return 0;
    }

    if (ve->parsed()) {
      VerifyOptions opt;
      opt.slow = ve_slow;
      opt.jobs = jobs;
      bool all = true;
      for (int id = 1; id <= kCriteria; ++id) {
        if (!ve_only.empty() && std::find(ve_only.begin(), ve_only.end(), id) == ve_only.end()) continue;
        auto r = run_criterion(id, opt);
        all = all && r.pass;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
        out << "AC" << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  (" << secs << " s)\n";
        for (const auto& line : r.details)
          if (ve_verbose || line.rfind("ok", 0) != 0) out << "    " << line << "\n";
        out.flush();
      }
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const NotAMeander& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const RealizabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
