#include "meander/codes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "meander/errors.hpp"

namespace meander {

int GaussCode::crossing_count() const { return visit_count() / 2; }

int GaussCode::visit_count() const {
  int v = 0;
  for (const auto& c : components) v += static_cast<int>(c.size());
  return v;
}

void validate_gauss_code(const GaussCode& g) {
  if (g.components.empty()) throw MalformedInput("gauss code has no components");
  int visits = g.visit_count();
  if (visits % 2) throw MalformedInput("gauss code has an odd number of visits");
  int n = visits / 2;
  std::vector<int> pos(n + 1, 0), neg(n + 1, 0);
  for (const auto& c : g.components) {
    for (int x : c) {
      if (x == 0 || std::abs(x) > n) throw MalformedInput("gauss label out of range: " + std::to_string(x));
      (x > 0 ? pos : neg)[std::abs(x)]++;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (pos[i] != 1 || neg[i] != 1)
      throw MalformedInput("label " + std::to_string(i) + " must occur once over and once under");
}

namespace {

struct TreeParser {
  std::string text;  // ascii-normalized
  size_t i = 0;

  void ws() {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '$')) ++i;
  }
  bool at(char c) {
    ws();
    return i < text.size() && text[i] == c;
  }
  IntTree list() {
    ws();
    char open = text[i];
    char close = open == '{' ? '}' : ']';
    ++i;
    IntTree t;
    ws();
    if (at(close)) {
      ++i;
      return t;
    }
    while (true) {
      t.items.push_back(item());
      ws();
      if (at(',')) {
        ++i;
        continue;
      }
      if (at(close)) {
        ++i;
        return t;
      }
      throw MalformedInput("expected ',' or closing bracket in list");
    }
  }
  IntTree item() {
    ws();
    if (i >= text.size()) throw MalformedInput("unexpected end of list");
    if (text[i] == '{' || text[i] == '[') return list();
    IntTree t;
    t.leaf = true;
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
      neg = text[i] == '-';
      ++i;
      ws();
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw MalformedInput("expected integer");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1000000) throw MalformedInput("integer too large");
    }
    t.value = static_cast<int>(neg ? -v : v);
    return t;
  }
};

std::string normalize(std::string_view s) {
  std::string out;
  for (size_t k = 0; k < s.size(); ++k) {
    unsigned char c = s[k];
    // U+2212 minus sign, U+2013 en dash
    if (c == 0xE2 && k + 2 < s.size() && static_cast<unsigned char>(s[k + 1]) == 0x88 &&
        static_cast<unsigned char>(s[k + 2]) == 0x92) {
      out.push_back('-');
      k += 2;
    } else if (c == 0xE2 && k + 2 < s.size() && static_cast<unsigned char>(s[k + 1]) == 0x80 &&
               static_cast<unsigned char>(s[k + 2]) == 0x93) {
      out.push_back('-');
      k += 2;
    } else if (c == '\\') {
      // tolerate "\{" from typeset sources
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::vector<int> leaves(const IntTree& t) {
  std::vector<int> v;
  for (const auto& x : t.items) {
    if (!x.leaf) throw MalformedInput("expected a flat integer list");
    v.push_back(x.value);
  }
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(v[k]);
  }
  return s + "}";
}

}  // namespace

IntTree parse_int_tree(std::string_view s) {
  TreeParser p{normalize(s)};
  p.ws();
  IntTree top;
  // a bare sequence of lists "{..}, {..}" is read as one list of lists
  std::vector<IntTree> seq;
  while (true) {
    p.ws();
    if (p.i >= p.text.size()) break;
    if (!p.at('{') && !p.at('[')) throw MalformedInput("expected '{'");
    seq.push_back(p.list());
    p.ws();
    if (p.at(',')) {
      ++p.i;
      continue;
    }
    p.ws();
    if (p.i < p.text.size()) throw MalformedInput("trailing characters after list");
  }
  if (seq.empty()) throw MalformedInput("empty input");
  if (seq.size() == 1) return seq[0];
  top.items = std::move(seq);
  return top;
}

GaussCode parse_gauss_code(std::string_view s) {
  IntTree t = parse_int_tree(s);
  GaussCode g;
  bool nested = !t.items.empty() && !t.items[0].leaf;
  if (nested) {
    for (const auto& c : t.items) {
      if (c.leaf) throw MalformedInput("mixed integers and lists in gauss code");
      g.components.push_back(leaves(c));
    }
  } else {
    g.components.push_back(leaves(t));
  }
  validate_gauss_code(g);
  return g;
}

std::vector<int> parse_int_sequence(std::string_view s) {
  IntTree t = parse_int_tree(s);
  while (t.items.size() == 1 && !t.items[0].leaf) t = IntTree(t.items[0]);
  for (const auto& c : t.items)
    if (!c.leaf) throw MalformedInput("expected a flat integer sequence");
  return leaves(t);
}

std::string format_gauss_code(const GaussCode& g) {
  if (g.components.size() == 1) return join(g.components[0]);
  std::string s = "{";
  for (size_t k = 0; k < g.components.size(); ++k) {
    if (k) s += ", ";
    s += join(g.components[k]);
  }
  return s + "}";
}

void validate_dt_code(const DTCode& c) {
  if (c.component_sizes.empty()) throw MalformedInput("dt code has no components");
  int n = 0;
  for (int s : c.component_sizes) {
    if (s < 1) throw MalformedInput("dt component size must be positive");
    n += s;
  }
  if (static_cast<int>(c.evens.size()) != n)
    throw MalformedInput("dt code has " + std::to_string(c.evens.size()) + " entries, sizes sum to " +
                         std::to_string(n));
  std::vector<char> seen(2 * n + 1, 0);
  for (int e : c.evens) {
    int a = std::abs(e);
    if (a % 2 || a < 2 || a > 2 * n || seen[a]) throw MalformedInput("dt entries must be distinct evens 2..2n");
    seen[a] = 1;
  }
}

DTCode parse_dt_code(std::string_view s) {
  IntTree t = parse_int_tree(s);
  DTCode c;
  if (!t.items.empty() && t.items[0].leaf) {
    c.evens = leaves(t);
    c.component_sizes = {static_cast<int>(c.evens.size())};
  } else {
    if (t.items.size() != 2) throw MalformedInput("dt code must be {{sizes}, {evens}}");
    c.component_sizes = leaves(t.items[0]);
    c.evens = leaves(t.items[1]);
  }
  validate_dt_code(c);
  return c;
}

std::string format_dt_code(const DTCode& c) {
  return "{" + join(c.component_sizes) + ", " + join(c.evens) + "}";
}

}  // namespace meander
