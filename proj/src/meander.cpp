#include "meander/meander.hpp"

#include <algorithm>
#include <cctype>

#include "meander/errors.hpp"

namespace meander {

namespace {

// arcs (p_j, p_{j+1}); odd j (1-based) are upper
void split_arcs(std::span<const int> p, std::vector<std::pair<int, int>>& up,
                std::vector<std::pair<int, int>>& down) {
  for (size_t j = 0; j + 1 < p.size(); ++j) {
    if (j % 2 == 0) up.emplace_back(p[j], p[j + 1]);
    else down.emplace_back(p[j], p[j + 1]);
  }
}

bool noncrossing(const std::vector<std::pair<int, int>>& arcs) {
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [a, b] = std::minmax(arcs[i].first, arcs[i].second);
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      auto [c, d] = std::minmax(arcs[j].first, arcs[j].second);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

bool enclosed(int x, const std::vector<std::pair<int, int>>& arcs) {
  for (auto [a, b] : arcs)
    if (std::min(a, b) < x && x < std::max(a, b)) return true;
  return false;
}

std::vector<int> trace_from(const ArchConfiguration& first, const ArchConfiguration& second,
                            int start) {
  std::vector<int> seq{start};
  const ArchConfiguration* side[2] = {&first, &second};
  int cur = start;
  for (int s = 0;; s ^= 1) {
    int nxt = side[s]->partner(cur);
    if (nxt == 0) break;
    seq.push_back(nxt);
    cur = nxt;
    if (seq.size() > static_cast<size_t>(first.n_points()) + 1) break;
  }
  return seq;
}

}  // namespace

bool validate_meander_permutation(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return false;
  std::vector<char> seen(n + 1, 0);
  for (int x : p) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = 1;
  }
  for (int j = 0; j + 1 < n; ++j)
    if ((p[j] + p[j + 1]) % 2 == 0) return false;
  std::vector<std::pair<int, int>> up, down;
  split_arcs(p, up, down);
  if (!noncrossing(up) || !noncrossing(down)) return false;
  // loose ends must reach infinity on their side
  if (enclosed(p[0], down)) return false;
  const auto& last_side = (n % 2 == 1) ? up : down;
  if (enclosed(p[n - 1], last_side)) return false;
  return true;
}

OpenMeander meander_from_permutation(std::vector<int> p) {
  if (!validate_meander_permutation(p)) throw NotAMeander("not a meander permutation: " + format_permutation(p));
  OpenMeander m;
  m.order = static_cast<int>(p.size());
  std::vector<std::pair<int, int>> up, down;
  split_arcs(p, up, down);
  m.upper = ArchConfiguration(m.order, up);
  m.lower = ArchConfiguration(m.order, down);
  m.permutation = std::move(p);
  return m;
}

OpenMeander meander_from_words(const DecoratedDyckWord& upper, const DecoratedDyckWord& lower) {
  if (upper.text.size() != lower.text.size()) throw NotAMeander("words differ in length");
  ArchConfiguration up = dyck_decode(upper), down = dyck_decode(lower);
  const int n = up.n_points();
  if (n == 0) throw NotAMeander("empty words");
  // the curve starts at the leftmost lower loose end; words with both loose
  // ends above describe the reflected picture and start there
  std::vector<int> seq;
  if (!down.loose_ends().empty()) seq = trace_from(up, down, down.loose_ends().front());
  else if (!up.loose_ends().empty()) seq = trace_from(down, up, up.loose_ends().front());
  else throw NotAMeander("no loose end: closed system");
  if (static_cast<int>(seq.size()) != n) throw NotAMeander("superposition is not a single open curve");
  if (!validate_meander_permutation(seq)) throw NotAMeander("inconsistent loose ends");
  return meander_from_permutation(std::move(seq));
}

std::pair<DecoratedDyckWord, DecoratedDyckWord> words_from_meander(const OpenMeander& m) {
  return {dyck_encode(m.upper), dyck_encode(m.lower)};
}

void for_each_open_meander(int n, const std::function<bool(const OpenMeander&)>& f) {
  if (n < 1) throw MalformedInput("meander order must be positive");
  int up_arcs, up_loose, down_arcs, down_loose;
  if (n % 2 == 1) {
    up_arcs = down_arcs = (n - 1) / 2;
    up_loose = down_loose = 1;
  } else {
    up_arcs = n / 2;
    up_loose = 0;
    down_arcs = n / 2 - 1;
    down_loose = 2;
  }
  std::vector<ArchConfiguration> downs = enumerate_arch_configurations(down_arcs, down_loose);
  bool go = true;
  for_each_arch_word(up_arcs, up_loose, [&](const DecoratedDyckWord& uw) {
    ArchConfiguration up = dyck_decode(uw);
    for (const auto& down : downs) {
      std::vector<int> seq = trace_from(up, down, down.loose_ends().front());
      if (static_cast<int>(seq.size()) != n) continue;
      OpenMeander m;
      m.order = n;
      m.permutation = std::move(seq);
      m.upper = up;
      m.lower = down;
      if (!f(m)) {
        go = false;
        break;
      }
    }
    return go;
  });
}

std::vector<OpenMeander> enumerate_open_meanders(int n) {
  std::vector<OpenMeander> out;
  for_each_open_meander(n, [&](const OpenMeander& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const OpenMeander& a, const OpenMeander& b) { return a.permutation < b.permutation; });
  return out;
}

std::uint64_t count_open_meanders(int n) {
  if (n < 1) throw MalformedInput("meander order must be positive");
  int up_arcs = n % 2 ? (n - 1) / 2 : n / 2, up_loose = n % 2;
  int down_arcs = n % 2 ? (n - 1) / 2 : n / 2 - 1, down_loose = n % 2 ? 1 : 2;
  // partner tables only; avoids building OpenMeander objects
  auto tables = [](int arcs, int loose) {
    std::vector<std::vector<int>> t;
    for_each_arch_word(arcs, loose, [&](const DecoratedDyckWord& w) {
      std::vector<int> partner(w.text.size() + 1, 0), stack;
      for (int i = 1; i <= static_cast<int>(w.text.size()); ++i) {
        char c = w.text[i - 1];
        if (c == '(') stack.push_back(i);
        else if (c == ')') {
          partner[i] = stack.back();
          partner[stack.back()] = i;
          stack.pop_back();
        }
      }
      t.push_back(std::move(partner));
      return true;
    });
    return t;
  };
  auto ups = tables(up_arcs, up_loose), downs = tables(down_arcs, down_loose);
  std::vector<int> starts;
  for (auto& d : downs) {
    int s = 1;
    while (d[s] != 0) ++s;
    starts.push_back(s);
  }
  std::uint64_t count = 0;
  for (auto& u : ups) {
    for (size_t di = 0; di < downs.size(); ++di) {
      const auto& d = downs[di];
      int cur = starts[di], len = 1;
      for (int s = 0;; s ^= 1) {
        int nxt = s == 0 ? u[cur] : d[cur];
        if (nxt == 0) break;
        cur = nxt;
        ++len;
      }
      if (len == n) ++count;
    }
  }
  return count;
}

std::vector<std::vector<int>> trace_loops(const ArchConfiguration& upper, const ArchConfiguration& lower) {
  const int n = upper.n_points();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> loops;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> loop;
    int cur = start;
    for (int s = 0;; s ^= 1) {
      loop.push_back(cur);
      seen[cur] = 1;
      int nxt = s == 0 ? upper.partner(cur) : lower.partner(cur);
      if (nxt == 0) throw MalformedInput("meandric system halves must be closed");
      if (nxt == start) break;
      cur = nxt;
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

void for_each_meandric_system(int n, int k, const std::function<bool(const MeandricSystem&)>& f) {
  if (n < 2 || n % 2 != 0) throw DomainError("meandric systems need an even positive order");
  if (k < 1) throw DomainError("loop count must be positive");
  auto configs = enumerate_arch_configurations(n / 2, 0);
  for (const auto& up : configs) {
    for (const auto& down : configs) {
      auto loops = trace_loops(up, down);
      if (static_cast<int>(loops.size()) != k) continue;
      MeandricSystem s{n, up, down, std::move(loops)};
      if (!f(s)) return;
    }
  }
}

std::vector<MeandricSystem> enumerate_meandric_systems(int n, int k) {
  std::vector<MeandricSystem> out;
  for_each_meandric_system(n, k, [&](const MeandricSystem& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<int> parse_permutation(std::string_view s) {
  std::vector<int> out;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',' ||
                            s[i] == '(' || s[i] == ')' || s[i] == '[' || s[i] == ']'))
      ++i;
  };
  skip();
  while (i < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw MalformedInput("bad permutation text");
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw MalformedInput("permutation entry too large");
      ++i;
    }
    out.push_back(v);
    skip();
  }
  if (out.empty()) throw MalformedInput("empty permutation");
  if (std::count(s.begin(), s.end(), '(') != std::count(s.begin(), s.end(), ')') ||
      std::count(s.begin(), s.end(), '[') != std::count(s.begin(), s.end(), ']'))
    throw MalformedInput("unbalanced brackets in permutation");
  return out;
}

std::string format_permutation(std::span<const int> p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace meander
