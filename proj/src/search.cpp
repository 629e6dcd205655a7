#include "meander/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

#include "meander/bracket.hpp"
#include "meander/errors.hpp"
#include "meander/meander.hpp"

namespace meander {

namespace {

constexpr std::uint64_t kPoint = 0x1d2c3b4a59687f1ULL;

// Relabelled unsigned code, minimal over rotations and reversals.
std::vector<int> shadow_key(const std::vector<int>& code) {
  const int L = static_cast<int>(code.size());
  std::vector<int> best, cur(L), map;
  for (int rev = 0; rev < 2; ++rev)
    for (int s = 0; s < L; ++s) {
      map.assign(L + 1, 0);
      int next = 0;
      bool worse = false, better = best.empty();
      for (int i = 0; i < L && !worse; ++i) {
        int idx = rev ? (s - i + L) % L : (s + i) % L;
        int a = std::abs(code[idx]);
        if (!map[a]) map[a] = ++next;
        cur[i] = map[a];
        if (!better) {
          if (cur[i] > best[i]) worse = true;
          else if (cur[i] < best[i]) better = true;
        }
      }
      if (!worse && better) best = cur;
    }
  return best;
}

struct Targets {
  std::vector<SearchTarget> targets;
  std::vector<Fingerprint> groups;                   // distinct fingerprints
  std::vector<std::vector<int>> members;             // group -> target indices
  std::vector<int> span;
  std::unordered_map<std::uint64_t, std::vector<int>> table;  // unit multiples -> groups

  Targets(const std::vector<SearchTarget>& t, int max_n) : targets(t) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < t.size(); ++i) {
      auto [it, fresh] = idx.emplace(t[i].fingerprint.key(), static_cast<int>(groups.size()));
      if (fresh) {
        groups.push_back(t[i].fingerprint);
        members.emplace_back();
      }
      members[it->second].push_back(static_cast<int>(i));
    }
    ModP a(kPoint), ai = a.inverse();
    const int K = 4 * max_n + 8;
    for (size_t g = 0; g < groups.size(); ++g) {
      const auto& P = groups[g].chirality_class;
      span.push_back(P.max_exponent() - P.min_exponent());
      for (ModP base : {ModP(P.eval_mod(a.v)), ModP(P.eval_mod(ai.v))}) {
        ModP x = base * a.pow(-K);
        for (int k = -K; k <= K; ++k, x *= a)
          for (ModP y : {x, -x}) {
            auto& v = table[y.v];
            if (std::find(v.begin(), v.end(), static_cast<int>(g)) == v.end()) v.push_back(static_cast<int>(g));
          }
      }
    }
  }
};

// Depth-first walk over the over/under bits of one shadow, sharing prefixes.
class ShadowWalk {
 public:
  ShadowWalk(const TransferPlan& plan, const std::vector<std::uint8_t>& base_a)
      : plan_(plan), base_a_(base_a), a_(kPoint), ai_(a_.inverse()) {
    ModP d = -(a_ * a_ + ai_ * ai_);
    int max_loops = 0;
    for (const auto& s : plan_.steps())
      for (const auto& l : s.loops) max_loops = std::max<int>(max_loops, std::max(l[0], l[1]));
    ModP p(1);
    for (int k = 0; k <= max_loops; ++k, p *= d) {
      ca_.push_back(a_ * p);
      cb_.push_back(ai_ * p);
    }
    tail_ = ModP(1);
    for (int k = 0; k < plan_.free_loops(); ++k) tail_ *= d;
    buf_.resize(plan_.steps().size() + 1);
    buf_[0] = {ModP(1)};
    for (size_t k = 0; k < plan_.steps().size(); ++k) buf_[k + 1].resize(plan_.steps()[k].states_after);
    bits_.assign(base_a_.size(), 0);
  }

  // f(value, bits) for every assignment with the first step's bit fixed to 0.
  template <class F>
  void run(F&& f) {
    if (plan_.steps().empty()) {
      f(tail_, bits_);
      return;
    }
    walk(0, f);
  }

 private:
  template <class F>
  void walk(size_t k, F& f) {
    const auto& steps = plan_.steps();
    if (k == steps.size()) {
      ModP total;
      for (const ModP& v : buf_[k]) total += v;
      f(total * tail_, bits_);
      return;
    }
    const auto& st = steps[k];
    for (int b = 0; b < (k == 0 ? 1 : 2); ++b) {
      bits_[st.crossing] = static_cast<char>(b);
      int a_pair = base_a_[st.crossing] ^ b;
      auto& out = buf_[k + 1];
      std::fill(out.begin(), out.end(), ModP());
      const auto& in = buf_[k];
      for (size_t i = 0; i < in.size(); ++i) {
        if (in[i].is_zero()) continue;
        for (int p = 0; p < 2; ++p) {
          int t = st.target[i][p];
          if (t < 0) continue;
          const ModP& c = p == a_pair ? ca_[st.loops[i][p]] : cb_[st.loops[i][p]];
          out[t] += in[i] * c;
        }
      }
      walk(k + 1, f);
    }
    bits_[st.crossing] = 0;
  }

  const TransferPlan& plan_;
  std::vector<std::uint8_t> base_a_;
  ModP a_, ai_, tail_;
  std::vector<ModP> ca_, cb_;
  std::vector<std::vector<ModP>> buf_;
  std::vector<char> bits_;
};

// Runs every shadow of one order against the active groups; returns hits per group.
template <class MakeDiagram>
void scan_shadow(const Diagram& base, const Targets& T, const std::vector<char>& active, MakeDiagram&& make,
                 int m, std::vector<std::optional<SearchHit>>& found, SearchStats* stats) {
  BracketInput in = bracket_input(base);
  TransferPlan plan(in.network, in.order);
  ShadowWalk walk(plan, in.a_pairing);
  walk.run([&](ModP v, const std::vector<char>& bits) {
    if (stats) ++stats->assignments;
    auto it = T.table.find(v.v);
    if (it == T.table.end()) return;
    bool any = false;
    for (int g : it->second) any |= active[g] != 0;
    if (!any) return;
    if (stats) ++stats->candidates;
    Diagram d = make(bits);
    Fingerprint f = fingerprint(d);
    std::optional<LaurentPolynomial> alex;
    for (int g : it->second) {
      if (!active[g] || !(f == T.groups[g])) continue;
      for (int i : T.members[g]) {
        const auto& want = T.targets[i].alexander;
        if (want) {
          if (!alex) alex = alexander_polynomial(d);
          if (!(*alex == *want)) continue;
        }
        DTCode dt = to_dt_code(d);
        auto& b = found[i];
        if (!b || dt < b->dt) b = SearchHit{m, d, dt};
      }
    }
  });
}

template <class ForEachShadow>
std::vector<std::optional<SearchHit>> run_search(const std::vector<SearchTarget>& targets, int max_n, int step,
                                                 int first, ForEachShadow&& shadows, SearchStats* stats) {
  Targets T(targets, max_n);
  std::vector<std::optional<SearchHit>> result(targets.size());
  for (int m = first; m <= max_n; m += step) {
    std::vector<char> active(T.groups.size(), 0);
    bool any = false, pending = false;
    for (size_t g = 0; g < T.groups.size(); ++g) {
      bool open = false;
      for (int i : T.members[g]) open |= !result[i].has_value();
      pending |= open;
      // a connected diagram with m crossings has bracket span at most 4m
      if (open && T.span[g] <= 4 * m) active[g] = 1, any = true;
    }
    if (!pending) break;
    if (!any) continue;
    std::vector<std::optional<SearchHit>> found(targets.size());
    shadows(m, [&](const Diagram& base, auto&& make) {
      if (stats) ++stats->shadows;
      scan_shadow(base, T, active, make, m, found, stats);
    });
    for (size_t i = 0; i < targets.size(); ++i)
      if (!result[i] && found[i]) result[i] = std::move(found[i]);
  }
  return result;
}

}  // namespace

SearchTarget search_target(const Diagram& d) {
  SearchTarget t{fingerprint(d), std::nullopt};
  if (d.component_count() == 1) t.alexander = alexander_polynomial(d);
  return t;
}

std::vector<std::optional<SearchHit>> search_meander_diagrams(const std::vector<SearchTarget>& targets, int max_n,
                                                              SearchStats* stats) {
  if (max_n > 16) throw DomainError("meander search is limited to 16 crossings");
  std::vector<SearchTarget> knots, links;
  std::vector<int> ki, li;
  std::vector<std::optional<SearchHit>> out(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].fingerprint.n_components == 1) knots.push_back(targets[i]), ki.push_back(static_cast<int>(i));
    else if (targets[i].fingerprint.n_components == 2) links.push_back(targets[i]), li.push_back(static_cast<int>(i));
  }
  auto shadows = [](int m, auto&& visit) {
    std::set<std::vector<int>> seen;
    std::vector<int> under(m, -1);
    for_each_open_meander(m, [&](const OpenMeander& om) {
      Diagram base = close_meander(om.permutation, under);
      if (m % 2 == 1 && !seen.insert(shadow_key(base.gauss().components[0])).second) return true;
      auto make = [&](const std::vector<char>& bits) {
        std::vector<int> s(m);
        for (int i = 0; i < m; ++i) s[i] = bits[i] ? 1 : -1;
        return close_meander(om.permutation, s);
      };
      visit(base, make);
      return true;
    });
  };
  if (!knots.empty()) {
    auto r = run_search(knots, max_n, 2, 1, shadows, stats);
    for (size_t i = 0; i < r.size(); ++i) out[ki[i]] = std::move(r[i]);
  }
  if (!links.empty()) {
    auto r = run_search(links, max_n, 2, 2, shadows, stats);
    for (size_t i = 0; i < r.size(); ++i) out[li[i]] = std::move(r[i]);
  }
  return out;
}

std::optional<SearchHit> search_meander_diagram(const SearchTarget& target, int max_n) {
  return search_meander_diagrams({target}, max_n)[0];
}

void for_each_ordered_shadow(int n, const std::function<void(const std::vector<int>&, const std::vector<char>&)>& f) {
  if (n < 1) return;
  // boundary of the slit disk: start 0, upper side 1..n, end n+1, lower side n..1 at 2n+2-i
  const int P = 0, Q = n + 1;
  auto pos = [&](int i, bool upper) { return upper ? i : 2 * n + 2 - i; };
  std::vector<std::pair<int, int>> chords;
  std::vector<int> labels;
  std::vector<char> upward, used(n + 1, 0);
  auto crosses = [&](int a, int b) {
    int lo = std::min(a, b), hi = std::max(a, b);
    for (auto [c, d] : chords) {
      bool ci = c > lo && c < hi, di = d > lo && d < hi;
      if (ci != di) return true;
    }
    return false;
  };
  std::function<void(int)> go = [&](int cur) {
    if (static_cast<int>(labels.size()) == n) {
      if (!crosses(cur, P)) f(labels, upward);
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (used[i]) continue;
      for (int side = 0; side < 2; ++side) {
        bool arrive_upper = side == 0;
        int p = pos(i, arrive_upper);
        if (crosses(cur, p)) continue;
        chords.emplace_back(cur, p);
        used[i] = 1;
        labels.push_back(i);
        upward.push_back(!arrive_upper);  // arriving on the lower side means going up through the segment
        go(pos(i, !arrive_upper));
        upward.pop_back();
        labels.pop_back();
        used[i] = 0;
        chords.pop_back();
      }
    }
  };
  go(Q);
}

std::uint64_t count_ordered_shadows(int n) {
  std::uint64_t c = 0;
  for_each_ordered_shadow(n, [&](const std::vector<int>&, const std::vector<char>&) { ++c; });
  return c;
}

Diagram ordered_shadow_diagram(const std::vector<int>& labels, const std::vector<char>& upward,
                               const std::vector<char>& segment_over) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> code(2 * n), signs(n);
  for (int i = 1; i <= n; ++i) code[i - 1] = segment_over[i - 1] ? i : -i;
  for (int j = 0; j < n; ++j) {
    int x = labels[j];
    code[n + j] = segment_over[x - 1] ? -x : x;
    signs[x - 1] = axis_crossing_sign(segment_over[x - 1] != 0, upward[j] != 0);
  }
  GaussCode g;
  g.components.push_back(std::move(code));
  return Diagram(std::move(g), std::move(signs));
}

std::vector<std::optional<SearchHit>> search_ogc_diagrams(const std::vector<SearchTarget>& targets, int max_n,
                                                          SearchStats* stats) {
  if (max_n > 14) throw DomainError("ordered-code search is limited to 14 crossings");
  for (const auto& t : targets)
    if (t.fingerprint.n_components != 1) throw DomainError("ordered gauss codes describe knots");
  auto shadows = [](int m, auto&& visit) {
    std::set<std::vector<int>> seen;
    std::vector<char> under(m, 0);
    for_each_ordered_shadow(m, [&](const std::vector<int>& labels, const std::vector<char>& upward) {
      Diagram base = ordered_shadow_diagram(labels, upward, under);
      if (!seen.insert(shadow_key(base.gauss().components[0])).second) return;
      auto make = [&](const std::vector<char>& bits) { return ordered_shadow_diagram(labels, upward, bits); };
      visit(base, make);
    });
  };
  return run_search(targets, max_n, 1, 1, shadows, stats);
}

std::optional<SearchHit> search_ogc_diagram(const SearchTarget& target, int max_n) {
  return search_ogc_diagrams({target}, max_n)[0];
}

}  // namespace meander
