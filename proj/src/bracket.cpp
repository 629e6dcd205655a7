#include "meander/bracket.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "meander/errors.hpp"

namespace meander {

std::vector<int> greedy_order(const BracketNetwork& net) {
  const int n = static_cast<int>(net.crossings.size());
  std::vector<int> ends_done(net.edge_count, 0), order;
  std::vector<char> used(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      int score = 0;
      for (int e : net.crossings[c]) score += ends_done[e] == 1;
      if (score > best_score) best = c, best_score = score;
    }
    used[best] = 1;
    order.push_back(best);
    for (int e : net.crossings[best]) ends_done[e]++;
  }
  return order;
}

TransferPlan::TransferPlan(const BracketNetwork& net) : TransferPlan(net, greedy_order(net)) {}

int TransferPlan::max_states() const {
  int m = 1;
  for (const auto& s : steps_) m = std::max(m, s.states_after);
  return m;
}

namespace {

struct Graph {
  std::vector<std::array<int, 2>> nb, back;
  void reset(int n) {
    nb.assign(n, {-1, -1});
    back.assign(n, {-1, -1});
  }
  void link(int u, int v) {
    int ku = nb[u][0] == -1 ? 0 : 1, kv = nb[v][0] == -1 ? 0 : 1;
    if (u == v) kv = 1 - ku;
    nb[u][ku] = v;
    nb[v][kv] = u;
    back[u][ku] = kv;
    back[v][kv] = ku;
  }
};

}  // namespace

TransferPlan::TransferPlan(const BracketNetwork& net, std::vector<int> order) : free_loops_(net.free_loops) {
  const int n = static_cast<int>(net.crossings.size());
  if (static_cast<int>(order.size()) != n) throw MalformedInput("crossing order must cover every crossing");
  for (const auto& x : net.crossings)
    for (int e : x)
      if (e < 0 || e >= net.edge_count) throw MalformedInput("edge id out of range");
  std::vector<int> boundary;  // sorted open edges
  std::vector<std::string> states{std::string(1, '\0')};  // partner bytes + flag byte
  Graph g;
  for (int x : order) {
    const auto& E = net.crossings[x];
    enum Kind { kOld, kLoop, kNew };
    std::array<Kind, 4> kind;
    std::array<int, 4> ref;
    std::vector<int> pos_of(net.edge_count, -1);
    for (size_t i = 0; i < boundary.size(); ++i) pos_of[boundary[i]] = static_cast<int>(i);
    std::vector<char> consumed(boundary.size(), 0);
    std::vector<int> next_boundary;
    for (int t = 0; t < 4; ++t) {
      int e = E[t];
      int other = -1;
      for (int u = 0; u < 4; ++u)
        if (u != t && E[u] == e) other = u;
      if (pos_of[e] >= 0) {
        kind[t] = kOld;
        ref[t] = pos_of[e];
        consumed[pos_of[e]] = 1;
      } else if (other >= 0) {
        kind[t] = kLoop;
        ref[t] = other;
      } else {
        kind[t] = kNew;
        ref[t] = e;
        next_boundary.push_back(e);
      }
    }
    for (size_t i = 0; i < boundary.size(); ++i)
      if (!consumed[i]) next_boundary.push_back(boundary[i]);
    std::sort(next_boundary.begin(), next_boundary.end());
    if (std::adjacent_find(next_boundary.begin(), next_boundary.end()) != next_boundary.end())
      throw MalformedInput("edge attached to more than two crossing slots");
    std::vector<int> next_pos(net.edge_count, -1);
    for (size_t i = 0; i < next_boundary.size(); ++i) next_pos[next_boundary[i]] = static_cast<int>(i);

    const int B = static_cast<int>(boundary.size());
    const int nodes = B + 8;
    Step step;
    step.crossing = x;
    std::unordered_map<std::string, int> index;
    std::vector<std::string> next_states;
    std::vector<char> seen;
    for (const auto& st : states) {
      std::array<std::int32_t, 2> tgt{};
      std::array<std::uint8_t, 2> lp{};
      const bool flag = st.back() != 0;
      for (int p = 0; p < 2; ++p) {
        g.reset(nodes);
        for (int i = 0; i < B; ++i)
          if (static_cast<unsigned char>(st[i]) > i) g.link(i, static_cast<unsigned char>(st[i]));
        const int S = B;  // slot nodes S..S+3, terminals S+4..S+7
        if (p == 0) g.link(S + 0, S + 1), g.link(S + 2, S + 3);
        else g.link(S + 1, S + 2), g.link(S + 3, S + 0);
        for (int t = 0; t < 4; ++t) {
          if (kind[t] == kOld) g.link(S + t, ref[t]);
          else if (kind[t] == kLoop) {
            if (t < ref[t]) g.link(S + t, S + ref[t]);
          } else g.link(S + t, S + 4 + t);
        }
        // endpoints: untouched boundary positions and new terminals
        std::string out(next_boundary.size() + 1, '\0');
        seen.assign(nodes, 0);
        auto endpoint_pos = [&](int node) -> int {
          if (node < B) return consumed[node] ? -1 : next_pos[boundary[node]];
          if (node >= S + 4) return next_pos[ref[node - S - 4]];
          return -1;
        };
        for (int start = 0; start < nodes; ++start) {
          int sp = endpoint_pos(start);
          if (sp < 0 || seen[start] || g.nb[start][0] == -1) continue;
          int u = start, k_out = 0;
          seen[u] = 1;
          while (true) {
            int v = g.nb[u][k_out], k_in = g.back[u][k_out];
            seen[v] = 1;
            int vp = endpoint_pos(v);
            if (vp >= 0) {
              out[sp] = static_cast<char>(vp);
              out[vp] = static_cast<char>(sp);
              break;
            }
            u = v;
            k_out = 1 - k_in;
          }
        }
        int loops = 0;
        for (int u0 = 0; u0 < nodes; ++u0) {
          if (seen[u0] || g.nb[u0][0] == -1) continue;
          ++loops;
          int u = u0, k_out = 0;
          while (!seen[u]) {
            seen[u] = 1;
            int v = g.nb[u][k_out], k_in = g.back[u][k_out];
            u = v;
            k_out = 1 - k_in;
          }
        }
        bool nflag = flag || loops > 0;
        int factor = loops - ((!flag && loops > 0) ? 1 : 0);
        out.back() = nflag ? 1 : 0;
        auto it = index.find(out);
        int id;
        if (it == index.end()) {
          id = static_cast<int>(next_states.size());
          index.emplace(out, id);
          next_states.push_back(out);
        } else id = it->second;
        tgt[p] = id;
        lp[p] = static_cast<std::uint8_t>(factor);
      }
      step.target.push_back(tgt);
      step.loops.push_back(lp);
    }
    step.states_after = static_cast<int>(next_states.size());
    steps_.push_back(std::move(step));
    states = std::move(next_states);
    boundary = std::move(next_boundary);
  }
}

}  // namespace meander
