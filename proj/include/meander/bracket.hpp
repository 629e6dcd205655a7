#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "meander/polynomial.hpp"

namespace meander {

// Crossings of a link shadow as counterclockwise edge ids. Pairing 0 joins
// slots (0,1),(2,3); pairing 1 joins (1,2),(3,0).
struct BracketNetwork {
  int edge_count = 0;
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;  // closed components without crossings
};

// Sweeps the crossings in a fixed order keeping a planar pairing of the open
// edges; states and their transitions depend only on the shadow, so one plan
// serves every over/under assignment.
class TransferPlan {
 public:
  struct Step {
    int crossing = 0;
    // per source state: target state and closed-loop factor exponent for each pairing
    std::vector<std::array<std::int32_t, 2>> target;
    std::vector<std::array<std::uint8_t, 2>> loops;
    int states_after = 0;
  };

  TransferPlan(const BracketNetwork& net, std::vector<int> order);
  explicit TransferPlan(const BracketNetwork& net);  // greedy order

  const std::vector<Step>& steps() const { return steps_; }
  int free_loops() const { return free_loops_; }
  int crossing_count() const { return static_cast<int>(steps_.size()); }
  int max_states() const;

  // a_pairing[c] says which pairing is the A-smoothing at crossing c.
  template <class R>
  R evaluate(const std::vector<std::uint8_t>& a_pairing, const R& a, const R& a_inv, const R& d) const;

 private:
  std::vector<Step> steps_;
  int free_loops_ = 0;
};

std::vector<int> greedy_order(const BracketNetwork& net);

template <class R>
R TransferPlan::evaluate(const std::vector<std::uint8_t>& a_pairing, const R& a, const R& a_inv,
                         const R& d) const {
  int max_loops = 0;
  for (const auto& s : steps_)
    for (const auto& l : s.loops) max_loops = std::max<int>(max_loops, std::max(l[0], l[1]));
  std::vector<R> dpow{R(a * a_inv)};
  for (int k = 1; k <= max_loops + free_loops_; ++k) dpow.push_back(dpow.back() * d);
  const R one = dpow[0];
  if (steps_.empty()) return free_loops_ > 0 ? dpow[free_loops_ - 1] : one;
  std::vector<R> ca, cb;
  for (int k = 0; k <= max_loops; ++k) {
    ca.push_back(a * dpow[k]);
    cb.push_back(a_inv * dpow[k]);
  }
  std::vector<R> cur{one}, next;
  std::vector<char> live{1}, next_live;
  for (const auto& st : steps_) {
    next.assign(st.states_after, R());
    next_live.assign(st.states_after, 0);
    bool a_is_0 = a_pairing[st.crossing] == 0;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (!live[i]) continue;
      for (int p = 0; p < 2; ++p) {
        int t = st.target[i][p];
        if (t < 0) continue;
        const R& c = (p == 0) == a_is_0 ? ca[st.loops[i][p]] : cb[st.loops[i][p]];
        if (next_live[t]) next[t] += cur[i] * c;
        else {
          next[t] = cur[i] * c;
          next_live[t] = 1;
        }
      }
    }
    cur.swap(next);
    live.swap(next_live);
  }
  R total;
  bool any = false;
  for (size_t i = 0; i < cur.size(); ++i)
    if (live[i]) {
      total = any ? total + cur[i] : cur[i];
      any = true;
    }
  return total * dpow[free_loops_];
}

}  // namespace meander
