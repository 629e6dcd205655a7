#include "meander/arch.hpp"

#include <algorithm>

#include "meander/errors.hpp"

namespace meander {

ArchConfiguration::ArchConfiguration(int n_points, std::vector<std::pair<int, int>> arcs)
    : n_(n_points), partner_(n_points + 1, -1) {
  if (n_points < 0) throw MalformedInput("negative point count");
  for (auto [a, b] : arcs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n_points || a == b) throw MalformedInput("arc endpoint out of range");
    if (partner_[a] != -1 || partner_[b] != -1) throw MalformedInput("point used twice");
    partner_[a] = b;
    partner_[b] = a;
    arcs_.emplace_back(a, b);
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (int i = 1; i <= n_points; ++i) {
    if (partner_[i] == -1) {
      partner_[i] = 0;
      loose_.push_back(i);
    }
  }
  if (loose_.size() > 2) throw MalformedInput("more than two loose ends");
  // noncrossing: a stack scan
  std::vector<int> stack;
  for (int i = 1; i <= n_points; ++i) {
    int p = partner_[i];
    if (p == 0) continue;
    if (p > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != p) throw MalformedInput("arcs cross");
      stack.pop_back();
    }
  }
}

int ArchConfiguration::depth(int point) const {
  int d = 0;
  for (auto [a, b] : arcs_)
    if (a < point && point < b) ++d;
  return d;
}

int ArchConfiguration::max_depth() const {
  int best = 0, cur = 0;
  for (int i = 1; i <= n_; ++i) {
    int p = partner_[i];
    if (p > i) best = std::max(best, ++cur);
    else if (p != 0) --cur;
  }
  return best;
}

int DecoratedDyckWord::compare(const DecoratedDyckWord& o) const {
  auto rank = [](char c) { return c == '1' ? 0 : c == '(' ? 1 : 2; };
  size_t n = std::min(text.size(), o.text.size());
  for (size_t i = 0; i < n; ++i) {
    int a = rank(text[i]), b = rank(o.text[i]);
    if (a != b) return a < b ? -1 : 1;
  }
  if (text.size() == o.text.size()) return 0;
  return text.size() < o.text.size() ? -1 : 1;
}

DecoratedDyckWord parse_dyck_word(std::string_view s) {
  DecoratedDyckWord w;
  int depth = 0, loose = 0;
  for (char c : s) {
    if (c == ' ') continue;
    if (c == '(') ++depth;
    else if (c == ')') {
      if (--depth < 0) throw MalformedInput("unbalanced word");
    } else if (c == '1') ++loose;
    else throw MalformedInput(std::string("bad symbol in word: ") + c);
    w.text.push_back(c);
  }
  if (depth != 0) throw MalformedInput("unbalanced word");
  if (loose > 2) throw MalformedInput("more than two loose ends");
  return w;
}

ArchConfiguration dyck_decode(const DecoratedDyckWord& w) {
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> stack;
  int i = 0;
  for (char c : w.text) {
    ++i;
    if (c == '(') stack.push_back(i);
    else if (c == ')') {
      if (stack.empty()) throw MalformedInput("unbalanced word");
      arcs.emplace_back(stack.back(), i);
      stack.pop_back();
    } else if (c != '1') throw MalformedInput("bad symbol in word");
  }
  if (!stack.empty()) throw MalformedInput("unbalanced word");
  return ArchConfiguration(i, std::move(arcs));
}

DecoratedDyckWord dyck_encode(const ArchConfiguration& a) {
  DecoratedDyckWord w;
  for (int i = 1; i <= a.n_points(); ++i) {
    int p = a.partner(i);
    w.text.push_back(p == 0 ? '1' : p > i ? '(' : ')');
  }
  return w;
}

namespace {

struct WordGen {
  int n_arcs, loose;
  const std::function<bool(const DecoratedDyckWord&)>& f;
  DecoratedDyckWord w;
  bool stopped = false;

  void run(int opened, int closed, int used_loose) {
    if (stopped) return;
    int len = static_cast<int>(w.text.size());
    if (len == 2 * n_arcs + loose) {
      if (!f(w)) stopped = true;
      return;
    }
    int depth = opened - closed;
    if (depth == 0 && used_loose < loose) {
      w.text.push_back('1');
      run(opened, closed, used_loose + 1);
      w.text.pop_back();
    }
    if (opened < n_arcs) {
      w.text.push_back('(');
      run(opened + 1, closed, used_loose);
      w.text.pop_back();
    }
    if (depth > 0) {
      w.text.push_back(')');
      run(opened, closed + 1, used_loose);
      w.text.pop_back();
    }
  }
};

}  // namespace

void for_each_arch_word(int n_arcs, int loose,
                        const std::function<bool(const DecoratedDyckWord&)>& f) {
  if (n_arcs < 0 || loose < 0 || loose > 2) throw MalformedInput("bad arch word shape");
  WordGen g{n_arcs, loose, f, {}};
  g.run(0, 0, 0);
}

std::vector<DecoratedDyckWord> arch_words(int n_arcs, int loose) {
  std::vector<DecoratedDyckWord> out;
  for_each_arch_word(n_arcs, loose, [&](const DecoratedDyckWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<ArchConfiguration> enumerate_arch_configurations(int n_arcs, int loose) {
  std::vector<ArchConfiguration> out;
  for_each_arch_word(n_arcs, loose, [&](const DecoratedDyckWord& w) {
    out.push_back(dyck_decode(w));
    return true;
  });
  return out;
}

}  // namespace meander
