#pragma once

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "flagmn/kbruhat.hpp"

namespace flagmn::detail {

// Rank-bounded BFS from bottom, then prune to elements that reach top.
// `covers(x)` returns the up-covers of x; `admissible(x)` is a necessary
// condition for x <= top used to cut the frontier early.
template <class Covers, class Admissible>
LabeledPoset build_interval(const QElement& bottom, const QElement& top, int k, Covers covers, Admissible admissible) {
  LabeledPoset P;
  P.n = bottom.n();
  P.k = k;
  int budget = top.rank() - bottom.rank();
  if (budget < 0 || !admissible(bottom)) return P;

  std::vector<QElement> nodes{bottom};
  std::unordered_map<QElement, int> id{{bottom, 0}};
  std::vector<std::vector<PosetEdge>> up(1);
  std::vector<int> frontier{0};
  for (int step = 0; step < budget; ++step) {
    std::vector<int> next;
    for (int x : frontier) {
      QElement cur = nodes[x];
      for (const Cover& c : covers(cur)) {
        if (!admissible(c.target)) continue;
        auto [it, fresh] = id.try_emplace(c.target, static_cast<int>(nodes.size()));
        if (fresh) {
          nodes.push_back(c.target);
          up.emplace_back();
          next.push_back(it->second);
        }
        up[x].push_back({x, it->second, c.label, c.quantum});
      }
    }
    frontier = std::move(next);
  }
  auto top_it = id.find(top);
  if (top_it == id.end()) return P;

  // Backward reachability from top.
  std::vector<std::vector<int>> down(nodes.size());
  for (const auto& es : up)
    for (const auto& e : es) down[e.to].push_back(e.from);
  std::vector<bool> keep(nodes.size(), false);
  std::vector<int> stack{top_it->second};
  keep[top_it->second] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : down[x])
      if (!keep[y]) {
        keep[y] = true;
        stack.push_back(y);
      }
  }

  std::vector<int> order;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (keep[i]) order.push_back(static_cast<int>(i));
  std::vector<int> rank(nodes.size());
  for (int i : order) rank[i] = nodes[i].rank();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    return nodes[a] < nodes[b];
  });
  std::vector<int> pos(nodes.size(), -1);
  for (std::size_t t = 0; t < order.size(); ++t) pos[order[t]] = static_cast<int>(t);
  for (int i : order) {
    P.elements.push_back(nodes[i]);
    P.ranks.push_back(rank[i]);
  }
  for (int i : order)
    for (const auto& e : up[i])
      if (keep[e.to]) P.edges.push_back({pos[e.from], pos[e.to], e.label, e.quantum});
  std::sort(P.edges.begin(), P.edges.end(), [](const PosetEdge& a, const PosetEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return P;
}

}  // namespace flagmn::detail
