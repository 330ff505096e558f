#include "flagmn/kbruhat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include "json.hpp"
#include <stdexcept>
#include <unordered_set>

#include "poset_build.hpp"

namespace flagmn {

int LabeledPoset::index_of(const QElement& x) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == x) return static_cast<int>(i);
  return -1;
}

std::multiset<int> LabeledPoset::label_multiset() const {
  std::multiset<int> m;
  for (const auto& e : edges) m.insert(e.label);
  return m;
}

std::vector<std::vector<QElement>> LabeledPoset::levels() const {
  std::vector<std::vector<QElement>> out;
  if (empty()) return out;
  out.resize(height() + 1);
  for (std::size_t i = 0; i < elements.size(); ++i) out[ranks[i] - ranks.front()].push_back(elements[i]);
  return out;
}

std::string LabeledPoset::to_dot() const {
  std::string s = "digraph interval {\n  rankdir=BT;\n";
  for (const auto& x : elements) {
    s += "  \"" + x.str() + "\" [w=\"" + x.w.str() + "\"";
    if (!x.q.is_one()) s += ", alpha=\"" + x.q.str() + "\"";
    s += "];\n";
  }
  for (const auto& e : edges) {
    s += "  \"" + elements[e.from].str() + "\" -> \"" + elements[e.to].str() + "\" [label=" + std::to_string(e.label);
    s += e.quantum ? ", style=dashed, color=red" : ", color=green";
    s += "];\n";
  }
  return s + "}\n";
}

std::string LabeledPoset::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    j["nodes"].push_back({{"id", elements[i].str()},
                          {"w", elements[i].w.str()},
                          {"q", elements[i].q.exponents()},
                          {"rank", ranks[i]}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges)
    j["edges"].push_back({{"from", elements[e.from].str()},
                          {"to", elements[e.to].str()},
                          {"label", e.label},
                          {"quantum", e.quantum}});
  return j.dump(2) + "\n";
}

std::string LabeledPoset::to_text() const {
  std::string s;
  auto lv = levels();
  for (std::size_t r = lv.size(); r-- > 0;) {
    s += std::to_string(r) + ":";
    for (const auto& x : lv[r]) s += "  " + x.str();
    s += "\n";
  }
  for (const auto& e : edges)
    s += elements[e.from].str() + " -> " + elements[e.to].str() + " [" + std::to_string(e.label) + (e.quantum ? ", q" : "") + "]\n";
  return s;
}

std::string Chain::str() const {
  std::string s = elements.front().str();
  for (std::size_t t = 0; t < labels.size(); ++t)
    s += " -" + std::to_string(labels[t]) + "-> " + elements[t + 1].str();
  return s;
}

bool is_peakless(const std::vector<int>& labels, int a) {
  int r = static_cast<int>(labels.size());
  if (r == 0) return true;
  if (a < 1 || a > r) return false;
  for (int t = 1; t < a; ++t)
    if (!(labels[t - 1] > labels[t])) return false;
  for (int t = a; t < r; ++t)
    if (!(labels[t - 1] < labels[t])) return false;
  return true;
}

std::optional<std::pair<int, int>> cover_witness_k(const Permutation& u, const Permutation& w, int k) {
  if (u.n() != w.n()) throw std::invalid_argument("size mismatch");
  int n = u.n();
  std::vector<int> diff;
  for (int p = 1; p <= n; ++p)
    if (u(p) != w(p)) diff.push_back(p);
  if (diff.size() != 2) return std::nullopt;
  int i = diff[0], j = diff[1];
  if (!(i <= k && k < j) || u(i) > u(j)) return std::nullopt;
  for (int l = i + 1; l < j; ++l)
    if (u(i) < u(l) && u(l) < u(j)) return std::nullopt;
  return std::make_pair(i, j);
}

bool is_cover_k(const Permutation& u, const Permutation& w, int k) { return cover_witness_k(u, w, k).has_value(); }

std::vector<Cover> up_covers_k(const Permutation& u, int k) {
  int n = u.n();
  if (k < 1 || k >= n) throw std::out_of_range("k out of range");
  std::vector<Cover> out;
  for (int i = 1; i <= k; ++i) {
    // Scanning right, only values that are new minima above u(i) give covers.
    int bound = n + 1;
    for (int j = i + 1; j <= n; ++j) {
      int v = u(j);
      if (v > u(i) && v < bound) {
        if (j > k) out.push_back({i, j, u(i), false, QElement(u.swap_positions(i, j))});
        bound = v;
      }
    }
  }
  return out;
}

bool k_monotone(const Permutation& x, const Permutation& w, int k) {
  for (int p = 1; p <= x.n(); ++p) {
    if (p <= k ? x(p) > w(p) : x(p) < w(p)) return false;
  }
  return true;
}

bool leq_k(const Permutation& u, const Permutation& w, int k) {
  if (u == w) return true;
  int budget = w.length() - u.length();
  if (budget <= 0 || !k_monotone(u, w, k)) return false;
  std::unordered_set<Permutation> level{u};
  for (int step = 0; step < budget; ++step) {
    std::unordered_set<Permutation> next;
    for (const auto& x : level)
      for (const auto& c : up_covers_k(x, k))
        if (k_monotone(c.target.w, w, k)) next.insert(c.target.w);
    if (next.empty()) return false;
    level = std::move(next);
  }
  return level.count(w) > 0;
}

LabeledPoset interval_k(const Permutation& u, const Permutation& w, int k) {
  if (u.n() != w.n()) throw std::invalid_argument("size mismatch");
  return detail::build_interval(
      QElement(u), QElement(w), k, [k](const QElement& x) { return up_covers_k(x.w, k); },
      [&w, k](const QElement& x) { return k_monotone(x.w, w, k); });
}

std::vector<Chain> saturated_chains(const LabeledPoset& P) {
  std::vector<Chain> out;
  if (P.empty()) return out;
  std::vector<std::vector<const PosetEdge*>> up(P.size());
  for (const auto& e : P.edges) up[e.from].push_back(&e);
  int top = static_cast<int>(P.size()) - 1;
  Chain cur;
  cur.elements.push_back(P.elements[0]);
  std::function<void(int)> dfs = [&](int x) {
    if (x == top) {
      out.push_back(cur);
      return;
    }
    for (const PosetEdge* e : up[x]) {
      cur.elements.push_back(P.elements[e->to]);
      cur.labels.push_back(e->label);
      cur.quantum.push_back(e->quantum);
      dfs(e->to);
      cur.elements.pop_back();
      cur.labels.pop_back();
      cur.quantum.pop_back();
    }
  };
  dfs(0);
  return out;
}

std::vector<Chain> peakless_chains(const Permutation& u, const Permutation& w, int k, int a) {
  std::vector<Chain> out;
  for (auto& c : saturated_chains(interval_k(u, w, k)))
    if (is_peakless(c.labels, a)) out.push_back(std::move(c));
  return out;
}

std::optional<Witness> find_witness(const Permutation& zeta) {
  int n = zeta.n();
  auto st = stats(zeta);
  int h = st.het;
  int supp = static_cast<int>(st.support.size());
  std::vector<int> ks{h};
  for (int k = h + 1; k <= n - supp + h; ++k) ks.push_back(k);
  for (int k : ks) {
    if (k < 1 || k >= n) continue;
    for (const auto& u : all_permutations(n)) {
      // Values moving up sit at positions <= k, values moving down after k.
      bool ok = true;
      for (int p = 1; p <= n && ok; ++p) {
        int a = u(p);
        if (a < zeta(a) && p > k) ok = false;
        if (a > zeta(a) && p <= k) ok = false;
      }
      if (!ok) continue;
      Permutation top = compose(zeta, u);
      if (leq_k(u, top, k)) return Witness{u, k, top.length() - u.length()};
    }
  }
  return std::nullopt;
}

int grassmannian_rank(const Permutation& zeta) {
  if (zeta.is_identity()) return 0;
  auto wit = find_witness(zeta);
  if (!wit) throw std::logic_error("no witness interval found for " + cycle_string(zeta));
  return wit->rank;
}

bool is_minimal(const Permutation& zeta) {
  if (zeta.is_identity()) throw std::invalid_argument("is_minimal: identity");
  auto st = stats(zeta);
  return grassmannian_rank(zeta) == static_cast<int>(st.support.size()) - st.s;
}

bool crossing_pairs(int l1, int m1, int l2, int m2) {
  if (l1 > m1) std::swap(l1, m1);
  if (l2 > m2) std::swap(l2, m2);
  return (l1 < l2 && l2 < m1 && m1 < m2) || (l2 < l1 && l1 < m2 && m2 < m1);
}

bool crossing(const std::vector<int>& A, const std::vector<int>& B) {
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      for (std::size_t p = 0; p < B.size(); ++p)
        for (std::size_t q = p + 1; q < B.size(); ++q)
          if (crossing_pairs(A[i], A[j], B[p], B[q])) return true;
  return false;
}

std::vector<Permutation> noncrossing_factor(const Permutation& zeta) {
  auto st = stats(zeta);
  std::vector<std::vector<std::vector<int>>> groups;
  for (const auto& c : st.cycles) groups.push_back({c});
  auto support = [](const std::vector<std::vector<int>>& g) {
    std::vector<int> s;
    for (const auto& c : g) s.insert(s.end(), c.begin(), c.end());
    std::sort(s.begin(), s.end());
    return s;
  };
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < groups.size() && !merged; ++a)
      for (std::size_t b = a + 1; b < groups.size() && !merged; ++b)
        if (crossing(support(groups[a]), support(groups[b]))) {
          groups[a].insert(groups[a].end(), groups[b].begin(), groups[b].end());
          groups.erase(groups.begin() + static_cast<long>(b));
          merged = true;
        }
  }
  std::sort(groups.begin(), groups.end(), [&](const auto& x, const auto& y) { return support(x) < support(y); });
  std::vector<Permutation> out;
  for (const auto& g : groups) out.push_back(Permutation::from_cycles(g, zeta.n()));
  return out;
}

}  // namespace flagmn
