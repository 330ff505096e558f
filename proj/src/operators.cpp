#include "flagmn/operators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagmn {

OperatorWord::OperatorWord(std::vector<Letter> written) : letters(std::move(written)) {
  for (const auto& l : letters)
    if (l.a == l.b || l.a < 1 || l.b < 1) throw std::invalid_argument("letter needs distinct positive indices");
}

OperatorWord OperatorWord::from_application_order(std::vector<Letter> applied) {
  std::reverse(applied.begin(), applied.end());
  return OperatorWord(std::move(applied));
}

std::vector<Letter> OperatorWord::application_order() const { return {letters.rbegin(), letters.rend()}; }

std::vector<int> OperatorWord::support() const {
  std::set<int> s;
  for (const auto& l : letters) {
    s.insert(l.a);
    s.insert(l.b);
  }
  return {s.begin(), s.end()};
}

int OperatorWord::max_index() const {
  int m = 0;
  for (const auto& l : letters) m = std::max({m, l.a, l.b});
  return m;
}

int OperatorWord::quantum_count() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](const Letter& l) { return l.quantum(); }));
}

Permutation OperatorWord::zeta(int n) const {
  Permutation z(n);
  for (const auto& l : letters) z = compose(z, Permutation::transposition(n, l.a, l.b));
  return z;
}

bool OperatorWord::is_minimal() const {
  auto st = stats(zeta(std::max(1, max_index())));
  return size() == static_cast<int>(st.support.size()) - st.s;
}

OperatorWord OperatorWord::then_after(const OperatorWord& first) const {
  OperatorWord w = *this;
  w.letters.insert(w.letters.end(), first.letters.begin(), first.letters.end());
  return w;
}

std::string OperatorWord::str() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += "v(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
  }
  return s.empty() ? "1" : s;
}

OperatorWord parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '*') {
      ++pos;
      continue;
    }
    if (c != 'v') throw std::invalid_argument("expected v(a,b) in word");
    std::size_t open = text.find('(', pos), close = text.find(')', pos);
    if (open != pos + 1 || close == std::string_view::npos) throw std::invalid_argument("expected v(a,b) in word");
    std::string body(text.substr(open + 1, close - open - 1));
    auto comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected v(a,b) in word");
    try {
      out.push_back({std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad letter v(" + body + ")");
    }
    pos = close + 1;
  }
  if (out.empty() && text.find('1') == std::string_view::npos) throw std::invalid_argument("empty word");
  return OperatorWord(out);
}

std::optional<QElement> act_letter(const Letter& l, const QElement& x, int k) {
  const Permutation& u = x.w;
  int n = u.n();
  if (l.a > n || l.b > n) throw std::out_of_range("letter index exceeds n");
  Permutation inv = u.inverse();
  int i = inv(l.a), j = inv(l.b);
  if (!(i <= k && k < j)) return std::nullopt;
  if (l.a < l.b) {
    for (int p = i + 1; p < j; ++p)
      if (l.a < u(p) && u(p) < l.b) return std::nullopt;
    return QElement(x.q, u.swap_positions(i, j));
  }
  for (int p = i + 1; p < j; ++p)
    if (!(l.b < u(p) && u(p) < l.a)) return std::nullopt;
  return QElement(x.q * QMonomial::qij(n, i, j), u.swap_positions(i, j));
}

std::optional<QElement> act(const OperatorWord& v, const QElement& x, int k) {
  std::optional<QElement> cur = x;
  for (auto it = v.letters.rbegin(); it != v.letters.rend() && cur; ++it) cur = act_letter(*it, *cur, k);
  return cur;
}

OperatorWord flatten_word(const OperatorWord& v) {
  std::vector<int> seq;
  for (const auto& l : v.letters) {
    seq.push_back(l.a);
    seq.push_back(l.b);
  }
  auto f = flatten(seq);
  std::vector<Letter> out;
  for (std::size_t t = 0; t < v.letters.size(); ++t) out.push_back({f[2 * t], f[2 * t + 1]});
  return OperatorWord(out);
}

bool is_zero_word(const OperatorWord& v0) {
  if (v0.empty()) return false;
  OperatorWord v = flatten_word(v0);
  thread_local std::map<std::vector<Letter>, bool> cache;
  auto it = cache.find(v.letters);
  if (it != cache.end()) return it->second;
  int m = v.max_index();
  bool zero = true;
  for (const auto& u : all_permutations(m)) {
    for (int k = 1; k < m && zero; ++k)
      if (act(v, u, k)) zero = false;
    if (!zero) break;
  }
  cache.emplace(v.letters, zero);
  return zero;
}

bool equivalent_at(const OperatorWord& v, const OperatorWord& w, const Permutation& u, int k) {
  auto x = act(v, u, k), y = act(w, u, k);
  return x && y && *x == *y;
}

namespace {

OperatorWord map_word(const OperatorWord& v, const std::function<int(int)>& f) {
  std::vector<Letter> out;
  for (const auto& l : v.letters) out.push_back({f(l.a), f(l.b)});
  return OperatorWord(out);
}

}  // namespace

OperatorWord oshift_word(const OperatorWord& v, int n, int r) {
  r = ((r % n) + n) % n;
  return map_word(v, [n, r](int x) { return (x - 1 + r) % n + 1; });
}

OperatorWord w0_word(const OperatorWord& v, int n) {
  std::vector<Letter> out;
  for (const auto& l : v.letters) out.push_back({n + 1 - l.b, n + 1 - l.a});
  return OperatorWord(out);
}

OperatorWord rho_word(const OperatorWord& v) { return OperatorWord(v.application_order()); }

OperatorWord tau_word(const OperatorWord& v, int s) {
  auto supp = v.support();
  if (std::binary_search(supp.begin(), supp.end(), s)) throw std::invalid_argument("tau_s needs s outside the support");
  return map_word(v, [s](int x) { return tau(s, x); });
}

OperatorWord iota_word(const OperatorWord& v, int s) {
  return map_word(v, [s](int x) { return iota(s, x); });
}

WordGraph word_graph(const OperatorWord& v) {
  WordGraph g;
  g.vertices = v.support();
  int m = v.max_index();
  std::vector<int> parent(m + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> degree(m + 1, 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& l : v.letters) {
    auto key = std::minmax(l.a, l.b);
    if (!seen.insert(key).second) g.multi_edge = true;
    ++degree[l.a];
    ++degree[l.b];
    parent[find(l.a)] = find(l.b);
  }
  std::map<int, std::vector<int>> comps;
  for (int x : g.vertices) comps[find(x)].push_back(x);
  std::vector<std::vector<int>> cs;
  for (auto& [root, vs] : comps) cs.push_back(vs);
  std::sort(cs.begin(), cs.end());
  g.components = cs;
  g.component_letters.resize(cs.size());
  for (const auto& l : v.application_order())
    for (std::size_t c = 0; c < cs.size(); ++c)
      if (std::binary_search(cs[c].begin(), cs[c].end(), l.a)) g.component_letters[c].push_back(l);
  g.acyclic = !g.multi_edge;
  for (std::size_t c = 0; c < cs.size(); ++c)
    if (g.component_letters[c].size() + 1 != cs[c].size()) g.acyclic = false;
  for (int x : g.vertices) g.max_degree = std::max(g.max_degree, degree[x]);
  return g;
}

namespace {

bool components_noncrossing(const WordGraph& g) {
  for (std::size_t a = 0; a < g.components.size(); ++a)
    for (std::size_t b = a + 1; b < g.components.size(); ++b)
      if (crossing(g.components[a], g.components[b])) return false;
  return true;
}

bool classical_chained(const OperatorWord& v, bool row) {
  for (const auto& l : v.letters)
    if (l.quantum()) return false;
  WordGraph g = word_graph(v);
  for (const auto& ls : g.component_letters)
    for (std::size_t t = 0; t + 1 < ls.size(); ++t) {
      if (row && ls[t].b != ls[t + 1].a) return false;
      if (!row && ls[t + 1].b != ls[t].a) return false;
    }
  return components_noncrossing(g);
}

}  // namespace

bool is_classical_row(const OperatorWord& v) { return classical_chained(v, true); }
bool is_classical_column(const OperatorWord& v) { return classical_chained(v, false); }

std::optional<int> row_shift(const OperatorWord& v, int n) {
  for (int r = 0; r < n; ++r)
    if (is_classical_row(oshift_word(v, n, r))) return r;
  return std::nullopt;
}

std::optional<int> column_shift(const OperatorWord& v, int n) {
  for (int r = 0; r < n; ++r)
    if (is_classical_column(oshift_word(v, n, r))) return r;
  return std::nullopt;
}

WordClass classify(const OperatorWord& v, int n) {
  WordClass wc;
  if (v.empty()) return wc;
  n = std::max(n, v.max_index());
  wc.zero = is_zero_word(v);
  WordGraph g = word_graph(v);
  bool nc = components_noncrossing(g);
  wc.graph_crossing = !nc;
  wc.graph_tree = g.components.size() == 1 && g.acyclic;
  wc.graph_forest = g.acyclic && nc;
  if (wc.graph_tree && g.max_degree <= 2) {
    auto applied = v.application_order();
    std::map<int, int> degree;
    for (const auto& l : applied) {
      ++degree[l.a];
      ++degree[l.b];
    }
    bool ok = degree[applied.front().a] == 1 || degree[applied.front().b] == 1;
    for (std::size_t t = 0; t + 1 < applied.size() && ok; ++t) {
      std::set<int> x{applied[t].a, applied[t].b};
      int shared = static_cast<int>(x.count(applied[t + 1].a) + x.count(applied[t + 1].b));
      if (shared != 1) ok = false;
    }
    wc.graph_path = ok;
  }
  if (wc.zero)
    wc.kind = WordKind::Zero;
  else if (wc.graph_path)
    wc.kind = WordKind::Path;
  else if (wc.graph_tree)
    wc.kind = WordKind::Tree;
  else if (wc.graph_forest)
    wc.kind = WordKind::Forest;
  else if (wc.graph_crossing)
    wc.kind = WordKind::Crossing;
  if (wc.kind == WordKind::Path) {
    bool row = row_shift(v, n).has_value(), col = column_shift(v, n).has_value();
    if (v.size() == 1)
      wc.shape = PathShape::Single;
    else if (row && col)
      wc.shape = PathShape::Both;
    else if (row)
      wc.shape = PathShape::Row;
    else if (col)
      wc.shape = PathShape::Column;
  }
  return wc;
}

std::string to_string(WordKind k) {
  switch (k) {
    case WordKind::Zero: return "zero";
    case WordKind::Path: return "path";
    case WordKind::Tree: return "tree";
    case WordKind::Forest: return "forest";
    case WordKind::Crossing: return "crossing";
    case WordKind::Other: return "other";
  }
  return "other";
}

std::string to_string(PathShape s) {
  switch (s) {
    case PathShape::None: return "none";
    case PathShape::Row: return "row";
    case PathShape::Column: return "column";
    case PathShape::Single: return "single";
    case PathShape::Both: return "row+column";
  }
  return "none";
}

OperatorWord chain_word(const Chain& c) {
  std::vector<Letter> applied;
  for (std::size_t t = 0; t + 1 < c.elements.size(); ++t) {
    const Permutation& x = c.elements[t].w;
    const Permutation& y = c.elements[t + 1].w;
    std::vector<int> diff;
    for (int p = 1; p <= x.n(); ++p)
      if (x(p) != y(p)) diff.push_back(p);
    if (diff.size() != 2) throw std::logic_error("chain step is not a transposition");
    applied.push_back({x(diff[0]), x(diff[1])});
  }
  return OperatorWord::from_application_order(applied);
}

std::optional<RCDecomposition> rc_decompose(const OperatorWord& v, const Permutation& u, int k) {
  auto t = act(v, u, k);
  if (!t) throw std::invalid_argument("rc_decompose: word acts as zero");
  int n = u.n();
  for (const auto& ch : q_chains(QElement(u), *t, k)) {
    OperatorWord w = chain_word(ch);
    auto applied = w.application_order();
    for (std::size_t s = 0; s <= applied.size(); ++s) {
      OperatorWord col = OperatorWord::from_application_order({applied.begin(), applied.begin() + static_cast<long>(s)});
      OperatorWord row = OperatorWord::from_application_order({applied.begin() + static_cast<long>(s), applied.end()});
      for (int r = 0; r < n; ++r) {
        if (!is_classical_row(oshift_word(row, n, r)) || !is_classical_column(oshift_word(col, n, r))) continue;
        if (!act(oshift_word(w, n, r), oshift(u, r), k)) continue;
        return RCDecomposition{row, col, r, w};
      }
    }
  }
  return std::nullopt;
}

BijectionReport chains_word_bijection(const Permutation& u, const QElement& t, int k) {
  BijectionReport rep;
  QElement bottom(u);
  auto P = q_interval(bottom, t, k);
  if (P.empty()) throw std::invalid_argument("chains_word_bijection: endpoints are not comparable");
  std::set<OperatorWord> from_chains;
  for (const auto& ch : saturated_chains(P)) {
    OperatorWord w = chain_word(ch);
    auto r = act(w, u, k);
    if (!r || *r != t) {
      rep.detail = "chain word " + w.str() + " does not act u -> t";
      return rep;
    }
    if (!from_chains.insert(w).second) {
      rep.detail = "two chains give the word " + w.str();
      return rep;
    }
  }
  // Independent enumeration through the action itself.
  int n = u.n();
  int depth = t.rank() - u.length();
  std::set<OperatorWord> from_action;
  std::vector<Letter> applied;
  std::function<void(const QElement&)> dfs = [&](const QElement& x) {
    if (static_cast<int>(applied.size()) == depth) {
      if (x == t) from_action.insert(OperatorWord::from_application_order(applied));
      return;
    }
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a == b) continue;
        auto y = act_letter({a, b}, x, k);
        if (!y || !y->q.divides(t.q)) continue;
        applied.push_back({a, b});
        dfs(*y);
        applied.pop_back();
      }
  };
  dfs(bottom);
  if (from_action != from_chains) {
    rep.detail = "word sets differ: " + std::to_string(from_chains.size()) + " from chains, " +
                 std::to_string(from_action.size()) + " from the action";
    return rep;
  }
  rep.words.assign(from_chains.begin(), from_chains.end());
  rep.ok = true;
  return rep;
}

// ---------------------------------------------------------------------------

bool RelationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

int RelationReport::count(const std::string& clause) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const RelationCheck& c) { return c.clause == clause; }));
}

namespace {

bool commute(const OperatorWord& v, const OperatorWord& w) {
  int m = std::max(v.max_index(), w.max_index());
  for (const auto& u : all_permutations(m))
    for (int k = 1; k < m; ++k)
      if (act(v, u, k) != act(w, u, k)) return false;
  return true;
}

bool inequivalent(const OperatorWord& v, const OperatorWord& w) {
  int m = std::max(v.max_index(), w.max_index());
  for (const auto& u : all_permutations(m))
    for (int k = 1; k < m; ++k)
      if (equivalent_at(v, w, u, k)) return false;
  return true;
}

}  // namespace

RelationReport relation_table() {
  RelationReport rep;
  auto push = [&](std::string clause, const OperatorWord& w, std::string expect, bool pass) {
    rep.checks.push_back({std::move(clause), w, std::move(expect), pass});
  };

  // Disjoint supports on {1,2,3,4}.
  std::vector<Letter> letters4;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      if (a != b) letters4.push_back({a, b});
  auto nested_zero_pattern = [](const Letter& x, const Letter& y) {
    // (a,b) = x, (c,d) = y with a<d<c<b or a>b>c>d
    int a = x.a, b = x.b, c = y.a, d = y.b;
    return (a < d && d < c && c < b) || (a > b && b > c && c > d);
  };
  for (const auto& x : letters4)
    for (const auto& y : letters4) {
      std::set<int> sx{x.a, x.b};
      if (sx.count(y.a) || sx.count(y.b)) continue;
      OperatorWord w({x, y});
      if (crossing({x.a, x.b}, {y.a, y.b})) {
        push("1.i", w, "zero", is_zero_word(w));
      } else if (nested_zero_pattern(x, y) || nested_zero_pattern(y, x)) {
        push("1.ii", w, "zero", is_zero_word(w));
      } else {
        OperatorWord swapped({y, x});
        push("1.iii", w, "nonzero, commutes", !is_zero_word(w) && commute(w, swapped));
      }
    }

  // One shared index on {1,2,3}, with a<b<c = 1<2<3.
  const int a = 1, b = 2, c = 3;
  std::set<OperatorWord> two_i{
      OperatorWord({{b, a}, {a, c}}), OperatorWord({{c, b}, {b, a}}), OperatorWord({{a, c}, {c, b}}),
      OperatorWord({{a, c}, {b, a}}), OperatorWord({{b, a}, {c, b}}), OperatorWord({{c, b}, {a, c}})};
  std::vector<OperatorWord> rest;
  std::vector<Letter> letters3;
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      if (x != y) letters3.push_back({x, y});
  for (const auto& x : letters3)
    for (const auto& y : letters3) {
      std::set<int> sx{x.a, x.b}, sy{y.a, y.b};
      if (sx == sy) continue;
      OperatorWord w({x, y});
      if (two_i.count(w)) {
        push("2.i", w, "zero", is_zero_word(w));
      } else if (x.a == y.a || x.b == y.b) {
        push("2.ii", w, "zero", is_zero_word(w));
      } else {
        rest.push_back(w);
      }
    }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    bool ok = !is_zero_word(rest[i]);
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (j != i && !inequivalent(rest[i], rest[j])) ok = false;
    push("2.iii", rest[i], "nonzero, pairwise inequivalent", ok);
  }

  // Repeated letters.
  OperatorWord same({{1, 2}, {1, 2}}), back({{1, 2}, {2, 1}}), back_swapped({{2, 1}, {1, 2}});
  push("repeat", same, "zero", is_zero_word(same));
  push("repeat", back, "nonzero, does not commute", !is_zero_word(back) && !commute(back, back_swapped));
  return rep;
}

// ---------------------------------------------------------------------------

std::string diagram_text(const OperatorWord& v, int n) {
  n = std::max(n, v.max_index());
  std::string s;
  for (const auto& l : v.letters) {
    std::string row(n, '.');
    int lo = std::min(l.a, l.b), hi = std::max(l.a, l.b);
    for (int p = lo; p <= hi; ++p) row[p - 1] = l.quantum() ? '~' : '-';
    row[l.a - 1] = 'a';
    row[l.b - 1] = 'b';
    s += row + "  v(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")" + (l.quantum() ? " quantum" : "") + "\n";
  }
  return s;
}

std::string diagram_dot(const OperatorWord& v, int n) {
  n = std::max(n, v.max_index());
  std::string s = "digraph word {\n  rankdir=BT;\n";
  auto applied = v.application_order();
  for (std::size_t t = 0; t < applied.size(); ++t) {
    const auto& l = applied[t];
    s += "  l" + std::to_string(t) + " [label=\"v(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")\"";
    s += l.quantum() ? ", color=red, style=dashed" : ", color=green, style=solid";
    s += "];\n";
    if (t > 0) s += "  l" + std::to_string(t - 1) + " -> l" + std::to_string(t) + ";\n";
  }
  auto win = yellow_window(v, n);
  if (!win.empty()) {
    s += "  window [shape=box, style=filled, fillcolor=yellow, label=\"";
    for (std::size_t t = 0; t < win.size(); ++t)
      s += (t ? " " : "") + std::string("(") + std::to_string(win[t]) + "," + std::to_string(win[t] + 1) + ")";
    s += "\"];\n";
  }
  return s + "}\n";
}

std::vector<int> yellow_window(const OperatorWord& v, int n) {
  n = std::max(n, v.max_index());
  std::vector<int> out;
  if (v.quantum_count() == 0) return out;
  for (int i = 1; i < n; ++i) {
    bool ok = true;
    for (const auto& l : v.letters) {
      bool covers = std::min(l.a, l.b) <= i && i < std::max(l.a, l.b);
      if (l.quantum() != covers) ok = false;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

}  // namespace flagmn
