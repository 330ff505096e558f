#include "flagmn/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "flagmn/operators.hpp"
#include "flagmn/qschubert.hpp"

namespace flagmn {

int thread_count() {
  if (const char* env = std::getenv("FLAGMN_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  int threads = static_cast<int>(std::min<std::size_t>(thread_count(), count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

using Clock = std::chrono::steady_clock;

// One slot per task: case count and the first failure message.
struct Slot {
  long long cases = 0;
  std::string failure;

  void fail(const std::string& msg) {
    if (failure.empty()) failure = msg;
  }
};

SweepResult collect(std::string name, const std::vector<Slot>& slots, Clock::time_point start) {
  SweepResult r;
  r.name = std::move(name);
  for (const auto& s : slots) {
    r.cases += s.cases;
    if (!s.failure.empty() && r.pass) {
      r.pass = false;
      r.detail = s.failure;
    }
  }
  if (r.pass) r.detail = std::to_string(r.cases) + " cases";
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

template <class F>
SweepResult run_slots(std::string name, std::size_t count, F&& body) {
  auto start = Clock::now();
  std::vector<Slot> slots(count);
  parallel_for(count, [&](std::size_t i) {
    try {
      body(i, slots[i]);
    } catch (const std::exception& e) {
      slots[i].fail(std::string("exception: ") + e.what());
    }
  });
  return collect(std::move(name), slots, start);
}

Permutation random_perm(int n, std::mt19937_64& g) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), g);
  return Permutation::from_one_line(v);
}

struct HookCase {
  int k, a, b;
};

std::vector<HookCase> hooks_for(int n) {
  std::vector<HookCase> out;
  for (int k = 1; k < n; ++k)
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= n - k; ++b) out.push_back({k, a, b});
  return out;
}

std::string where(const Permutation& u, int k, const Partition& lam) {
  return "u=" + u.str() + " k=" + std::to_string(k) + " lambda=" + lam.str();
}

}  // namespace

SweepResult sweep_classical_oracle(int n) {
  auto perms = all_permutations(n);
  auto hooks = hooks_for(n);
  return run_slots("classical hook oracle S" + std::to_string(n), perms.size(), [&](std::size_t i, Slot& s) {
    const auto& u = perms[i];
    for (const auto& h : hooks) {
      Partition lam = Partition::hook(h.a, h.b);
      auto chains = hook_multiply_chains(u, h.a, h.b, h.k, Ambient::ring(n));
      auto minimal = hook_multiply_minimal(u, h.a, h.b, h.k, Ambient::ring(n));
      auto oracle = oracle_product(u, grassmannian(lam, h.k, n), Ambient::ring(n));
      ++s.cases;
      if (chains != minimal) s.fail("chains vs minimal at " + where(u, h.k, lam));
      if (chains != oracle) s.fail("chains vs oracle at " + where(u, h.k, lam));
    }
  });
}

SweepResult sweep_quantum_oracle(int full, int sampled, int samples, std::uint64_t seed) {
  std::vector<Permutation> us = all_permutations(full);
  std::mt19937_64 g(seed);
  for (int t = 0; t < samples; ++t) us.push_back(random_perm(sampled, g));
  std::string name = "quantum hook = fgp = LL, all S" + std::to_string(full);
  if (samples > 0) name += " + " + std::to_string(samples) + " random S" + std::to_string(sampled);
  return run_slots(name, us.size(), [&](std::size_t i, Slot& s) {
    const auto& u = us[i];
    int n = u.n();
    for (const auto& h : hooks_for(n)) {
      Partition lam = Partition::hook(h.a, h.b);
      auto hook = q_hook_multiply(u, h.a, h.b, h.k);
      auto fgp = fgp_product(u, lam, h.k, n);
      ++s.cases;
      if (hook != fgp) {
        s.fail("hook theorem vs fgp at " + where(u, h.k, lam));
        continue;
      }
      // Every element of the rank shell, so vanishing coefficients are compared too.
      for (const auto& x : q_rank_shell(QElement(u), h.k, h.a + h.b - 1)) {
        long long ll = quantum_lr({u, x.w, x.q, lam, h.k});
        if (ll != hook.coeff(x))
          s.fail("LL reduction gives " + std::to_string(ll) + " for " + x.str() + ", expected " +
                 std::to_string(hook.coeff(x)) + " at " + where(u, h.k, lam));
      }
    }
  });
}

SweepResult sweep_peakless_binomial(int n) {
  auto perms = all_permutations(n);
  return run_slots("peakless chain binomials S" + std::to_string(n), perms.size(), [&](std::size_t i, Slot& s) {
    const auto& z = perms[i];
    if (z.is_identity()) return;
    auto wit = find_witness(z);
    if (!wit) {
      s.fail("no witness interval for " + cycle_string(z));
      return;
    }
    auto st = stats(z);
    Permutation top = compose(z, wit->u);
    auto P = interval_k(wit->u, top, wit->k);
    auto chains = saturated_chains(P);
    int r = P.height();
    bool minimal = r == static_cast<int>(st.support.size()) - st.s;
    ++s.cases;
    for (int a = 1; a <= r; ++a) {
      long long count = std::count_if(chains.begin(), chains.end(), [&](const Chain& c) { return is_peakless(c.labels, a); });
      long long expect = minimal ? binomial(st.s - 1, st.het - a) : 0;
      if (count != expect)
        s.fail(cycle_string(z) + " height " + std::to_string(a) + ": " + std::to_string(count) + " peakless chains, expected " +
               std::to_string(expect));
    }
  });
}

SweepResult sweep_relation_table() {
  auto start = Clock::now();
  auto rep = relation_table();
  SweepResult r;
  r.name = "degree-two relation table";
  r.cases = static_cast<long long>(rep.checks.size());
  const std::map<std::string, int> expected{{"1.i", 8}, {"1.ii", 4}, {"1.iii", 12}, {"2.i", 6},
                                            {"2.ii", 12}, {"2.iii", 6}, {"repeat", 2}};
  for (const auto& [clause, n] : expected)
    if (rep.count(clause) != n) {
      r.pass = false;
      r.detail = "clause " + clause + " has " + std::to_string(rep.count(clause)) + " words, expected " + std::to_string(n);
    }
  for (const auto& c : rep.checks)
    if (!c.pass && r.pass) {
      r.pass = false;
      r.detail = "clause " + c.clause + ": " + c.word.str() + " is not " + c.expectation;
    }
  if (r.pass) r.detail = std::to_string(r.cases) + " words";
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

namespace {

// All words of m-1 letters on [m] whose graph is a path through every vertex.
std::vector<OperatorWord> path_graph_words(int m) {
  std::vector<Letter> letters;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      if (a != b) letters.push_back({a, b});
  std::vector<OperatorWord> out;
  std::vector<Letter> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == m - 1) {
      OperatorWord w(cur);
      if (static_cast<int>(w.support().size()) != m) return;
      auto g = word_graph(w);
      if (g.components.size() == 1 && g.acyclic && g.max_degree <= 2) out.push_back(w);
      return;
    }
    for (const auto& l : letters) {
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

OperatorWord relabel(const OperatorWord& v, const std::vector<int>& image) {
  std::vector<Letter> ls;
  for (const auto& l : v.letters) ls.push_back({image[l.a - 1], image[l.b - 1]});
  return OperatorWord(ls);
}

}  // namespace

SweepResult sweep_quantum_path(int max_support) {
  auto start = Clock::now();
  std::vector<OperatorWord> words;
  for (int m = 2; m <= max_support; ++m) {
    auto ws = path_graph_words(m);
    words.insert(words.end(), ws.begin(), ws.end());
  }
  auto check = [](const OperatorWord& v, int n, Slot& s) {
    auto wc = classify(v, n);
    if (wc.kind != WordKind::Path) return;
    ++s.cases;
    if (v.quantum_count() > 1) s.fail(v.str() + " has " + std::to_string(v.quantum_count()) + " quantum letters");
    bool ok = v.size() == 1 ? wc.shape == PathShape::Single : (wc.shape == PathShape::Row || wc.shape == PathShape::Column);
    if (!ok) s.fail(v.str() + " in S" + std::to_string(n) + " has shape " + to_string(wc.shape));
  };
  std::vector<Slot> slots(words.size());
  parallel_for(words.size(), [&](std::size_t i) {
    const auto& v = words[i];
    int m = static_cast<int>(v.support().size());
    check(v, m, slots[i]);
    if (is_zero_word(v)) return;
    // Same shape placed inside a larger ambient group.
    for (int n = m + 1; n <= max_support; ++n) {
      std::vector<int> pick(n, 0);
      std::fill(pick.begin(), pick.begin() + m, 1);
      do {
        std::vector<int> image;
        for (int p = 0; p < n; ++p)
          if (pick[p]) image.push_back(p + 1);
        check(relabel(v, image), n, slots[i]);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  });
  return collect("path words, support <= " + std::to_string(max_support), slots, start);
}

namespace {

struct ForestCase {
  OperatorWord word;
  Permutation u;
  int k;
};

std::optional<OperatorWord> random_forest_word(int n, std::mt19937_64& g) {
  int len = std::uniform_int_distribution<int>(1, n - 1)(g);
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<Letter> ls;
  std::uniform_int_distribution<int> pick(1, n);
  for (int tries = 0; static_cast<int>(ls.size()) < len && tries < 100; ++tries) {
    int a = pick(g), b = pick(g);
    if (a == b || find(a) == find(b)) continue;
    parent[find(a)] = find(b);
    ls.push_back({a, b});
  }
  OperatorWord w(ls);
  auto wc = word_graph(w);
  if (!wc.acyclic) return std::nullopt;
  for (std::size_t x = 0; x < wc.components.size(); ++x)
    for (std::size_t y = x + 1; y < wc.components.size(); ++y)
      if (crossing(wc.components[x], wc.components[y])) return std::nullopt;
  return w;
}

}  // namespace

SweepResult sweep_rc_decompose(int count, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<ForestCase> cases;
  while (static_cast<int>(cases.size()) < count) {
    int n = std::uniform_int_distribution<int>(5, 6)(g);
    auto w = random_forest_word(n, g);
    if (!w) continue;
    for (int t = 0; t < 60; ++t) {
      Permutation u = random_perm(n, g);
      int k = std::uniform_int_distribution<int>(1, n - 1)(g);
      if (act(*w, u, k)) {
        cases.push_back({*w, u, k});
        break;
      }
    }
  }
  return run_slots("row-column decomposition of " + std::to_string(count) + " forests", cases.size(), [&](std::size_t i, Slot& s) {
    const auto& c = cases[i];
    int n = c.u.n();
    ++s.cases;
    std::string at = c.word.str() + " at u=" + c.u.str() + " k=" + std::to_string(c.k);
    auto rc = rc_decompose(c.word, c.u, c.k);
    if (!rc) {
      s.fail("no decomposition for " + at);
      return;
    }
    OperatorWord rcw = rc->row.then_after(rc->column);
    if (act(rcw, c.u, c.k) != act(c.word, c.u, c.k)) s.fail("decomposition not equivalent for " + at);
    if (!is_classical_row(oshift_word(rc->row, n, rc->shift))) s.fail("row does not shift to a classical row for " + at);
    if (!is_classical_column(oshift_word(rc->column, n, rc->shift))) s.fail("column does not shift to a classical column for " + at);
    if (!act(oshift_word(rcw, n, rc->shift), oshift(c.u, rc->shift), c.k)) s.fail("shifted decomposition acts as zero for " + at);
  });
}

namespace {

// Checks that f maps P bijectively onto Q and carries covers to covers (reversed if opposite).
bool isomorphic_by(const LabeledPoset& P, const LabeledPoset& Q, const std::function<std::optional<QElement>(const QElement&)>& f,
                   bool opposite, std::string& why) {
  if (P.size() != Q.size() || P.edges.size() != Q.edges.size()) {
    why = "sizes differ (" + std::to_string(P.size()) + "/" + std::to_string(P.edges.size()) + " vs " +
          std::to_string(Q.size()) + "/" + std::to_string(Q.edges.size()) + ")";
    return false;
  }
  std::vector<int> image(P.size());
  std::set<int> hit;
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto y = f(P.elements[i]);
    int j = y ? Q.index_of(*y) : -1;
    if (j < 0) {
      why = P.elements[i].str() + " has no image";
      return false;
    }
    image[i] = j;
    hit.insert(j);
  }
  if (hit.size() != P.size()) {
    why = "element map is not injective";
    return false;
  }
  std::set<std::pair<int, int>> qedges;
  for (const auto& e : Q.edges) qedges.insert({e.from, e.to});
  for (const auto& e : P.edges) {
    std::pair<int, int> mapped = opposite ? std::pair{image[e.to], image[e.from]} : std::pair{image[e.from], image[e.to]};
    if (!qedges.count(mapped)) {
      why = "cover " + P.elements[e.from].str() + " < " + P.elements[e.to].str() + " is not preserved";
      return false;
    }
  }
  return true;
}

QElement random_walk(const Permutation& u, int k, int steps, std::mt19937_64& g) {
  QElement x(u);
  for (int t = 0; t < steps; ++t) {
    auto cs = q_up_covers(x, k);
    if (cs.empty()) break;
    x = cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(g)].target;
  }
  return x;
}

}  // namespace

SweepResult sweep_equivalences(int count, int n, std::uint64_t seed) {
  struct Case {
    Permutation u;
    QElement t;
    int k;
  };
  std::mt19937_64 g(seed);
  std::vector<Case> cases;
  for (int c = 0; c < count; ++c) {
    Permutation u = random_perm(n, g);
    int k = std::uniform_int_distribution<int>(1, n - 1)(g);
    int steps = std::uniform_int_distribution<int>(1, 5)(g);
    cases.push_back({u, random_walk(u, k, steps, g), k});
  }
  return run_slots("interval symmetries, " + std::to_string(count) + " intervals in S" + std::to_string(n) + "[q]", cases.size(),
                   [&](std::size_t i, Slot& s) {
                     const auto& [u, t, k] = cases[i];
                     const Permutation& w = t.w;
                     const QMonomial& alpha = t.q;
                     Permutation o = Permutation::cyclic_shift(n), w0 = Permutation::longest(n);
                     auto P = q_interval(u, t, k);
                     std::string at = "[" + u.str() + ", " + t.str() + "]_" + std::to_string(k);
                     ++s.cases;
                     std::string why;

                     auto top_o = SignedQMonomial::from(alpha) * o_shift_monomial(u, w);
                     if (!top_o.is_polynomial()) {
                       s.fail("cyclic shift of " + at + " has a Laurent top");
                       return;
                     }
                     auto Po = q_interval(compose(o, u), QElement(top_o.to_qmonomial(), compose(o, w)), k);
                     auto fo = [&](const QElement& x) -> std::optional<QElement> {
                       auto m = SignedQMonomial::from(x.q) * o_shift_monomial(u, x.w);
                       if (!m.is_polynomial()) return std::nullopt;
                       return QElement(m.to_qmonomial(), compose(o, x.w));
                     };
                     if (!isomorphic_by(P, Po, fo, false, why)) s.fail("cyclic shift of " + at + ": " + why);

                     auto Pw = q_interval(compose(compose(w0, u), w0), QElement(alpha.reversed(), compose(compose(w0, w), w0)), n - k);
                     auto fw = [&](const QElement& x) -> std::optional<QElement> {
                       return QElement(x.q.reversed(), compose(compose(w0, x.w), w0));
                     };
                     if (!isomorphic_by(P, Pw, fw, false, why)) s.fail("w0 conjugate of " + at + ": " + why);

                     auto Pr = q_interval(compose(w, w0), QElement(alpha.reversed(), compose(u, w0)), n - k);
                     auto fr = [&](const QElement& x) -> std::optional<QElement> {
                       std::vector<int> d(n - 1);
                       for (int j = 1; j < n; ++j) d[j - 1] = alpha[n - j] - x.q[n - j];
                       return QElement(QMonomial::from_exponents(d), compose(x.w, w0));
                     };
                     if (!isomorphic_by(P, Pr, fr, true, why)) s.fail("opposite interval of " + at + ": " + why);
                   });
}

SweepResult sweep_quantum_independence(int n) {
  struct Job {
    Permutation u;
    int k;
    Partition lam;
  };
  std::vector<Job> jobs;
  for (const auto& u : all_permutations(n))
    for (int k = 1; k < n; ++k)
      for (int m = 1; m <= k * (n - k); ++m)
        for (const auto& lam : partitions_of(m, k, n - k)) jobs.push_back({u, k, lam});
  auto start = Clock::now();
  std::vector<Expansion> products(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { products[i] = fgp_product(jobs[i].u, jobs[i].lam, jobs[i].k, n); });
  SweepResult r;
  r.name = "numerical parts independent of (alpha,k), S" + std::to_string(n);
  std::map<std::pair<std::string, std::string>, std::pair<long long, std::string>> seen;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    for (const auto& [x, c] : products[i].terms()) {
      ++r.cases;
      Permutation zeta = compose(x.w, jobs[i].u.inverse());
      std::string at = x.str() + " in " + where(jobs[i].u, jobs[i].k, jobs[i].lam);
      auto key = std::pair{zeta.str(), jobs[i].lam.str()};
      auto [it, fresh] = seen.emplace(key, std::pair{c, at});
      if (!fresh && it->second.first != c && r.pass) {
        r.pass = false;
        r.detail = "coefficient " + std::to_string(c) + " of " + at + " differs from " + std::to_string(it->second.first) +
                   " of " + it->second.second;
      }
    }
  if (r.pass) r.detail = std::to_string(r.cases) + " coefficients in " + std::to_string(seen.size()) + " classes";
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

SweepResult sweep_ll_properties(int n) {
  auto perms = all_permutations(n);
  return run_slots("Leung-Li filters, S" + std::to_string(n), perms.size(), [&](std::size_t idx, Slot& s) {
    const auto& u = perms[idx];
    for (int k = 1; k < n; ++k)
      for (int m = 1; m <= k * (n - k); ++m)
        for (const auto& lam : partitions_of(m, k, n - k)) {
          Permutation v = grassmannian(lam, k, n);
          auto prod = fgp_product(u, lam, k, n);
          for (const auto& [x, c] : prod.terms()) {
            ++s.cases;
            std::string at = x.str() + " in " + where(u, k, lam);
            for (int i = 1; i < n; ++i)
              if (descent_sign(x.w, i) + varpi(x.q, i) > descent_sign(u, i) + descent_sign(v, i))
                s.fail("descent inequality fails at i=" + std::to_string(i) + " for " + at);
            if (!x.q.is_one()) {
              std::vector<int> pos;
              for (int i = 1; i < n; ++i)
                if (varpi(x.q, i) > 0) pos.push_back(i);
              if (pos.empty()) s.fail("no positive varpi for " + at);
              if (pos.size() == 1 && varpi(x.q, pos[0]) < 2) s.fail("unique positive varpi below 2 for " + at);
            }
            QLRQuery q{u, x.w, x.q, lam, k};
            long long lo = quantum_lr(q, StepChoice::Smallest), hi = quantum_lr(q, StepChoice::Largest);
            if (lo != c || hi != c)
              s.fail("reduction gives " + std::to_string(lo) + "/" + std::to_string(hi) + ", product has " + std::to_string(c) +
                     " for " + at);
          }
        }
  });
}

SweepResult sweep_x_commute(int n) {
  auto perms = all_permutations(n);
  return run_slots("x operators commute, S" + std::to_string(n), perms.size(), [&](std::size_t idx, Slot& s) {
    Expansion e;
    e.add(QElement(perms[idx]), 1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ++s.cases;
        if (x_operator(x_operator(e, i), j) != x_operator(x_operator(e, j), i))
          s.fail("x_" + std::to_string(i) + " and x_" + std::to_string(j) + " disagree on " + perms[idx].str());
      }
    // x_1 + ... + x_n = 0
    Expansion sum;
    for (int i = 1; i <= n; ++i) sum.add(x_operator(e, i));
    if (!sum.empty()) s.fail("x_1+...+x_n does not vanish on " + perms[idx].str());
  });
}

SweepResult sweep_symmetry_actions(int n) {
  std::vector<Letter> letters;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) letters.push_back({a, b});
  std::vector<OperatorWord> words;
  for (const auto& x : letters) {
    words.push_back(OperatorWord({x}));
    for (const auto& y : letters) {
      words.push_back(OperatorWord({x, y}));
      for (const auto& z : letters) words.push_back(OperatorWord({x, y, z}));
    }
  }
  auto perms = all_permutations(n);
  Permutation o = Permutation::cyclic_shift(n), w0 = Permutation::longest(n);
  return run_slots("action transports, words of length <= 3 in S" + std::to_string(n), words.size(), [&](std::size_t i, Slot& s) {
    const auto& v = words[i];
    auto ov = oshift_word(v, n), wv = w0_word(v, n), rv = rho_word(v);
    for (const auto& u : perms)
      for (int k = 1; k < n; ++k) {
        auto t = act(v, u, k);
        if (!t) continue;
        ++s.cases;
        std::string at = v.str() + " at u=" + u.str() + " k=" + std::to_string(k);
        auto m = SignedQMonomial::from(t->q) * o_shift_monomial(u, t->w);
        auto to = act(ov, compose(o, u), k);
        if (!m.is_polynomial() || !to || *to != QElement(m.to_qmonomial(), compose(o, t->w))) s.fail("cyclic shift fails for " + at);
        auto tw = act(wv, compose(compose(w0, u), w0), n - k);
        if (!tw || *tw != QElement(t->q.reversed(), compose(compose(w0, t->w), w0))) s.fail("w0 transport fails for " + at);
        auto tr = act(rv, compose(t->w, w0), n - k);
        if (!tr || *tr != QElement(t->q.reversed(), compose(u, w0))) s.fail("rho transport fails for " + at);
      }
  });
}

SweepResult sweep_shape_equivalence(int samples, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<OperatorWord> words;
  while (static_cast<int>(words.size()) < samples) {
    int n = std::uniform_int_distribution<int>(3, 7)(g);
    int len = std::uniform_int_distribution<int>(1, 4)(g);
    std::vector<Letter> ls;
    for (int t = 0; t < len; ++t) {
      int a = std::uniform_int_distribution<int>(1, n)(g), b = std::uniform_int_distribution<int>(1, n)(g);
      if (a != b) ls.push_back({a, b});
    }
    OperatorWord w(ls);
    if (!w.empty() && w.support().size() <= 6) words.push_back(w);
  }
  return run_slots("zero words agree with their flattenings", words.size(), [&](std::size_t i, Slot& s) {
    const auto& v = words[i];
    int n = v.max_index();
    bool zero = true;
    for (const auto& u : all_permutations(n)) {
      for (int k = 1; k < n && zero; ++k)
        if (act(v, u, k)) zero = false;
      if (!zero) break;
    }
    ++s.cases;
    if (zero != is_zero_word(v)) s.fail(v.str() + ": direct search and flattened search disagree");
  });
}

std::vector<SweepResult> verify_all(int n) {
  bool full = n >= 5;
  std::vector<SweepResult> out;
  out.push_back(sweep_classical_oracle(n));
  out.push_back(full ? sweep_quantum_oracle(4, n, 200) : sweep_quantum_oracle(std::min(n, 4), n, 0));
  if (full) out.push_back(sweep_quantum_oracle(n, n, 0));
  out.push_back(sweep_peakless_binomial(full ? 6 : n + 1));
  out.push_back(sweep_relation_table());
  out.push_back(sweep_quantum_path(n));
  out.push_back(sweep_rc_decompose(full ? 500 : 50));
  out.push_back(sweep_equivalences(full ? 100 : 20, n));
  out.push_back(sweep_quantum_independence(std::min(n, 4)));
  if (full) out.push_back(sweep_quantum_independence(n));
  out.push_back(sweep_ll_properties(n));
  out.push_back(sweep_x_commute(n));
  out.push_back(sweep_symmetry_actions(n));
  out.push_back(sweep_shape_equivalence(full ? 100 : 30));
  return out;
}

std::string format_result(const SweepResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace flagmn
