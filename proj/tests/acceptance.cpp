#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "flagmn/operators.hpp"
#include "flagmn/qschubert.hpp"
#include "flagmn/sweeps.hpp"

using namespace flagmn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Permutation P(const char* s, int n = 0) { return parse_permutation(s, n); }
QElement Q(const char* s) { return parse_qelement(s); }

Expansion single(const Permutation& u) {
  Expansion e;
  e.add(QElement(u), 1);
  return e;
}

Outcome q_monk() {
  Outcome o;
  Expansion want;
  for (const char* s : {"3412", "2431", "q_2 1342", "q_2q_3 1234"}) want.add(Q(s), 1);
  o.require(q_monk_multiply(single(P("1432")), 2) == want, "q_monk_multiply differs");
  o.require(fgp_product(P("1432"), Partition{1}, 2, 4) == want, "fgp_product differs");
  o.detail = o.pass ? "4 terms via quantum Monk and quantization" : o.detail;
  return o;
}

Outcome mn_example() {
  struct Term {
    int sign;
    std::vector<std::pair<int, int>> q;
    const char* cycle;
  };
  const std::vector<Term> terms{
      {+1, {}, "(2,3,5,7,4)"},         {+1, {}, "(2,4,3,5,7)"},         {+1, {}, "(3,5,6,7,4)"},
      {-1, {}, "(2,3,5,6,7)"},         {+1, {{5, 7}}, "(2,3,4,7,5)"},   {+1, {{5, 7}}, "(3,4,6,7,5)"},
      {+1, {{5, 8}}, "(1,6,7,3,5)"},   {+1, {{5, 8}}, "(1,7,2,3,5)"},   {-1, {{5, 8}}, "(1,6,7,5,4)"},
      {-1, {{5, 8}}, "(1,7,5,3,4)"},   {-1, {{5, 8}}, "(1,7,4,3,5)"},   {-1, {{2, 6}}, "(2,3,5,7,8)"},
      {+1, {{2, 8}}, "(1,7,3,5,8)"},   {+1, {{2, 8}}, "(1,8,2,3,4)"},   {+1, {{2, 8}}, "(1,6,7,5,8)"},
      {+1, {{2, 8}}, "(1,7,5,6,8)"},   {-1, {{2, 8}, {5, 7}}, "(1,7,5,4,8)"},
  };
  auto u = P("68235741");
  Expansion want;
  for (const auto& t : terms) {
    QMonomial m(8);
    for (auto [i, j] : t.q) m = m * QMonomial::qij(8, i, j);
    want.add(QElement(m, compose(P(t.cycle, 8), u)), t.sign);
  }
  Outcome o;
  auto got = q_powersum_multiply(u, 4, 5);
  o.require(want.size() == 17, "expected table is not 17 terms");
  o.require(got == want, "q_powersum_multiply differs (" + std::to_string(got.size()) + " terms)");
  if (o.pass) o.detail = "17 signed terms, no extras";
  return o;
}

Outcome q_minimal() {
  Outcome o;
  QLRQuery q{P("68235741"), P("78251346"), QMonomial::qij(8, 5, 8), Partition{2, 2}, 5};
  auto tr = quantum_lr_trace(q);
  std::vector<std::tuple<int, const char*, const char*, QMonomial>> path{
      {7, "68235714", "78251364", QMonomial::qij(8, 5, 7)},
      {6, "68235174", "78251634", QMonomial::qij(8, 5, 6)},
      {5, "68231574", "78256134", QMonomial(8)},
  };
  o.require(tr.steps.size() == path.size(), "path length");
  for (std::size_t s = 0; s < std::min(path.size(), tr.steps.size()); ++s) {
    const auto& [i, us, ws, a] = path[s];
    const auto& st = tr.steps[s];
    o.require(st.i == i && st.next.u == P(us) && st.next.w == P(ws) && st.next.alpha == a, "step " + std::to_string(s + 1));
  }
  for (const auto& lam : partitions_of(4, 5, 3)) {
    q.lambda = lam;
    long long want = (lam == Partition{2, 1, 1} || lam == Partition{2, 2}) ? 1 : 0;
    o.require(quantum_lr(q) == want, "N at " + lam.str());
  }
  if (o.pass) o.detail = "path i = 7, 6, 5; N = 1 at (2,1,1), (2,2) and 0 elsewhere";
  return o;
}

Outcome from_sweep(const SweepResult& r) { return {r.pass, std::to_string(r.cases) + " cases" + (r.pass ? "" : ", " + r.detail)}; }

Outcome property_suites() {
  Outcome o;
  std::vector<SweepResult> rs{
      sweep_peakless_binomial(6),        sweep_relation_table(),          sweep_quantum_path(5),
      sweep_rc_decompose(500),           sweep_equivalences(100, 5),      sweep_quantum_independence(4),
      sweep_quantum_independence(5),
  };
  const char* tags[] = {"(a)", "(b)", "(c)", "(d)", "(e)", "(f)", "(f)"};
  for (std::size_t i = 0; i < rs.size(); ++i) {
    std::printf("  %s %s: %s, %lld cases\n", tags[i], rs[i].name.c_str(), rs[i].pass ? "ok" : rs[i].detail.c_str(), rs[i].cases);
    o.require(rs[i].pass, std::string(tags[i]) + " " + rs[i].name);
  }
  if (o.pass) o.detail = "sub-suites (a)-(f)";
  return o;
}

std::set<std::string> names(const LabeledPoset& p) {
  std::set<std::string> s;
  for (const auto& x : p.elements) s.insert(x.str());
  return s;
}

std::set<std::string> names(const std::vector<QElement>& xs) {
  std::set<std::string> s;
  for (const auto& x : xs) s.insert(x.str());
  return s;
}

Outcome figures() {
  Outcome o;
  auto f1l = interval_k(P("68235741"), P("68357421"), 5);
  o.require(f1l.size() == 8, "interval 1left size");
  o.require(f1l.label_multiset() == std::multiset<int>{2, 2, 2, 3, 3, 4, 4, 5, 5, 5}, "interval 1left labels");
  o.require(names(f1l) == std::set<std::string>{"68235741", "68237541", "68245731", "68247531", "68257431", "68345721",
                                                "68347521", "68357421"},
            "interval 1left nodes");
  auto f1r = interval_k(P("3217465"), P("6274135"), 3);
  o.require(f1r.size() == 12, "interval 1right size");
  o.require(f1r.label_multiset() == std::multiset<int>{1, 1, 1, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 6, 6}, "interval 1right labels");
  o.require(names(f1r) == std::set<std::string>{"3217465", "3247165", "3267145", "3276145", "4217365", "4237165", "4267135",
                                                "4276135", "6217345", "6237145", "6247135", "6274135"},
            "interval 1right nodes");

  QElement base(P("1432"));
  o.require(names(q_rank_shell(base, 2, 1)) == std::set<std::string>{"2431", "3412", "q^(0,1,0) 1342", "q^(0,1,1) 1234"}, "levels above 1432, level 1");
  o.require(names(q_rank_shell(base, 2, 2)) == std::set<std::string>{"3421", "q^(0,1,0) 1432", "q^(0,1,0) 2341", "q^(0,1,0) 3142",
                                                                     "q^(0,1,1) 1324", "q^(0,1,1) 2134"},
            "levels above 1432, level 2");

  auto f5l = q_interval(P("53421"), Q("q_{1,5}q_{2,4} 12354"), 2);
  o.require(f5l.size() == 8, "interval 5left size");
  o.require(names(f5l) == std::set<std::string>{"53421", "54321", "q^(0,1,1,1) 51324", "q^(0,1,1,1) 52314", "q^(1,1,1,1) 13425",
                                                "q^(1,1,1,1) 14325", "q^(1,1,1,1) 15324", "q^(1,2,2,1) 12354"},
            "interval 5left nodes");
  auto f5r = q_interval(P("41352"), Q("q_{3,5} 52134"), 3);
  o.require(f5r.size() == 10, "interval 5right size");
  o.require(names(f5r) == std::set<std::string>{"41352", "41532", "42351", "42531", "51342", "51432", "52341", "52431",
                                                "q^(0,0,1,1) 42135", "q^(0,0,1,1) 52134"},
            "interval 5right nodes");

  auto f6l = interval_k(P("68231574"), P("78256134"), 5);
  o.require(names(f6l) == std::set<std::string>{"68231574", "68235174", "68251374", "68253174", "78231564", "78235164",
                                                "78236154", "78251364", "78253164", "78256134"},
            "interval 6left nodes");
  auto f6r = q_interval(P("68235741"), Q("q_{5,8} 78251346"), 5);
  o.require(names(f6r) == std::set<std::string>{"68235741", "68237541", "68257341", "78235641", "78236541", "78256341",
                                                "q^(0,0,0,0,1,1,1) 68231547", "q^(0,0,0,0,1,1,1) 68251347",
                                                "q^(0,0,0,0,1,1,1) 78231546", "q^(0,0,0,0,1,1,1) 78251346"},
            "interval 6right nodes");
  // both intervals of the second pair are isomorphic as graded posets
  o.require(f6l.levels().size() == f6r.levels().size() && f6l.edges.size() == f6r.edges.size(), "second pair shapes");
  if (o.pass) o.detail = "node sets, level sets and label multisets";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "quantum Monk regression", q_monk},
      {2, "quantum Murnaghan-Nakayama regression", mn_example},
      {3, "Leung-Li reduction regression", q_minimal},
      {4, "classical oracle equivalence on S5", [] { return from_sweep(sweep_classical_oracle(5)); }},
      {5, "quantum triple oracle on S4 and 200 random S5", [] { return from_sweep(sweep_quantum_oracle(4, 5, 200)); }},
      {6, "property suites", property_suites},
      {7, "figure regressions", figures},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
