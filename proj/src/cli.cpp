#include "flagmn/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "flagmn/operators.hpp"
#include "flagmn/qschubert.hpp"
#include "flagmn/sweeps.hpp"

#ifndef FLAGMN_FIXTURE_DIR
#define FLAGMN_FIXTURE_DIR "fixtures"
#endif

namespace flagmn::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What multiplies S_u.
struct Factor {
  enum class Kind { None, Hook, Powersum, Schur };
  Kind kind = Kind::None;
  int a = 0, b = 0, r = 0;
  Partition lambda;
};

std::pair<int, int> parse_hook(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--hook expects a,b");
  try {
    std::size_t p1 = 0, p2 = 0;
    int a = std::stoi(s.substr(0, comma), &p1), b = std::stoi(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1 || a < 1 || b < 1) throw UsageError("");
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--hook expects two positive integers a,b");
  }
}

// "s<partition>" is a Schur class, "p<r>" a power sum.
Factor parse_class(const std::string& s) {
  Factor f;
  if (s.size() < 2) throw UsageError("--class expects s<partition> or p<r>");
  std::string rest = s.substr(1);
  if (s[0] == 's') {
    if (rest.find_first_of(",()") == std::string::npos && rest.size() > 1) {
      std::string spaced;
      for (char c : rest) spaced += std::string(spaced.empty() ? "" : ",") + c;
      rest = spaced;
    }
    f.kind = Factor::Kind::Schur;
    f.lambda = parse_partition(rest);
  } else if (s[0] == 'p') {
    f.kind = Factor::Kind::Powersum;
    f.r = std::stoi(rest);
    if (f.r < 1) throw UsageError("power sum degree must be positive");
  } else {
    throw UsageError("--class expects s<partition> or p<r>");
  }
  return f;
}

// Hooks are routed to the hook rules.
void normalize(Factor& f) {
  if (f.kind == Factor::Kind::Schur && f.lambda.is_hook()) {
    f.kind = Factor::Kind::Hook;
    f.a = f.lambda.length();
    f.b = f.lambda[0];
  }
  if (f.kind == Factor::Kind::Hook) f.lambda = Partition::hook(f.a, f.b);
}

Expansion from_coefficients(const std::vector<QElement>& shell, const std::function<long long(const QElement&)>& coeff) {
  Expansion e;
  for (const auto& x : shell) e.add(x, coeff(x));
  return e;
}

Expansion schur_product(const Permutation& u, const Partition& lam, int k, bool quantum, const std::string& basis) {
  int n = u.n();
  if (!lam.fits(k, n)) throw UsageError("partition " + lam.str() + " does not fit in the k x (n-k) rectangle");
  bool hook = lam.is_hook();
  int a = hook ? lam.length() : 0, b = hook ? lam[0] : 0;
  if (basis == "ll-reduce") {
    if (quantum)
      return from_coefficients(q_rank_shell(QElement(u), k, lam.size()),
                               [&](const QElement& x) { return quantum_lr({u, x.w, x.q, lam, k}); });
    Permutation v = grassmannian(lam, k, n);
    std::vector<QElement> shell;
    for (const auto& z : k_rank_shell(u, k, lam.size())) shell.emplace_back(z);
    return from_coefficients(shell, [&](const QElement& x) { return lr_coefficient(u, v, x.w); });
  }
  if (basis == "fgp-oracle")
    return quantum ? fgp_product(u, lam, k, n) : oracle_product(u, grassmannian(lam, k, n), Ambient::ring(n));
  if (!hook) throw UsageError("basis " + basis + " needs a hook partition");
  if (basis == "chains") {
    if (quantum) throw UsageError("basis chains is classical only");
    return hook_multiply_chains(u, a, b, k, Ambient::ring(n));
  }
  return quantum ? q_hook_multiply(u, a, b, k) : hook_multiply_minimal(u, a, b, k, Ambient::ring(n));
}

Expansion powersum_product(const Permutation& u, int r, int k, bool quantum, const std::string& basis) {
  int n = u.n();
  if (basis == "hook-theorem") return quantum ? q_powersum_multiply(u, r, k) : powersum_multiply(u, r, k, Ambient::ring(n));
  // p_r(x_1..x_k) as the alternating sum of hooks; hooks outside the rectangle vanish.
  Expansion out;
  for (int a = 1; a <= std::min(r, k); ++a) {
    int b = r + 1 - a;
    if (b > n - k) continue;
    out.add(schur_product(u, Partition::hook(a, b), k, quantum, basis), a % 2 == 1 ? 1 : -1);
  }
  return out;
}

std::string word_list(const std::vector<OperatorWord>& ws) {
  std::vector<std::string> lines;
  for (const auto& w : ws) lines.push_back(w.str());
  std::sort(lines.begin(), lines.end());
  std::string s;
  for (const auto& l : lines) s += "  " + l + "\n";
  return s;
}

std::string sorted_nodes(const LabeledPoset& P) {
  std::vector<std::string> names;
  for (const auto& x : P.elements) names.push_back(x.str());
  std::sort(names.begin(), names.end());
  std::string s;
  for (const auto& x : names) s += "  " + x + "\n";
  return s;
}

std::string labels_line(const LabeledPoset& P) {
  std::string s = "labels";
  for (int l : P.label_multiset()) s += " " + std::to_string(l);
  return s + "\n";
}

std::string interval_block(const std::string& title, const LabeledPoset& P, bool with_labels) {
  std::string s = title + "\n";
  s += "nodes " + std::to_string(P.size()) + "\n" + sorted_nodes(P);
  if (with_labels) s += labels_line(P);
  return s;
}

std::string alpha_text(const QMonomial& m) { return m.is_one() ? "1" : m.str(); }

// ---------------------------------------------------------------------------

std::string reproduce_q_monk() {
  Permutation u = parse_permutation("1432");
  Expansion e;
  e.add(QElement(u), 1);
  std::string s = "S_1432 * S_(2,3) in qH*Fl_4, k=2\n";
  s += "quantum Monk:\n" + q_monk_multiply(e, 2).to_text();
  s += "fgp oracle:\n" + fgp_product(u, Partition{1}, 2, 4).to_text();
  return s;
}

std::string reproduce_mn_example() {
  Permutation u = parse_permutation("68235741");
  Expansion e = q_powersum_multiply(u, 4, 5);
  std::string s = "S_68235741 * p_4(x_1..x_5) in qH*Fl_8, k=5\n";
  for (const auto& [x, c] : e.terms())
    s += (c < 0 ? "-" : "+") + std::to_string(std::llabs(c)) + " " + x.str() + "  zeta=" +
         cycle_string(compose(x.w, u.inverse())) + "\n";
  s += "terms " + std::to_string(e.size()) + "\n";
  return s;
}

std::string reproduce_q_minimal() {
  QLRQuery q{parse_permutation("68235741"), parse_permutation("78251346"), QMonomial::qij(8, 5, 8), Partition{2, 2}, 5};
  std::string s = "Leung-Li reduction of (u,w,alpha) = (68235741, 78251346, q_{5,8}), k=5\n";
  auto tr = quantum_lr_trace(q);
  for (const auto& st : tr.steps)
    s += "i=" + std::to_string(st.i) + "  u=" + st.next.u.str() + "  w=" + st.next.w.str() + "  alpha=" + alpha_text(st.next.alpha) + "\n";
  for (const auto& lam : partitions_of(4, 5, 3)) {
    q.lambda = lam;
    s += "N lambda=" + lam.str() + " " + std::to_string(quantum_lr(q)) + "\n";
  }
  return s;
}

std::string reproduce_figures() {
  std::string s;
  auto P = [](const char* t) { return parse_permutation(t); };
  auto Q = [](const char* t) { return parse_qelement(t); };

  s += interval_block("interval [68235741, 68357421]_5", interval_k(P("68235741"), P("68357421"), 5), true);
  s += interval_block("interval [3217465, 6274135]_3", interval_k(P("3217465"), P("6274135"), 3), true);

  // Two levels above 1432 in the quantum 2-Bruhat order.
  QElement base(P("1432"));
  auto l1 = q_rank_shell(base, 2, 1), l2 = q_rank_shell(base, 2, 2);
  auto list = [](std::vector<QElement> xs) {
    std::vector<std::string> names;
    for (const auto& x : xs) names.push_back(x.str());
    std::sort(names.begin(), names.end());
    std::string t;
    for (const auto& x : names) t += "  " + x + "\n";
    return t;
  };
  s += "levels above 1432, k=2\n";
  s += "level 1: " + std::to_string(l1.size()) + "\n" + list(l1);
  s += "level 2: " + std::to_string(l2.size()) + "\n" + list(l2);
  std::vector<std::string> edges;
  for (const auto& x : l1)
    for (const auto& c : q_up_covers(x, 2)) edges.push_back(x.str() + " -> " + c.target.str() + (c.quantum ? " (quantum)" : ""));
  std::sort(edges.begin(), edges.end());
  s += "edges " + std::to_string(edges.size()) + "\n";
  for (const auto& e : edges) s += "  " + e + "\n";

  s += interval_block("interval [53421, q_{1,5}q_{2,4} 12354]_2", q_interval(P("53421"), Q("q_{1,5}q_{2,4} 12354"), 2), false);
  auto right = q_interval(P("41352"), Q("q_{3,5} 52134"), 3);
  s += interval_block("interval [41352, q_{3,5} 52134]_3", right, false);
  s += interval_block("interval [68231574, 78256134]_5", interval_k(P("68231574"), P("78256134"), 5), false);
  s += interval_block("interval [68235741, q_{5,8} 78251346]_5", q_interval(P("68235741"), Q("q_{5,8} 78251346"), 5), false);

  auto bij = chains_word_bijection(P("41352"), Q("q_{3,5} 52134"), 3);
  s += "chain words of [41352, q_{3,5} 52134]_3: " + std::to_string(bij.words.size()) + "\n" + word_list(bij.words);

  s += "transports of [41352, q_{3,5} 52134]_3\n";
  s += interval_block("cyclic shift [52413, q_{1,4}q_{3,5} 13245]_3", q_interval(P("52413"), Q("q_{1,4}q_{3,5} 13245"), 3), false);
  s += interval_block("w0 conjugate [41352, q_{1,3} 23541]_2", q_interval(P("41352"), Q("q_{1,3} 23541"), 2), false);
  s += interval_block("opposite [43125, q_{1,3} 25314]_2", q_interval(P("43125"), Q("q_{1,3} 25314"), 2), false);
  return s;
}

const std::vector<std::string> kReproducible{"q-monk", "mn-example", "q-minimal", "figures"};

// ---------------------------------------------------------------------------

struct Options {
  std::string u, target, hook, lambda, cls, format = "text", basis = "hook-theorem", word, suite = "all", fixtures;
  int n = 0, k = 0, powersum = 0, height = 0;
  bool quantum = false;
};

Permutation read_u(const Options& o) {
  if (o.u.empty()) throw UsageError("--u is required");
  return parse_permutation(o.u, o.n);
}

int read_k(const Options& o, int n) {
  if (o.k < 1 || o.k >= n) throw UsageError("--k must satisfy 1 <= k < n");
  return o.k;
}

int cmd_product(const Options& o, std::ostream& out) {
  Permutation u = read_u(o);
  int n = u.n(), k = read_k(o, n);
  Factor f;
  int given = !o.hook.empty() + (o.powersum > 0) + !o.lambda.empty() + !o.cls.empty();
  if (given != 1) throw UsageError("give exactly one of --hook, --powersum, --lambda, --class");
  if (!o.hook.empty()) {
    auto [a, b] = parse_hook(o.hook);
    f.kind = Factor::Kind::Hook;
    f.a = a;
    f.b = b;
  } else if (o.powersum > 0) {
    f.kind = Factor::Kind::Powersum;
    f.r = o.powersum;
  } else if (!o.lambda.empty()) {
    f.kind = Factor::Kind::Schur;
    f.lambda = parse_partition(o.lambda);
  } else {
    f = parse_class(o.cls);
  }
  normalize(f);
  if (o.basis == "chains" && o.quantum) throw UsageError("basis chains is classical only");
  Expansion e = f.kind == Factor::Kind::Powersum ? powersum_product(u, f.r, k, o.quantum, o.basis)
                                                 : schur_product(u, f.lambda, k, o.quantum, o.basis);
  if (o.format == "json")
    out << e.to_json();
  else if (o.format == "text")
    out << e.to_text();
  else
    throw UsageError("product supports --format text or json");
  return 0;
}

LabeledPoset build_interval(const Options& o) {
  Permutation u = read_u(o);
  int n = u.n(), k = read_k(o, n);
  if (o.target.empty()) throw UsageError("--target is required");
  QElement t = parse_qelement(o.target, n);
  if (o.quantum || !t.q.is_one()) return q_interval(u, t, k);
  return interval_k(u, t.w, k);
}

int cmd_interval(const Options& o, std::ostream& out) {
  auto P = build_interval(o);
  if (o.format == "json")
    out << P.to_json() << "\n";
  else if (o.format == "dot")
    out << P.to_dot();
  else if (P.empty())
    out << "empty interval\n";
  else
    out << P.to_text();
  return 0;
}

int cmd_chains(const Options& o, std::ostream& out) {
  auto P = build_interval(o);
  int count = 0;
  for (const auto& c : saturated_chains(P)) {
    if (o.height > 0 && !is_peakless(c.labels, o.height)) continue;
    ++count;
    out << c.str() << "  word " << chain_word(c).str() << "\n";
  }
  out << "chains " << count << "\n";
  return 0;
}

OperatorWord read_word(const Options& o) {
  if (o.word.empty()) throw UsageError("--word is required");
  return parse_word(o.word);
}

int cmd_operators(const std::string& action, const Options& o, std::ostream& out) {
  if (action == "act") {
    OperatorWord v = read_word(o);
    Permutation u = read_u(o);
    auto r = act(v, u, read_k(o, u.n()));
    out << (r ? r->str() : std::string("0")) << "\n";
  } else if (action == "classify") {
    OperatorWord v = read_word(o);
    auto wc = classify(v, o.n);
    out << "kind " << to_string(wc.kind) << "\n";
    out << "zero " << (wc.zero ? "yes" : "no") << "\n";
    if (wc.kind == WordKind::Path) out << "shape " << to_string(wc.shape) << "\n";
    out << "quantum letters " << v.quantum_count() << "\n";
    out << "minimal " << (v.is_minimal() ? "yes" : "no") << "\n";
  } else if (action == "diagram") {
    OperatorWord v = read_word(o);
    int n = std::max(o.n, v.max_index());
    out << (o.format == "dot" ? diagram_dot(v, n) : diagram_text(v, n));
  } else if (action == "relations") {
    auto rep = relation_table();
    for (const auto& c : rep.checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.clause << " " << c.word.str() << ": " << c.expectation << "\n";
    return rep.all_pass() ? 0 : 1;
  } else if (action == "decompose") {
    OperatorWord v = read_word(o);
    Permutation u = read_u(o);
    int k = read_k(o, u.n());
    if (!act(v, u, k)) throw UsageError("the word acts as zero on u");
    auto rc = rc_decompose(v, u, k);
    if (!rc) {
      out << "no row-column decomposition found\n";
      return 1;
    }
    out << "row " << rc->row.str() << "\ncolumn " << rc->column.str() << "\nshift " << rc->shift << "\n";
  } else if (action == "bijection") {
    Permutation u = read_u(o);
    int k = read_k(o, u.n());
    if (o.target.empty()) throw UsageError("--target is required");
    auto rep = chains_word_bijection(u, parse_qelement(o.target, u.n()), k);
    out << word_list(rep.words);
    out << (rep.ok ? "bijection ok" : "bijection failed: " + rep.detail) << "\n";
    return rep.ok ? 0 : 1;
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  int n = o.n > 0 ? o.n : 5;
  if (n < 3 || n > 6) throw UsageError("verify supports 3 <= n <= 6");
  std::vector<SweepResult> rs;
  const std::string& s = o.suite;
  if (s == "all")
    rs = verify_all(n);
  else if (s == "classical")
    rs.push_back(sweep_classical_oracle(n));
  else if (s == "quantum")
    rs.push_back(sweep_quantum_oracle(std::min(n, 4), n, n >= 5 ? 200 : 0));
  else if (s == "peakless")
    rs.push_back(sweep_peakless_binomial(n));
  else if (s == "relations")
    rs.push_back(sweep_relation_table());
  else if (s == "paths")
    rs.push_back(sweep_quantum_path(n));
  else if (s == "forests")
    rs.push_back(sweep_rc_decompose(500));
  else if (s == "symmetries")
    rs.push_back(sweep_equivalences(100, n));
  else if (s == "independence")
    rs.push_back(sweep_quantum_independence(n));
  else if (s == "leung-li")
    rs.push_back(sweep_ll_properties(n));
  else if (s == "x-commute")
    rs.push_back(sweep_x_commute(n));
  else if (s == "transports")
    rs.push_back(sweep_symmetry_actions(n));
  else if (s == "flattening")
    rs.push_back(sweep_shape_equivalence(100));
  else
    throw UsageError("unknown suite " + s);
  bool ok = true;
  for (const auto& r : rs) {
    out << format_result(r) << "\n";
    ok = ok && r.pass;
  }
  out << "verify " << s << ": " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

bool read_file(const std::string& path, std::string& content) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  content = ss.str();
  return true;
}

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (o.suite == "all")
    names = kReproducible;
  else if (std::find(kReproducible.begin(), kReproducible.end(), o.suite) != kReproducible.end())
    names = {o.suite};
  else
    throw UsageError("unknown example " + o.suite);
  std::string dir = o.fixtures.empty() ? fixture_dir() : o.fixtures;
  bool ok = true;
  for (const auto& name : names) {
    std::string got = reproduce_text(name), want;
    out << got;
    if (!read_file(dir + "/" + name + ".txt", want)) {
      err << "missing fixture " << name << ".txt in " << dir << "\n";
      out << "== " << name << ": FAIL (no fixture)\n";
      ok = false;
      continue;
    }
    if (got == want) {
      out << "== " << name << ": matches fixture\n";
      continue;
    }
    ok = false;
    std::istringstream gs(got), ws(want);
    std::string gl, wl;
    for (int line = 1;; ++line) {
      bool g = static_cast<bool>(std::getline(gs, gl)), w = static_cast<bool>(std::getline(ws, wl));
      if (!g && !w) break;
      if (!g || !w || gl != wl) {
        err << name << ".txt line " << line << ": expected \"" << (w ? wl : "<eof>") << "\", got \"" << (g ? gl : "<eof>") << "\"\n";
        break;
      }
    }
    out << "== " << name << ": FAIL (differs from fixture)\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("FLAGMN_FIXTURES")) return env;
  return FLAGMN_FIXTURE_DIR;
}

std::string reproduce_text(const std::string& name) {
  if (name == "q-monk") return reproduce_q_monk();
  if (name == "mn-example") return reproduce_mn_example();
  if (name == "q-minimal") return reproduce_q_minimal();
  if (name == "figures") return reproduce_figures();
  throw std::invalid_argument("unknown example " + name);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Schubert calculus on flag manifolds: products, intervals, operator words"};
  app.name("flagmn");
  app.require_subcommand(1);

  auto product = app.add_subcommand("product", "multiply S_u by a Schur, hook or power sum class");
  product->add_option("--u", o.u, "permutation (one-line or cycles)")->required();
  product->add_option("--k", o.k, "number of variables x_1..x_k")->required();
  product->add_option("--n", o.n, "ambient S_n");
  product->add_option("--hook", o.hook, "hook a,b = (b,1^(a-1))");
  product->add_option("--powersum", o.powersum, "power sum degree r");
  product->add_option("--lambda", o.lambda, "partition p1,p2,...");
  product->add_option("--class", o.cls, "s<partition> or p<r>");
  product->add_flag("--quantum", o.quantum, "quantum product");
  product->add_option("--basis", o.basis, "evaluation path")
      ->check(CLI::IsMember({"hook-theorem", "ll-reduce", "fgp-oracle", "chains", "minimal"}));
  product->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));

  auto add_interval_opts = [&](CLI::App* c) {
    c->add_option("--u", o.u, "bottom permutation")->required();
    c->add_option("--target", o.target, "top q-element")->required();
    c->add_option("--k", o.k)->required();
    c->add_option("--n", o.n, "ambient S_n");
    c->add_flag("--quantum", o.quantum, "quantum k-Bruhat order");
  };
  auto interval = app.add_subcommand("interval", "build an interval");
  add_interval_opts(interval);
  interval->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
  auto chains = app.add_subcommand("chains", "saturated chains of an interval");
  add_interval_opts(chains);
  chains->add_option("--height", o.height, "only peakless chains of this height");

  auto ops = app.add_subcommand("operators", "left operator words");
  ops->require_subcommand(1);
  std::string action;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"act", "apply a word to u"},
           {"classify", "zero/path/tree/forest classification"},
           {"diagram", "text or DOT diagram"},
           {"relations", "check the degree-two relations"},
           {"decompose", "row-column decomposition"},
           {"bijection", "chains of an interval against words"}}) {
    auto c = ops->add_subcommand(name, help);
    c->add_option("--word", o.word, "e.g. \"v(4,1) v(1,2)\"; the last letter acts first");
    c->add_option("--u", o.u);
    c->add_option("--k", o.k);
    c->add_option("--n", o.n);
    c->add_option("--target", o.target);
    c->add_option("--format", o.format)->check(CLI::IsMember({"text", "dot"}));
    c->callback([&action, name = name] { action = name; });
  }

  auto verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("suite", o.suite, "all or one suite")
      ->check(CLI::IsMember({"all", "classical", "quantum", "peakless", "relations", "paths", "forests", "symmetries",
                             "independence", "leung-li", "x-commute", "transports", "flattening"}));
  verify->add_option("--n", o.n, "group size");

  auto reproduce = app.add_subcommand("reproduce", "recompute worked examples and diff against fixtures");
  reproduce->add_option("example", o.suite)->required()->check(CLI::IsMember({"q-monk", "mn-example", "q-minimal", "figures", "all"}));
  reproduce->add_option("--fixtures", o.fixtures, "fixture directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*product) return cmd_product(o, out);
    if (*interval) return cmd_interval(o, out);
    if (*chains) return cmd_chains(o, out);
    if (*ops) return cmd_operators(action, o, out);
    if (*verify) return cmd_verify(o, out);
    if (*reproduce) return cmd_reproduce(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace flagmn::cli
