#include "flagmn/schubert.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "flagmn/kbruhat.hpp"
#include "json.hpp"

namespace flagmn {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient");
  return r;
}

long long binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = checked_mul(c, n - r + i) / i;
  return c;
}

void Expansion::add(const QElement& x, long long c) {
  if (c == 0) return;
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    terms_.emplace(x, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Expansion::add(const Expansion& other, long long scale) {
  for (const auto& [x, c] : other.terms_) add(x, checked_mul(c, scale));
}

long long Expansion::coeff(const QElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? 0 : it->second;
}

Expansion Expansion::shifted(const QMonomial& beta) const {
  Expansion e;
  for (const auto& [x, c] : terms_) e.terms_.emplace(QElement(x.q * beta, x.w), c);
  return e;
}

Expansion Expansion::restricted(int n) const {
  Expansion e;
  for (const auto& [x, c] : terms_) {
    if (x.w.support_size() > n) continue;
    e.add(QElement(x.q.embed(n), x.w.embed(n)), c);
  }
  return e;
}

int Expansion::homogeneous_rank() const {
  if (terms_.empty()) return 0;
  int r = terms_.begin()->first.rank();
  for (const auto& [x, c] : terms_)
    if (x.rank() != r) return -1;
  return r;
}

std::string Expansion::to_text() const {
  std::string s;
  for (const auto& [x, c] : terms_) s += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + " " + x.str() + "\n";
  return s;
}

std::string Expansion::to_json() const {
  nlohmann::json j;
  j["terms"] = nlohmann::json::array();
  for (const auto& [x, c] : terms_) j["terms"].push_back({{"coeff", c}, {"q", x.q.exponents()}, {"w", x.w.str()}});
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(long long c) {
  Polynomial p;
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, long long c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::x(int i) {
  if (i < 1 || i > kQSlot) throw std::out_of_range("x index out of range");
  Exponent e{};
  e[i - 1] = 1;
  return monomial(e);
}

Polynomial Polynomial::q(int i) {
  if (i < 1 || i > kSlots - kQSlot) throw std::out_of_range("q index out of range");
  Exponent e{};
  e[kQSlot + i - 1] = 1;
  return monomial(e);
}

long long Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

long long Polynomial::constant_term() const { return coeff(Exponent{}); }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Exponent& e, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e;
      for (int s = 0; s < kSlots; ++s) {
        int v = e1[s] + e2[s];
        if (v > 255) throw std::overflow_error("exponent overflow");
        e[s] = static_cast<std::uint8_t>(v);
      }
      r.add_term(e, checked_mul(c1, c2));
    }
  return r;
}

Polynomial Polynomial::scaled(long long c) const {
  Polynomial r;
  for (const auto& [e, v] : terms_) r.add_term(e, checked_mul(v, c));
  return r;
}

Polynomial Polynomial::divided_difference(int i) const {
  if (i < 1 || i + 1 > kQSlot) throw std::out_of_range("divided difference index out of range");
  int a = i - 1, b = i;
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    int p = e[a], s = e[b];
    if (p == s) continue;
    // (x^p y^s - x^s y^p)/(x - y) = sign * sum_t x^{hi-1-t} y^{lo+t}
    int hi = std::max(p, s), lo = std::min(p, s);
    long long sign = p > s ? 1 : -1;
    for (int t = 0; t < hi - lo; ++t) {
      Exponent f = e;
      f[a] = static_cast<std::uint8_t>(hi - 1 - t);
      f[b] = static_cast<std::uint8_t>(lo + t);
      r.add_term(f, checked_mul(c, sign));
    }
  }
  return r;
}

Polynomial Polynomial::swapped(int i) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[i]);
    r.add_term(f, c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    s += (c < 0 ? " - " : (s.empty() ? "" : " + "));
    long long a = c < 0 ? -c : c;
    bool unit = true;
    for (auto v : e)
      if (v) unit = false;
    if (a != 1 || unit) s += std::to_string(a);
    for (int slot = 0; slot < kSlots; ++slot) {
      if (!e[slot]) continue;
      s += slot < kQSlot ? "x" + std::to_string(slot + 1) : "q" + std::to_string(slot - kQSlot + 1);
      if (e[slot] > 1) s += "^" + std::to_string(e[slot]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

Permutation stable_form(const Permutation& w) { return w.embed(std::max(1, w.support_size())); }

Polynomial compute_schubert(const Permutation& w);

const Polynomial& schubert_cached(const Permutation& w) {
  thread_local std::unordered_map<Permutation, Polynomial> cache;
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  Polynomial p = compute_schubert(w);
  return cache.emplace(w, std::move(p)).first->second;
}

// Walk up by ascents until the code is a partition, where S_w = x^code.
Polynomial compute_schubert(const Permutation& w) {
  auto c = w.code();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] < c[i + 1]) {
      Permutation up = w.swap_positions(static_cast<int>(i) + 1, static_cast<int>(i) + 2);
      return schubert_cached(up).divided_difference(static_cast<int>(i) + 1);
    }
  }
  Exponent e{};
  for (std::size_t i = 0; i < c.size(); ++i) e[i] = static_cast<std::uint8_t>(c[i]);
  return Polynomial::monomial(e);
}

}  // namespace

const Polynomial& schubert_poly(const Permutation& w) {
  if (w.support_size() > kQSlot) throw std::out_of_range("permutation too large for the polynomial oracle");
  return schubert_cached(stable_form(w));
}

Expansion expand_in_schubert(const Polynomial& p, int N) {
  Expansion out;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    auto [e, c] = *rest.terms().begin();
    std::vector<int> code(N, 0);
    for (int s = 0; s < kSlots; ++s) {
      if (!e[s]) continue;
      if (s >= N || e[s] > N - 1 - s) throw std::domain_error("polynomial is not in the Schubert span of S_" + std::to_string(N));
      code[s] = e[s];
    }
    Permutation w = Permutation::from_code(code, N);
    out.add(QElement(w), c);
    rest -= schubert_poly(w).scaled(c);
  }
  return out;
}

long long lr_coefficient(const Permutation& y, const Permutation& v, const Permutation& z) {
  if (z.length() != y.length() + v.length()) return 0;
  Polynomial p = schubert_poly(y) * schubert_poly(v);
  Permutation w = z;
  while (!w.is_identity()) {
    int i = descents(w).front();
    p = p.divided_difference(i);
    w = w.swap_positions(i, i + 1);
    if (p.is_zero()) return 0;
  }
  return p.constant_term();
}

Expansion oracle_product(const Permutation& u, const Permutation& v, Ambient ambient) {
  Polynomial p = schubert_poly(u) * schubert_poly(v);
  int N = ambient.size;
  if (ambient.mode == Ambient::Mode::Ring) {
    // Every term lives in S_M for M large enough; truncation does the rest.
    int M = std::max({N, u.support_size() + v.support_size(), 1});
    return expand_in_schubert(p, M).restricted(N);
  }
  return expand_in_schubert(p, N);
}

// ---------------------------------------------------------------------------

namespace {

Permutation into_ambient(const Permutation& u, Ambient ambient) {
  if (ambient.mode == Ambient::Mode::Ring && u.n() > ambient.size && u.support_size() > ambient.size)
    throw std::invalid_argument("permutation does not lie in S_n");
  return u.embed(ambient.size);
}

void check_hook(int a, int b, int k, Ambient ambient) {
  if (a < 1 || b < 1) throw std::invalid_argument("hook needs a, b >= 1");
  if (k < 1 || k >= ambient.size) throw std::out_of_range("k out of range");
  if (ambient.mode == Ambient::Mode::Ring && (a > k || b > ambient.size - k))
    throw std::invalid_argument("hook does not fit in the k x (n-k) rectangle");
}

}  // namespace

Expansion monk_multiply(const Expansion& e, int k, Ambient ambient) {
  Expansion out;
  for (const auto& [x, c] : e.terms()) {
    Permutation u = into_ambient(x.w, ambient);
    QMonomial q = x.q.embed(ambient.size);
    for (const auto& cov : up_covers_k(u, k)) out.add(QElement(q, cov.target.w), c);
  }
  return out;
}

Expansion hook_multiply_chains(const Permutation& u0, int a, int b, int k, Ambient ambient) {
  check_hook(a, b, k, ambient);
  Permutation u = into_ambient(u0, ambient);
  int r = a + b - 1;
  Expansion out;
  std::vector<int> labels;
  std::function<void(const Permutation&)> dfs = [&](const Permutation& x) {
    int t = static_cast<int>(labels.size());
    if (t == r) {
      out.add(QElement(x), 1);
      return;
    }
    for (const auto& c : up_covers_k(x, k)) {
      // positions 1..a strictly decrease, positions a..r strictly increase
      if (t > 0 && t < a && !(labels[t - 1] > c.label)) continue;
      if (t >= a && !(labels[t - 1] < c.label)) continue;
      labels.push_back(c.label);
      dfs(c.target.w);
      labels.pop_back();
    }
  };
  dfs(u);
  return out;
}

std::vector<Permutation> k_rank_shell(const Permutation& u, int k, int r) {
  std::set<Permutation> level{u};
  for (int step = 0; step < r; ++step) {
    std::set<Permutation> next;
    for (const auto& x : level)
      for (const auto& c : up_covers_k(x, k)) next.insert(c.target.w);
    level = std::move(next);
  }
  return std::vector<Permutation>(level.begin(), level.end());
}

Expansion hook_multiply_minimal(const Permutation& u0, int a, int b, int k, Ambient ambient) {
  check_hook(a, b, k, ambient);
  Permutation u = into_ambient(u0, ambient);
  int r = a + b - 1;
  Permutation uinv = u.inverse();
  Expansion out;
  for (const auto& w : k_rank_shell(u, k, r)) {
    auto st = stats(compose(w, uinv));
    if (static_cast<int>(st.support.size()) - st.s != r) continue;
    out.add(QElement(w), binomial(st.s - 1, st.het - a));
  }
  return out;
}

Expansion powersum_multiply(const Permutation& u0, int r, int k, Ambient ambient) {
  if (r < 1) throw std::invalid_argument("power sum degree must be positive");
  if (k < 1 || k >= ambient.size) throw std::out_of_range("k out of range");
  Permutation u = into_ambient(u0, ambient);
  Permutation uinv = u.inverse();
  Expansion out;
  for (const auto& w : k_rank_shell(u, k, r)) {
    auto st = stats(compose(w, uinv));
    if (st.s != 1 || static_cast<int>(st.support.size()) - 1 != r) continue;
    out.add(QElement(w), st.het % 2 == 1 ? 1 : -1);
  }
  return out;
}

}  // namespace flagmn
