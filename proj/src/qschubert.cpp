#include "flagmn/qschubert.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <stdexcept>

namespace flagmn {

Expansion q_monk_multiply(const Expansion& e, int k) {
  Expansion out;
  for (const auto& [x, c] : e.terms())
    for (const auto& cov : q_up_covers(x, k)) out.add(cov.target, c);
  return out;
}

namespace {

void check_qhook(const Permutation& u, int a, int b, int k) {
  int n = u.n();
  if (a < 1 || b < 1) throw std::invalid_argument("hook needs a, b >= 1");
  if (k < 1 || k >= n) throw std::out_of_range("k out of range");
  if (a > k || b > n - k) throw std::invalid_argument("hook does not fit in the k x (n-k) rectangle");
}

}  // namespace

Expansion q_hook_multiply(const Permutation& u, int a, int b, int k) {
  check_qhook(u, a, b, k);
  int r = a + b - 1;
  Permutation uinv = u.inverse();
  Expansion out;
  for (const auto& t : q_rank_shell(QElement(u), k, r)) {
    auto st = stats(compose(t.w, uinv));
    if (static_cast<int>(st.support.size()) - st.s != r) continue;
    out.add(t, binomial(st.s - 1, st.het - a));
  }
  return out;
}

Expansion q_powersum_multiply(const Permutation& u, int r, int k) {
  if (r < 1) throw std::invalid_argument("power sum degree must be positive");
  if (k < 1 || k >= u.n()) throw std::out_of_range("k out of range");
  Permutation uinv = u.inverse();
  Expansion out;
  for (const auto& t : q_rank_shell(QElement(u), k, r)) {
    auto st = stats(compose(t.w, uinv));
    if (st.s != 1 || static_cast<int>(st.support.size()) - 1 != r) continue;
    out.add(t, st.het % 2 == 1 ? 1 : -1);
  }
  return out;
}

int varpi(const QMonomial& alpha, int i) {
  if (i < 1 || i > alpha.slots()) throw std::out_of_range("varpi index out of range");
  return -alpha[i - 1] + 2 * alpha[i] - alpha[i + 1];
}

std::optional<LLStep> ll_reduce_step(const QLRQuery& q, StepChoice choice) {
  if (q.alpha.is_one()) throw std::invalid_argument("ll_reduce_step needs a nonzero q-degree");
  int n = q.u.n();
  std::optional<LLStep> found;
  for (int i = 1; i < n; ++i) {
    if (descent_sign(q.u, i) != 1 || descent_sign(q.w, i) != 0) continue;
    int v = varpi(q.alpha, i);
    if (!((v == 1 && i != q.k) || (v == 2 && i == q.k))) continue;
    LLStep s;
    s.i = i;
    s.next = q;
    s.next.u = q.u.swap_positions(i, i + 1);
    s.next.w = q.w.swap_positions(i, i + 1);
    s.next.alpha = q.alpha.lowered(i);
    found = s;
    if (choice == StepChoice::Smallest) break;
  }
  return found;
}

LLTrace quantum_lr_trace(const QLRQuery& q0, StepChoice choice) {
  LLTrace tr;
  QLRQuery q = q0;
  while (!q.alpha.is_one()) {
    auto s = ll_reduce_step(q, choice);
    if (!s) {
      tr.zero = true;
      return tr;
    }
    tr.steps.push_back(*s);
    q = s->next;
  }
  tr.value = lr_coefficient(q.u, grassmannian(q.lambda, q.k, q.u.n()), q.w);
  return tr;
}

long long quantum_lr(const QLRQuery& q, StepChoice choice) { return quantum_lr_trace(q, choice).value; }

SignedQMonomial SignedQMonomial::qij(int n, int i, int j) {
  SignedQMonomial m = one(n);
  int sign = i < j ? 1 : -1;
  for (int l = std::min(i, j); l < std::max(i, j); ++l) m.e[l - 1] += sign;
  return m;
}

SignedQMonomial SignedQMonomial::from(const QMonomial& q) { return {q.exponents()}; }

SignedQMonomial SignedQMonomial::operator*(const SignedQMonomial& o) const {
  if (e.size() != o.e.size()) throw std::invalid_argument("monomial size mismatch");
  SignedQMonomial m = *this;
  for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
  return m;
}

bool SignedQMonomial::is_polynomial() const {
  for (int v : e)
    if (v < 0) return false;
  return true;
}

QMonomial SignedQMonomial::to_qmonomial() const {
  if (!is_polynomial()) throw std::domain_error("Laurent monomial has negative exponents");
  return QMonomial::from_exponents(e);
}

SignedQMonomial o_shift_monomial(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("size mismatch");
  int n = u.n();
  return SignedQMonomial::qij(n, w.inverse()(n), u.inverse()(n));
}

// ---------------------------------------------------------------------------

namespace {

template <class Rec>
const Polynomial& memo_ij(std::map<std::pair<int, int>, Polynomial>& memo, int i, int j, Rec rec) {
  auto key = std::make_pair(i, j);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Polynomial p = rec(i, j);
  return memo.emplace(key, std::move(p)).first->second;
}

}  // namespace

Polynomial elementary(int i, int j) {
  thread_local std::map<std::pair<int, int>, Polynomial> memo;
  if (i < 0 || i > j || j < 0) return Polynomial();
  if (i == 0) return Polynomial::constant(1);
  return memo_ij(memo, i, j, [](int a, int b) { return elementary(a, b - 1) + Polynomial::x(b) * elementary(a - 1, b - 1); });
}

Polynomial quantum_elementary(int i, int j) {
  thread_local std::map<std::pair<int, int>, Polynomial> memo;
  if (i < 0 || i > j || j < 0) return Polynomial();
  if (i == 0) return Polynomial::constant(1);
  return memo_ij(memo, i, j, [](int a, int b) {
    Polynomial p = quantum_elementary(a, b - 1) + Polynomial::x(b) * quantum_elementary(a - 1, b - 1);
    if (b >= 2) p += Polynomial::q(b - 1) * quantum_elementary(a - 2, b - 2);
    return p;
  });
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

void enumerate_bounded(int n, const std::function<int(int)>& bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur(n - 1, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n - 1) {
      f(cur);
      return;
    }
    for (int v = 0; v <= bound(j + 1); ++v) {
      cur[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
}

// Quantization of each standard monomial x^a (a_m <= n-m) for fixed n.
std::map<Exponent, Polynomial> build_quantized_monomials(int n) {
  std::map<int, std::vector<std::vector<int>>> basis_by_degree;
  enumerate_bounded(n, [](int j) { return j; }, [&](const std::vector<int>& I) {
    int d = 0;
    for (int v : I) d += v;
    basis_by_degree[d].push_back(I);
  });
  std::map<int, std::vector<Exponent>> monos_by_degree;
  enumerate_bounded(n, [n](int m) { return n - m; }, [&](const std::vector<int>& a) {
    Exponent e{};
    int d = 0;
    for (std::size_t m = 0; m < a.size(); ++m) {
      e[m] = static_cast<std::uint8_t>(a[m]);
      d += a[m];
    }
    monos_by_degree[d].push_back(e);
  });

  std::map<Exponent, Polynomial> out;
  for (auto& [d, basis] : basis_by_degree) {
    auto& monos = monos_by_degree[d];
    int s = static_cast<int>(basis.size());
    if (static_cast<int>(monos.size()) != s) throw std::logic_error("elementary basis size mismatch");
    std::map<Exponent, int> row;
    for (int r = 0; r < s; ++r) row[monos[r]] = r;
    // Augmented [M | I], M[row][col] = coefficient of monomial row in basis element col.
    std::vector<std::vector<Rational>> A(s, std::vector<Rational>(2 * s, Rational(0)));
    std::vector<Polynomial> qbasis;
    for (int c = 0; c < s; ++c) {
      Polynomial b = Polynomial::constant(1), qb = Polynomial::constant(1);
      for (std::size_t j = 0; j < basis[c].size(); ++j) {
        b = b * elementary(basis[c][j], static_cast<int>(j) + 1);
        qb = qb * quantum_elementary(basis[c][j], static_cast<int>(j) + 1);
      }
      for (const auto& [e, v] : b.terms()) A[row.at(e)][c] = v;
      qbasis.push_back(std::move(qb));
    }
    for (int r = 0; r < s; ++r) A[r][s + r] = 1;
    for (int c = 0; c < s; ++c) {
      int piv = c;
      while (piv < s && A[piv][c] == 0) ++piv;
      if (piv == s) throw std::logic_error("elementary monomials are not a basis");
      std::swap(A[piv], A[c]);
      Rational inv = 1 / A[c][c];
      for (auto& v : A[c]) v *= inv;
      for (int r = 0; r < s; ++r) {
        if (r == c || A[r][c] == 0) continue;
        Rational f = A[r][c];
        for (int t = 0; t < 2 * s; ++t) A[r][t] -= f * A[c][t];
      }
    }
    // Column r of the inverse gives x^{monos[r]} in the basis.
    for (int r = 0; r < s; ++r) {
      Polynomial qp;
      for (int c = 0; c < s; ++c) {
        const Rational& v = A[c][s + r];
        if (v == 0) continue;
        if (denominator(v) != 1) throw std::logic_error("non-integral change of basis");
        qp += qbasis[c].scaled(static_cast<long long>(numerator(v)));
      }
      out.emplace(monos[r], std::move(qp));
    }
  }
  return out;
}

const std::map<Exponent, Polynomial>& quantized_monomials(int n) {
  thread_local std::map<int, std::map<Exponent, Polynomial>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, build_quantized_monomials(n)).first->second;
}

}  // namespace

Polynomial quantize(const Polynomial& p, int n) {
  if (n < 1 || n > kQSlot) throw std::out_of_range("quantize: n out of range");
  const auto& table = quantized_monomials(n);
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    for (int s = kQSlot; s < kSlots; ++s)
      if (e[s]) throw std::domain_error("quantize expects a polynomial in x only");
    auto it = table.find(e);
    if (it == table.end()) throw std::domain_error("polynomial lies outside the elementary-monomial span");
    out += it->second.scaled(c);
  }
  return out;
}

Expansion x_operator(const Expansion& e, int m) {
  Expansion out;
  if (e.empty()) return out;
  int n = e.terms().begin()->first.n();
  if (m < 1 || m > n) throw std::out_of_range("x_operator: index out of range");
  // x_1 + ... + x_n vanishes, so x_n is minus the Monk class at n-1.
  if (m < n) out = q_monk_multiply(e, m);
  if (m > 1) out.add(q_monk_multiply(e, m - 1), -1);
  return out;
}

Expansion fgp_product(const Permutation& u, const Partition& lambda, int k, int n) {
  Permutation uu = u.embed(n);
  Polynomial P = quantize(schubert_poly(grassmannian(lambda, k, n)), n);
  std::map<Exponent, Expansion> memo;
  std::function<const Expansion&(const Exponent&)> apply = [&](const Exponent& g) -> const Expansion& {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    int m = -1;
    for (int s = 0; s < kQSlot; ++s)
      if (g[s]) m = s;
    Expansion r;
    if (m < 0) {
      r.add(QElement(uu), 1);
    } else {
      Exponent h = g;
      --h[m];
      r = x_operator(apply(h), m + 1);
    }
    return memo.emplace(g, std::move(r)).first->second;
  };
  Expansion out;
  for (const auto& [e, c] : P.terms()) {
    Exponent g{};
    std::vector<int> beta(n - 1, 0);
    for (int s = 0; s < kQSlot; ++s) g[s] = e[s];
    for (int i = 0; i < n - 1; ++i) beta[i] = e[kQSlot + i];
    out.add(apply(g).shifted(QMonomial::from_exponents(beta)), c);
  }
  return out;
}

}  // namespace flagmn
