#include "flagmn/qbruhat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "poset_build.hpp"

namespace flagmn {

namespace {

bool quantum_pair(const Permutation& u, int i, int j) {
  if (u(i) < u(j)) return false;
  for (int l = i + 1; l < j; ++l)
    if (!(u(j) < u(l) && u(l) < u(i))) return false;
  return true;
}

}  // namespace

std::optional<QCoverWitness> qcover_witness(const QElement& x, const QElement& t, int k) {
  if (x.n() != t.n()) throw std::invalid_argument("size mismatch");
  if (x.q == t.q) {
    if (auto c = cover_witness_k(x.w, t.w, k)) return QCoverWitness{c->first, c->second, false};
    return std::nullopt;
  }
  if (!x.q.divides(t.q)) return std::nullopt;
  int n = x.n();
  std::vector<int> diff;
  for (int p = 1; p <= n; ++p)
    if (x.w(p) != t.w(p)) diff.push_back(p);
  if (diff.size() != 2) return std::nullopt;
  int i = diff[0], j = diff[1];
  if (!(i <= k && k < j)) return std::nullopt;
  if (x.q * QMonomial::qij(n, i, j) != t.q) return std::nullopt;
  if (!quantum_pair(x.w, i, j)) return std::nullopt;
  return QCoverWitness{i, j, true};
}

bool is_qcover(const QElement& x, const QElement& t, int k) { return qcover_witness(x, t, k).has_value(); }

std::vector<Cover> q_up_covers(const QElement& x, int k) {
  std::vector<Cover> out;
  for (auto& c : up_covers_k(x.w, k)) {
    c.target.q = x.q;
    out.push_back(std::move(c));
  }
  const Permutation& u = x.w;
  int n = u.n();
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 1; j <= n; ++j) {
      if (!quantum_pair(u, i, j)) continue;
      out.push_back({i, j, u(i), true, QElement(x.q * QMonomial::qij(n, i, j), u.swap_positions(i, j))});
    }
  }
  return out;
}

LabeledPoset q_interval(const QElement& u, const QElement& t, int k) {
  if (u.n() != t.n()) throw std::invalid_argument("size mismatch");
  return detail::build_interval(
      u, t, k, [k](const QElement& x) { return q_up_covers(x, k); },
      [&t](const QElement& x) { return x.q.divides(t.q); });
}

bool q_leq(const QElement& x, const QElement& t, int k) {
  if (x == t) return true;
  return !q_interval(x, t, k).empty();
}

bool is_minimal_interval(const Permutation& u, const QElement& t, int k) {
  if (!q_leq(QElement(u), t, k)) throw std::invalid_argument("is_minimal_interval: endpoints are not comparable");
  auto st = stats(compose(t.w, u.inverse()));
  return t.rank() - u.length() == static_cast<int>(st.support.size()) - st.s;
}

std::vector<Chain> q_chains(const QElement& u, const QElement& t, int k) { return saturated_chains(q_interval(u, t, k)); }

std::vector<QElement> q_rank_shell(const QElement& x, int k, int r) {
  std::set<QElement> level{x};
  for (int step = 0; step < r; ++step) {
    std::set<QElement> next;
    for (const auto& y : level)
      for (auto& c : q_up_covers(y, k)) next.insert(std::move(c.target));
    level = std::move(next);
  }
  return std::vector<QElement>(level.begin(), level.end());
}

}  // namespace flagmn
