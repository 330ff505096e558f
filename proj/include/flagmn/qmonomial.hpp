#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flagmn/perm.hpp"

namespace flagmn {

// q^alpha for q_1..q_{n-1}.
class QMonomial {
 public:
  QMonomial() = default;
  explicit QMonomial(int n);

  static QMonomial from_exponents(const std::vector<int>& alpha);
  // q_{i,j} = q_i q_{i+1} ... q_{j-1}, i < j.
  static QMonomial qij(int n, int i, int j);
  static QMonomial unit(int n, int i);

  int n() const { return slots_ + 1; }
  int slots() const { return slots_; }
  int operator[](int i) const { return i >= 1 && i <= slots_ ? e_[i - 1] : 0; }
  int degree() const;
  bool is_one() const;
  std::vector<int> exponents() const;

  QMonomial operator*(const QMonomial& o) const;
  // Componentwise <=.
  bool divides(const QMonomial& o) const;
  // alpha - e_i; requires alpha_i > 0.
  QMonomial lowered(int i) const;
  // w0(alpha): alpha_i -> alpha_{n-i}.
  QMonomial reversed() const;
  QMonomial embed(int N) const;

  std::string str() const;  // "q^(a1,...)" or "" for 1

  friend bool operator==(const QMonomial&, const QMonomial&) = default;
  friend std::strong_ordering operator<=>(const QMonomial& a, const QMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.slots_ <=> b.slots_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxN> e_{};
  std::uint8_t slots_ = 0;
};

struct QElement {
  QMonomial q;
  Permutation w;

  QElement() = default;
  explicit QElement(Permutation p) : q(p.n()), w(p) {}
  QElement(QMonomial m, Permutation p);

  int n() const { return w.n(); }
  int rank() const { return 2 * q.degree() + w.length(); }
  std::string str() const;

  friend bool operator==(const QElement&, const QElement&) = default;
  friend std::strong_ordering operator<=>(const QElement& a, const QElement& b) {
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.w <=> b.w;
  }
  std::size_t hash() const;
};

// Accepts "w", "q^(a1,..) w", "q_{i,j} w", "q_i w" and products of q factors.
QElement parse_qelement(std::string_view text, int n = 0);

}  // namespace flagmn

template <>
struct std::hash<flagmn::QElement> {
  std::size_t operator()(const flagmn::QElement& x) const noexcept { return x.hash(); }
};
