#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "flagmn/perm.hpp"
#include "flagmn/qmonomial.hpp"

namespace flagmn {

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
long long binomial(int n, int r);

// Z-linear combination of q^alpha S_w, kept free of zero coefficients.
class Expansion {
 public:
  using Map = std::map<QElement, long long>;

  Expansion() = default;

  void add(const QElement& x, long long c);
  void add(const Expansion& other, long long scale = 1);
  long long coeff(const QElement& x) const;
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  // Multiply every term by q^beta.
  Expansion shifted(const QMonomial& beta) const;
  Expansion restricted(int n) const;  // drop terms outside S_n
  // All terms share this rank, or -1 when mixed; 0 for the empty expansion.
  int homogeneous_rank() const;

  std::string to_text() const;
  std::string to_json() const;

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  Map terms_;
};

struct Ambient {
  enum class Mode { Ring, Polynomial };
  Mode mode = Mode::Ring;
  int size = 0;

  static Ambient ring(int n) { return {Mode::Ring, n}; }
  static Ambient polynomial(int N) { return {Mode::Polynomial, N}; }
};

// Exponent vectors; the quantum oracle keeps x_i in slot i-1 and q_i in slot kQSlot+i-1.
constexpr int kSlots = 32;
constexpr int kQSlot = 16;
using Exponent = std::array<std::uint8_t, kSlots>;

class Polynomial {
 public:
  using Map = std::map<Exponent, long long>;

  Polynomial() = default;
  static Polynomial constant(long long c);
  static Polynomial monomial(const Exponent& e, long long c = 1);
  static Polynomial x(int i);
  static Polynomial q(int i);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long coeff(const Exponent& e) const;
  long long constant_term() const;
  int degree() const;  // -1 for zero

  void add_term(const Exponent& e, long long c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(long long c) const;

  // Divided difference in x_i, x_{i+1}.
  Polynomial divided_difference(int i) const;
  // Swap x_i and x_{i+1}.
  Polynomial swapped(int i) const;

  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Map terms_;
};

// Schubert polynomial of w; depends only on w up to the stable embedding.
const Polynomial& schubert_poly(const Permutation& w);
// Greedy expansion over S_N by leading code monomials; throws std::domain_error
// when the residual leaves the span of {S_w : w in S_N}.
Expansion expand_in_schubert(const Polynomial& p, int N);
// c^z_{y,v} via divided differences applied to S_y S_v.
long long lr_coefficient(const Permutation& y, const Permutation& v, const Permutation& z);
// Expansion of S_u * S_v as polynomials, then truncated to S_n in ring mode.
Expansion oracle_product(const Permutation& u, const Permutation& v, Ambient ambient);

Expansion monk_multiply(const Expansion& e, int k, Ambient ambient);
Expansion hook_multiply_chains(const Permutation& u, int a, int b, int k, Ambient ambient);
Expansion hook_multiply_minimal(const Permutation& u, int a, int b, int k, Ambient ambient);
Expansion powersum_multiply(const Permutation& u, int r, int k, Ambient ambient);

// Elements x with u <=_k x at rank l(u)+r.
std::vector<Permutation> k_rank_shell(const Permutation& u, int k, int r);

}  // namespace flagmn
