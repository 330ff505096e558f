#pragma once

#include <optional>
#include <vector>

#include "flagmn/qbruhat.hpp"
#include "flagmn/schubert.hpp"

namespace flagmn {

Expansion q_monk_multiply(const Expansion& e, int k);
Expansion q_hook_multiply(const Permutation& u, int a, int b, int k);
Expansion q_powersum_multiply(const Permutation& u, int r, int k);

struct QLRQuery {
  Permutation u;
  Permutation w;
  QMonomial alpha;
  Partition lambda;
  int k = 0;
};

int varpi(const QMonomial& alpha, int i);

enum class StepChoice { Smallest, Largest };

struct LLStep {
  int i = 0;
  QLRQuery next;
};

// nullopt is the Zero verdict.
std::optional<LLStep> ll_reduce_step(const QLRQuery& q, StepChoice choice = StepChoice::Smallest);

struct LLTrace {
  std::vector<LLStep> steps;
  bool zero = false;
  long long value = 0;
};

LLTrace quantum_lr_trace(const QLRQuery& q, StepChoice choice = StepChoice::Smallest);
long long quantum_lr(const QLRQuery& q, StepChoice choice = StepChoice::Smallest);

// Laurent monomial in q_1..q_{n-1}.
struct SignedQMonomial {
  std::vector<int> e;

  static SignedQMonomial one(int n) { return {std::vector<int>(n - 1, 0)}; }
  static SignedQMonomial qij(int n, int i, int j);
  static SignedQMonomial from(const QMonomial& m);

  SignedQMonomial operator*(const SignedQMonomial& o) const;
  bool is_polynomial() const;
  QMonomial to_qmonomial() const;

  friend bool operator==(const SignedQMonomial&, const SignedQMonomial&) = default;
};

SignedQMonomial o_shift_monomial(const Permutation& u, const Permutation& w);

// Elementary polynomial e_i(x_1..x_j) and its quantum deformation.
Polynomial elementary(int i, int j);
Polynomial quantum_elementary(int i, int j);

Polynomial quantize(const Polynomial& p, int n);
// Multiplication by x_m realised as quantum Monk at m minus quantum Monk at m-1.
Expansion x_operator(const Expansion& e, int m);
Expansion fgp_product(const Permutation& u, const Partition& lambda, int k, int n);

}  // namespace flagmn
