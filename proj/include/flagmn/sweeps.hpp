#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flagmn {

struct SweepResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail;  // first failure, or a short summary
  double seconds = 0;
};

// FLAGMN_THREADS, else hardware concurrency.
int thread_count();
// Runs body(i) for i in [0,count); results are indexed, so the reduce is deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Hook products by chains, by minimal permutations and by the polynomial oracle, all u in S_n.
SweepResult sweep_classical_oracle(int n);
// q_hook_multiply = fgp_product = quantum_lr on all of S_full and `samples` random u in S_sampled.
SweepResult sweep_quantum_oracle(int full, int sampled, int samples, std::uint64_t seed = 1);
// Peakless chain counts on witness intervals against the binomial, every zeta in S_n.
SweepResult sweep_peakless_binomial(int n);
SweepResult sweep_relation_table();
// Nonzero path words with support <= max_support: at most one quantum letter, row xor column.
SweepResult sweep_quantum_path(int max_support);
SweepResult sweep_rc_decompose(int count, std::uint64_t seed = 2);
// Explicit isomorphisms between an interval and its three transports.
SweepResult sweep_equivalences(int count, int n, std::uint64_t seed = 3);
SweepResult sweep_quantum_independence(int n);
// Leung-Li filter inequality, positivity of varpi, and choice independence of the reduction.
SweepResult sweep_ll_properties(int n);
SweepResult sweep_x_commute(int n);
// Action transports under the cyclic shift, w0 and rho for all nonzero short words.
SweepResult sweep_symmetry_actions(int n);
SweepResult sweep_shape_equivalence(int samples, std::uint64_t seed = 4);

std::vector<SweepResult> verify_all(int n);

std::string format_result(const SweepResult& r);

}  // namespace flagmn
