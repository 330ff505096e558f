#pragma once

#include <optional>
#include <vector>

#include "flagmn/kbruhat.hpp"
#include "flagmn/qmonomial.hpp"

namespace flagmn {

struct QCoverWitness {
  int i = 0;
  int j = 0;
  bool quantum = false;
};

std::optional<QCoverWitness> qcover_witness(const QElement& x, const QElement& t, int k);
bool is_qcover(const QElement& x, const QElement& t, int k);
std::vector<Cover> q_up_covers(const QElement& x, int k);

bool q_leq(const QElement& x, const QElement& t, int k);

LabeledPoset q_interval(const QElement& u, const QElement& t, int k);
inline LabeledPoset q_interval(const Permutation& u, const QElement& t, int k) { return q_interval(QElement(u), t, k); }

bool is_minimal_interval(const Permutation& u, const QElement& t, int k);
std::vector<Chain> q_chains(const QElement& u, const QElement& t, int k);

// Elements reachable from x by exactly r up-covers.
std::vector<QElement> q_rank_shell(const QElement& x, int k, int r);

}  // namespace flagmn
