#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagmn/perm.hpp"
#include "flagmn/qmonomial.hpp"

namespace flagmn {

struct Cover {
  int i = 0;
  int j = 0;
  int label = 0;
  bool quantum = false;
  QElement target;
};

struct PosetEdge {
  int from = 0;
  int to = 0;
  int label = 0;
  bool quantum = false;
};

// Hasse diagram of an interval; elements sorted by (rank, canonical order).
class LabeledPoset {
 public:
  int n = 0;
  int k = 0;
  std::vector<QElement> elements;
  std::vector<int> ranks;
  std::vector<PosetEdge> edges;

  bool empty() const { return elements.empty(); }
  std::size_t size() const { return elements.size(); }
  int index_of(const QElement& x) const;
  bool contains(const QElement& x) const { return index_of(x) >= 0; }
  int bottom_rank() const { return ranks.empty() ? 0 : ranks.front(); }
  int height() const { return ranks.empty() ? -1 : ranks.back() - ranks.front(); }

  std::multiset<int> label_multiset() const;
  // Elements grouped by rank above the bottom.
  std::vector<std::vector<QElement>> levels() const;

  std::string to_dot() const;
  std::string to_json() const;
  std::string to_text() const;
};

struct Chain {
  std::vector<QElement> elements;
  std::vector<int> labels;
  std::vector<bool> quantum;

  int length() const { return static_cast<int>(labels.size()); }
  const QElement& start() const { return elements.front(); }
  const QElement& end() const { return elements.back(); }
  std::string str() const;
};

// Labels l_1 > ... > l_a < ... < l_r.
bool is_peakless(const std::vector<int>& labels, int a);

std::optional<std::pair<int, int>> cover_witness_k(const Permutation& u, const Permutation& w, int k);
bool is_cover_k(const Permutation& u, const Permutation& w, int k);
std::vector<Cover> up_covers_k(const Permutation& u, int k);

// Entries at positions <= k only grow and entries after k only shrink along covers.
bool k_monotone(const Permutation& x, const Permutation& w, int k);
bool leq_k(const Permutation& u, const Permutation& w, int k);

LabeledPoset interval_k(const Permutation& u, const Permutation& w, int k);

// All saturated chains bottom to top.
std::vector<Chain> saturated_chains(const LabeledPoset& P);
std::vector<Chain> peakless_chains(const Permutation& u, const Permutation& w, int k, int a);

struct Witness {
  Permutation u;
  int k = 0;
  int rank = 0;
};

std::optional<Witness> find_witness(const Permutation& zeta);
// rank of [e, zeta] via a witness interval
int grassmannian_rank(const Permutation& zeta);
bool is_minimal(const Permutation& zeta);

bool crossing_pairs(int l1, int m1, int l2, int m2);
bool crossing(const std::vector<int>& A, const std::vector<int>& B);
std::vector<Permutation> noncrossing_factor(const Permutation& zeta);

}  // namespace flagmn
