#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagmn/qbruhat.hpp"

namespace flagmn {

struct Letter {
  int a = 0;
  int b = 0;

  bool quantum() const { return a > b; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// v_{a_r b_r} ... v_{a_1 b_1}; letters are stored as written, so the last one acts first.
class OperatorWord {
 public:
  std::vector<Letter> letters;

  OperatorWord() = default;
  explicit OperatorWord(std::vector<Letter> written);
  static OperatorWord from_application_order(std::vector<Letter> applied);

  std::vector<Letter> application_order() const;
  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  std::vector<int> support() const;
  int max_index() const;
  int quantum_count() const;
  // (a_r,b_r)...(a_1,b_1) in S_n
  Permutation zeta(int n) const;
  bool is_minimal() const;

  // this acts after `first`
  OperatorWord then_after(const OperatorWord& first) const;

  std::string str() const;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
  friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;
};

OperatorWord parse_word(std::string_view text);

std::optional<QElement> act_letter(const Letter& l, const QElement& x, int k);
std::optional<QElement> act(const OperatorWord& v, const QElement& x, int k);
inline std::optional<QElement> act(const OperatorWord& v, const Permutation& u, int k) { return act(v, QElement(u), k); }

bool is_zero_word(const OperatorWord& v);
// Both nonzero with equal results at (u,k).
bool equivalent_at(const OperatorWord& v, const OperatorWord& w, const Permutation& u, int k);

OperatorWord oshift_word(const OperatorWord& v, int n, int r = 1);
OperatorWord w0_word(const OperatorWord& v, int n);
OperatorWord rho_word(const OperatorWord& v);
OperatorWord tau_word(const OperatorWord& v, int s);
OperatorWord iota_word(const OperatorWord& v, int s);
OperatorWord flatten_word(const OperatorWord& v);

struct WordGraph {
  std::vector<int> vertices;
  std::vector<std::vector<int>> components;  // vertex sets
  std::vector<std::vector<Letter>> component_letters;  // in application order
  bool multi_edge = false;
  bool acyclic = false;
  int max_degree = 0;
};

WordGraph word_graph(const OperatorWord& v);

bool is_classical_row(const OperatorWord& v);
bool is_classical_column(const OperatorWord& v);
// Smallest r with o^r(v) a classical row (column), if any.
std::optional<int> row_shift(const OperatorWord& v, int n);
std::optional<int> column_shift(const OperatorWord& v, int n);

enum class WordKind { Zero, Path, Tree, Forest, Crossing, Other };
enum class PathShape { None, Row, Column, Single, Both };

struct WordClass {
  WordKind kind = WordKind::Other;
  bool zero = false;
  bool graph_path = false;
  bool graph_tree = false;
  bool graph_forest = false;
  bool graph_crossing = false;
  PathShape shape = PathShape::None;
};

// Ambient n defaults to the largest index in the word.
WordClass classify(const OperatorWord& v, int n = 0);
std::string to_string(WordKind k);
std::string to_string(PathShape s);

// Word read off a saturated chain: the letter of a cover at positions i<j is (x(i), x(j)).
OperatorWord chain_word(const Chain& c);

struct RCDecomposition {
  OperatorWord row;     // acts second
  OperatorWord column;  // acts first
  int shift = 0;
  OperatorWord word;    // row then_after column
};

std::optional<RCDecomposition> rc_decompose(const OperatorWord& v, const Permutation& u, int k);

struct BijectionReport {
  bool ok = false;
  std::vector<OperatorWord> words;
  std::string detail;
};

BijectionReport chains_word_bijection(const Permutation& u, const QElement& t, int k);

struct RelationCheck {
  std::string clause;
  OperatorWord word;
  std::string expectation;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
  int count(const std::string& clause) const;
};

RelationReport relation_table();

// Text diagram: one line per letter, first applied at the bottom.
std::string diagram_text(const OperatorWord& v, int n);
std::string diagram_dot(const OperatorWord& v, int n);
// Open unit intervals (i,i+1) covered by every quantum letter and no classical one.
std::vector<int> yellow_window(const OperatorWord& v, int n);

}  // namespace flagmn
