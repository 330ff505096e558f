#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace flagmn {

constexpr int kMaxN = 16;

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity of S_n

  static Permutation from_one_line(const std::vector<int>& image);
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n);
  static Permutation from_code(const std::vector<int>& code, int n);
  static Permutation transposition(int n, int a, int b);
  static Permutation simple(int n, int i);
  static Permutation longest(int n);
  static Permutation cyclic_shift(int n);

  int n() const { return n_; }
  int operator()(int i) const { return img_[i - 1]; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  Permutation embed(int N) const;
  // u(i,j): swap the entries in positions i and j.
  Permutation swap_positions(int i, int j) const;
  // Smallest m such that u fixes every point above m.
  int support_size() const;

  int length() const;
  std::vector<int> code() const;
  bool is_identity() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.img_ <=> b.img_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxN> img_{};
  std::uint8_t n_ = 0;
};

Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

struct CycleStats {
  std::vector<std::vector<int>> cycles;  // nontrivial cycles, each starting at its minimum
  std::vector<int> support;
  int s = 0;
  int het = 0;
};

CycleStats stats(const Permutation& z);
int height(const Permutation& z);
int descent_sign(const Permutation& u, int i);
std::vector<int> descents(const Permutation& u);

std::vector<int> flatten(const std::vector<int>& seq);
// u/r: delete position r and flatten.
Permutation delete_position(const Permutation& u, int r);
// epsilon_{r,s}(v): the u in S_{n+1} with u(r) = s and u/r = v.
Permutation insert_at(const Permutation& v, int r, int s);
int tau(int s, int j);
int iota(int s, int j);

// Cyclic shift o^r u = compose(o^r, u).
Permutation oshift(const Permutation& u, int r = 1);

Permutation parse_permutation(std::string_view text, int n = 0);
std::string to_string(const Permutation& u);
std::string cycle_string(const Permutation& u);

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);

  static Partition hook(int a, int b);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return i < length() ? parts[i] : 0; }
  bool empty() const { return parts.empty(); }
  bool is_hook() const;
  bool fits(int k, int n) const;  // contained in R_{k,n-k}
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition parse_partition(std::string_view text);
std::vector<Partition> partitions_of(int m, int max_parts, int max_part);

Permutation grassmannian(const Partition& lambda, int k, int n);
Partition grassmannian_shape(const Permutation& v, int k);

// All permutations of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace flagmn

template <>
struct std::hash<flagmn::Permutation> {
  std::size_t operator()(const flagmn::Permutation& p) const noexcept { return p.hash(); }
};
