#include "flagmn/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagmn {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("permutation size out of range: " + std::to_string(n));
}

std::vector<int> parse_ints(std::string_view body) {
  std::vector<int> out;
  bool has_comma = body.find(',') != std::string_view::npos;
  if (has_comma) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t end = body.find(',', pos);
      if (end == std::string_view::npos) end = body.size();
      std::string_view tok = body.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
      out.push_back(v);
      pos = end + 1;
    }
  } else {
    for (char c : body) {
      if (c == ' ') continue;
      if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad digit '") + c + "'");
      out.push_back(c - '0');
    }
  }
  return out;
}

}  // namespace

Permutation::Permutation(int n) {
  check_size(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i + 1);
}

Permutation Permutation::from_one_line(const std::vector<int>& image) {
  int n = static_cast<int>(image.size());
  check_size(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxN + 1> seen{};
  for (int i = 0; i < n; ++i) {
    int v = image[i];
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of [n]");
    seen[v] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      int a = c[t];
      int b = c[(t + 1) % c.size()];
      if (a < 1 || a > n || used[a]) throw std::invalid_argument("cycles are not disjoint or out of range");
      used[a] = true;
      img[a - 1] = b;
    }
  }
  return from_one_line(img);
}

Permutation Permutation::from_code(const std::vector<int>& code, int n) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> img;
  for (int i = 0; i < n; ++i) {
    int c = i < static_cast<int>(code.size()) ? code[i] : 0;
    if (c < 0 || c >= static_cast<int>(avail.size())) throw std::invalid_argument("not a Lehmer code for S_n");
    img.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  return from_one_line(img);
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  if (a < 1 || b < 1 || a > n || b > n) throw std::out_of_range("transposition entry out of range");
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::longest(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(n - i);
  return p;
}

Permutation Permutation::cyclic_shift(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1 == n ? 1 : i + 2);
  return p;
}

std::vector<int> Permutation::one_line() const { return std::vector<int>(img_.begin(), img_.begin() + n_); }

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::embed(int N) const {
  if (N < n_) {
    if (support_size() > N) throw std::invalid_argument("permutation does not lie in the smaller group");
  }
  check_size(N);
  Permutation p(N);
  for (int i = 0; i < std::min<int>(N, n_); ++i) p.img_[i] = img_[i];
  return p;
}

Permutation Permutation::swap_positions(int i, int j) const {
  Permutation p = *this;
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

int Permutation::support_size() const {
  int m = n_;
  while (m > 0 && img_[m - 1] == m) --m;
  return m;
}

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[i] > img_[j]) ++l;
  return l;
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[j] < img_[i]) ++c[i];
  return c;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::string Permutation::str() const { return to_string(*this); }

std::size_t Permutation::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 31 + img_[i];
  return h;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(a.n());
  for (int i = 1; i <= a.n(); ++i) img[i - 1] = a(b(i));
  return Permutation::from_one_line(img);
}

CycleStats stats(const Permutation& z) {
  CycleStats st;
  int n = z.n();
  std::vector<bool> seen(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (z(i) > i) ++st.het;
    if (z(i) != i) st.support.push_back(i);
    if (seen[i] || z(i) == i) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = z(j)) {
      seen[j] = true;
      cyc.push_back(j);
    }
    st.cycles.push_back(std::move(cyc));
  }
  st.s = static_cast<int>(st.cycles.size());
  return st;
}

int height(const Permutation& z) {
  int h = 0;
  for (int i = 1; i <= z.n(); ++i)
    if (z(i) > i) ++h;
  return h;
}

int descent_sign(const Permutation& u, int i) {
  if (i < 1 || i >= u.n()) throw std::out_of_range("descent index out of range");
  return u(i) > u(i + 1) ? 1 : 0;
}

std::vector<int> descents(const Permutation& u) {
  std::vector<int> d;
  for (int i = 1; i < u.n(); ++i)
    if (u(i) > u(i + 1)) d.push_back(i);
  return d;
}

std::vector<int> flatten(const std::vector<int>& seq) {
  std::vector<int> vals(seq);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<int> out;
  out.reserve(seq.size());
  for (int v : seq) out.push_back(static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin()) + 1);
  return out;
}

Permutation delete_position(const Permutation& u, int r) {
  if (r < 1 || r > u.n()) throw std::out_of_range("delete_position: index out of range");
  std::vector<int> seq = u.one_line();
  seq.erase(seq.begin() + (r - 1));
  return Permutation::from_one_line(flatten(seq));
}

Permutation insert_at(const Permutation& v, int r, int s) {
  int n = v.n() + 1;
  if (r < 1 || r > n || s < 1 || s > n) throw std::out_of_range("insert_at: index out of range");
  std::vector<int> img;
  for (int i = 1; i <= v.n(); ++i) img.push_back(iota(s, v(i)));
  img.insert(img.begin() + (r - 1), s);
  return Permutation::from_one_line(img);
}

int tau(int s, int j) { return j < s ? j : j - 1; }
int iota(int s, int j) { return j < s ? j : j + 1; }

Permutation oshift(const Permutation& u, int r) {
  int n = u.n();
  r = ((r % n) + n) % n;
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = (u(i) - 1 + r) % n + 1;
  return Permutation::from_one_line(img);
}

Permutation parse_permutation(std::string_view text, int n) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty permutation");
  if (text == "e") {
    if (n <= 0) throw std::invalid_argument("identity needs an explicit size");
    return Permutation(n);
  }
  if (text.front() == '(') {
    std::vector<std::vector<int>> cycles;
    int mx = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      if (text[pos] != '(') throw std::invalid_argument("bad cycle notation");
      std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos) throw std::invalid_argument("unbalanced cycle notation");
      auto c = parse_ints(text.substr(pos + 1, close - pos - 1));
      for (int v : c) mx = std::max(mx, v);
      if (c.size() > 1) cycles.push_back(std::move(c));
      pos = close + 1;
    }
    return Permutation::from_cycles(cycles, n > 0 ? n : mx);
  }
  Permutation p = Permutation::from_one_line(parse_ints(text));
  if (n > 0 && n != p.n()) p = p.embed(n);
  return p;
}

std::string to_string(const Permutation& u) {
  std::string s;
  for (int i = 1; i <= u.n(); ++i) {
    if (u.n() >= 10 && i > 1) s += ',';
    s += std::to_string(u(i));
  }
  return s;
}

std::string cycle_string(const Permutation& u) {
  auto st = stats(u);
  if (st.cycles.empty()) return "e";
  std::string s;
  for (const auto& c : st.cycles) {
    s += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(c[t]);
    }
    s += ')';
  }
  return s;
}

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("negative part");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

Partition Partition::hook(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("hook needs a, b >= 1");
  std::vector<int> p(a, 1);
  p[0] = b;
  return Partition(p);
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::is_hook() const {
  if (parts.empty()) return false;
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] != 1) return false;
  return true;
}

bool Partition::fits(int k, int n) const { return length() <= k && (parts.empty() || parts[0] <= n - k); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Partition parse_partition(std::string_view text) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), t.end());
  if (t.empty()) return Partition();
  if (t.find(',') == std::string::npos) t += ",0";
  return Partition(parse_ints(t));
}

std::vector<Partition> partitions_of(int m, int max_parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, max_part);
  return out;
}

Permutation grassmannian(const Partition& lambda, int k, int n) {
  if (k < 0 || k > n) throw std::out_of_range("grassmannian: k out of range");
  if (!lambda.fits(k, n)) throw std::invalid_argument("partition " + lambda.str() + " is not inside the k x (n-k) rectangle");
  std::vector<int> img;
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= k; ++i) {
    int v = lambda[k - i] + i;
    img.push_back(v);
    used[v] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) img.push_back(v);
  return Permutation::from_one_line(img);
}

Partition grassmannian_shape(const Permutation& v, int k) {
  for (int i = 1; i < v.n(); ++i)
    if (i != k && v(i) > v(i + 1)) throw std::invalid_argument("not Grassmannian with descent at k");
  std::vector<int> p;
  for (int i = k; i >= 1; --i) p.push_back(v(i) - i);
  return Partition(p);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace flagmn
