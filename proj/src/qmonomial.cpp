#include "flagmn/qmonomial.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace flagmn {

QMonomial::QMonomial(int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("q-monomial size out of range");
  slots_ = static_cast<std::uint8_t>(n - 1);
}

QMonomial QMonomial::from_exponents(const std::vector<int>& alpha) {
  QMonomial m(static_cast<int>(alpha.size()) + 1);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0 || alpha[i] > 0xffff) throw std::invalid_argument("q exponent out of range");
    m.e_[i] = static_cast<std::uint16_t>(alpha[i]);
  }
  return m;
}

QMonomial QMonomial::qij(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw std::out_of_range("q_{i,j} needs 1 <= i < j <= n");
  QMonomial m(n);
  for (int l = i; l < j; ++l) m.e_[l - 1] = 1;
  return m;
}

QMonomial QMonomial::unit(int n, int i) { return qij(n, i, i + 1); }

int QMonomial::degree() const {
  int d = 0;
  for (int i = 0; i < slots_; ++i) d += e_[i];
  return d;
}

bool QMonomial::is_one() const {
  for (int i = 0; i < slots_; ++i)
    if (e_[i]) return false;
  return true;
}

std::vector<int> QMonomial::exponents() const { return std::vector<int>(e_.begin(), e_.begin() + slots_); }

QMonomial QMonomial::operator*(const QMonomial& o) const {
  if (slots_ != o.slots_) throw std::invalid_argument("q-monomial size mismatch");
  QMonomial m = *this;
  for (int i = 0; i < slots_; ++i) {
    int v = e_[i] + o.e_[i];
    if (v > 0xffff) throw std::overflow_error("q exponent overflow");
    m.e_[i] = static_cast<std::uint16_t>(v);
  }
  return m;
}

bool QMonomial::divides(const QMonomial& o) const {
  if (slots_ != o.slots_) return false;
  for (int i = 0; i < slots_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

QMonomial QMonomial::lowered(int i) const {
  if (i < 1 || i > slots_ || e_[i - 1] == 0) throw std::invalid_argument("cannot lower q exponent");
  QMonomial m = *this;
  --m.e_[i - 1];
  return m;
}

QMonomial QMonomial::reversed() const {
  QMonomial m = *this;
  for (int i = 0; i < slots_; ++i) m.e_[i] = e_[slots_ - 1 - i];
  return m;
}

QMonomial QMonomial::embed(int N) const {
  QMonomial m(N);
  if (N - 1 < slots_) {
    for (int i = N - 1; i < slots_; ++i)
      if (e_[i]) throw std::invalid_argument("q-monomial does not embed");
  }
  for (int i = 0; i < std::min<int>(slots_, N - 1); ++i) m.e_[i] = e_[i];
  return m;
}

std::string QMonomial::str() const {
  if (is_one()) return "";
  std::string s = "q^(";
  for (int i = 0; i < slots_; ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

QElement::QElement(QMonomial m, Permutation p) : q(m), w(p) {
  if (q.n() != w.n()) throw std::invalid_argument("q-element size mismatch");
}

std::string QElement::str() const {
  if (q.is_one()) return w.str();
  return q.str() + " " + w.str();
}

std::size_t QElement::hash() const {
  std::size_t h = w.hash();
  for (int i = 1; i <= q.slots(); ++i) h = h * 131 + static_cast<std::size_t>(q[i]);
  return h;
}

namespace {

int read_int(std::string_view s, std::size_t& pos) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
  if (ec != std::errc()) throw std::invalid_argument("expected integer in q-element");
  pos = static_cast<std::size_t>(p - s.data());
  return v;
}

}  // namespace

QElement parse_qelement(std::string_view text, int n) {
  // Each factor is either a full exponent vector or a run q_i..q_{j-1}.
  std::vector<std::vector<int>> vectors;
  std::vector<std::pair<int, int>> runs;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*')) ++pos;
  };
  skip();
  while (pos < text.size() && text[pos] == 'q') {
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || text[pos] != '(') throw std::invalid_argument("expected q^(...)");
      ++pos;
      std::vector<int> a;
      while (true) {
        a.push_back(read_int(text, pos));
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw std::invalid_argument("bad q exponent vector");
      }
      vectors.push_back(a);
    } else if (pos < text.size() && text[pos] == '_') {
      ++pos;
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        int i = read_int(text, pos);
        int j = i + 1;
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          j = read_int(text, pos);
        }
        if (pos >= text.size() || text[pos] != '}') throw std::invalid_argument("expected }");
        ++pos;
        runs.emplace_back(i, j);
      } else {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw std::invalid_argument("expected q index");
        int i = text[pos++] - '0';
        runs.emplace_back(i, i + 1);
      }
    } else {
      throw std::invalid_argument("bad q factor");
    }
    skip();
  }
  Permutation w = parse_permutation(text.substr(pos), n);
  QMonomial q(w.n());
  for (const auto& a : vectors) {
    if (static_cast<int>(a.size()) != w.n() - 1) throw std::invalid_argument("q exponent vector has wrong length");
    q = q * QMonomial::from_exponents(a);
  }
  for (auto [i, j] : runs) q = q * QMonomial::qij(w.n(), i, j);
  return QElement(q, w);
}

}  // namespace flagmn
