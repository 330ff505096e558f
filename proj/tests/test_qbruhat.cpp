#include <set>

#include "doctest.h"
#include "flagmn/qbruhat.hpp"
#include "support.hpp"

using namespace flagmn;
using testsupport::P;

namespace {

QElement Q(const char* s) { return parse_qelement(s); }

std::set<std::string> node_names(const LabeledPoset& p) {
  std::set<std::string> s;
  for (const auto& x : p.elements) s.insert(x.str());
  return s;
}

std::set<QElement> targets(const std::vector<Cover>& cs) {
  std::set<QElement> s;
  for (const auto& c : cs) s.insert(c.target);
  return s;
}

}  // namespace

TEST_CASE("q-monomials") {
  auto q = QMonomial::qij(5, 2, 4);
  CHECK(q.exponents() == std::vector<int>{0, 1, 1, 0});
  CHECK(q.degree() == 2);
  CHECK((QMonomial::qij(5, 1, 5) * QMonomial::qij(5, 2, 4)) == (QMonomial::qij(5, 1, 4) * QMonomial::qij(5, 2, 5)));
  CHECK((QMonomial::qij(5, 1, 5) * QMonomial::qij(5, 2, 4)).exponents() == std::vector<int>{1, 2, 2, 1});
  CHECK(q.reversed().exponents() == std::vector<int>{0, 1, 1, 0});
  CHECK(QMonomial::qij(5, 1, 3).reversed() == QMonomial::qij(5, 3, 5));
  CHECK(Q("q_{2,4} 12345") == QElement(QMonomial::qij(5, 2, 4), P("12345")));
  CHECK(Q("q_2q_3 1234") == Q("q^(0,1,1) 1234"));
  CHECK(Q("q^(0,1,1) 1234").rank() == 4);
  CHECK_THROWS(Q("q^(1,1) 1234"));
}

TEST_CASE("quantum covers") {
  auto w = qcover_witness(QElement(P("1432")), Q("q_2 1342"), 2);
  REQUIRE(w);
  CHECK(w->quantum);
  CHECK(w->i == 2);
  CHECK(w->j == 3);
  w = qcover_witness(QElement(P("1432")), Q("q_2q_3 1234"), 2);
  REQUIRE(w);
  CHECK(w->quantum);
  CHECK(w->i == 2);
  CHECK(w->j == 4);
  CHECK_FALSE(is_qcover(QElement(P("1432")), QElement(P("1432")), 2));
  CHECK(targets(q_up_covers(QElement(P("1432")), 2)) ==
        std::set<QElement>{QElement(P("3412")), QElement(P("2431")), Q("q_2 1342"), Q("q_2q_3 1234")});
}

TEST_CASE("quantum covers match the length criterion") {
  // u -> q_{i,j} u(i,j) is a quantum cover iff l(u(i,j)) = l(u) + 1 - 2(j-i).
  for (int n = 2; n <= 6; ++n)
    for (const auto& u : all_permutations(n))
      for (int k = 1; k < n; ++k) {
        std::set<QElement> expect;
        for (int i = 1; i <= k; ++i)
          for (int j = k + 1; j <= n; ++j) {
            auto w = u.swap_positions(i, j);
            if (w.length() == u.length() + 1)
              expect.insert(QElement(w));
            else if (w.length() == u.length() + 1 - 2 * (j - i))
              expect.insert(QElement(QMonomial::qij(n, i, j), w));
          }
        CHECK(targets(q_up_covers(QElement(u), k)) == expect);
      }
}

TEST_CASE("quantum covers: grading, specialization, multiplicativity") {
  for (const auto& u : all_permutations(5))
    for (int k = 1; k < 5; ++k) {
      std::set<QElement> classical;
      for (const auto& c : q_up_covers(QElement(u), k)) {
        CHECK(c.target.rank() == u.length() + 1);
        if (c.quantum) {
          CHECK(c.target.q.degree() == c.j - c.i);
          CHECK(c.target.w.length() == u.length() - (2 * (c.j - c.i) - 1));
          CHECK(c.label == u(c.i));
        } else {
          classical.insert(c.target);
        }
      }
      CHECK(classical == targets(up_covers_k(u, k)));
      QMonomial beta = QMonomial::from_exponents({1, 0, 2, 0});
      std::set<QElement> shifted;
      for (const auto& t : targets(q_up_covers(QElement(u), k))) shifted.insert(QElement(beta * t.q, t.w));
      CHECK(targets(q_up_covers(QElement(beta, u), k)) == shifted);
    }
}

TEST_CASE("figure 2: two levels above 1432") {
  auto l1 = q_rank_shell(QElement(P("1432")), 2, 1);
  auto l2 = q_rank_shell(QElement(P("1432")), 2, 2);
  CHECK(l1.size() == 4);
  CHECK(std::set<QElement>(l2.begin(), l2.end()) ==
        std::set<QElement>{QElement(P("3421")), Q("q_2q_3 2134"), Q("q_2 2341"), Q("q_2 1432"), Q("q_2 3142"), Q("q_2q_3 1324")});
  CHECK(is_qcover(QElement(P("2431")), Q("q_2q_3 2134"), 2));
}

TEST_CASE("figure 5 and 6 intervals") {
  auto left = q_interval(P("53421"), Q("q_{1,5}q_{2,4} 12354"), 2);
  CHECK(node_names(left) == std::set<std::string>{"q^(1,2,2,1) 12354", "q^(0,1,1,1) 52314", "q^(1,1,1,1) 15324",
                                                  "q^(0,1,1,1) 51324", "q^(1,1,1,1) 14325", "54321", "q^(1,1,1,1) 13425",
                                                  "53421"});
  auto right = q_interval(P("41352"), Q("q_{3,5} 52134"), 3);
  CHECK(right.size() == 10);
  CHECK(q_chains(QElement(P("41352")), Q("q_{3,5} 52134"), 3).size() == 5);
  auto fig6 = q_interval(P("68235741"), Q("q_{5,8} 78251346"), 5);
  CHECK(fig6.size() == 10);
  CHECK(fig6.contains(Q("q_{5,8} 68231547")));
  CHECK(fig6.contains(QElement(P("68257341"))));
}

TEST_CASE("figure 6 left has the peakless chain 6,3,1,3") {
  auto chains = q_chains(QElement(P("68231574")), QElement(P("78256134")), 5);
  int peakless = 0;
  for (const auto& c : chains)
    if (is_peakless(c.labels, 3)) {
      ++peakless;
      CHECK(c.labels == std::vector<int>{6, 3, 1, 3});
    }
  CHECK(peakless == 1);
}

TEST_CASE("trivial intervals and chains") {
  CHECK(q_interval(P("2413"), QElement(P("2413")), 2).size() == 1);
  auto cs = up_covers_k(P("2413"), 2);
  REQUIRE_FALSE(cs.empty());
  CHECK(q_chains(QElement(P("2413")), cs[0].target, 2).size() == 1);
  CHECK(q_interval(P("2413"), QElement(P("1234")), 2).empty());
}

TEST_CASE("minimal intervals") {
  CHECK(is_minimal_interval(P("68235741"), Q("q_{5,8} 78251346"), 5));
  CHECK(is_minimal_interval(P("1432"), Q("q_2 1342"), 2));
  CHECK_FALSE(is_minimal_interval(P("3217465"), QElement(P("6274135")), 3));
  CHECK(is_minimal_interval(P("53421"), Q("q_{1,5}q_{2,4} 12354"), 2));
  CHECK(is_minimal_interval(P("41352"), Q("q_{3,5} 52134"), 3));
  CHECK_THROWS(is_minimal_interval(P("2413"), QElement(P("1234")), 2));
}

TEST_CASE("comparability, grading and q-multiplicativity on S4") {
  for (const auto& u : all_permutations(4))
    for (int k = 1; k < 4; ++k)
      for (int r = 0; r <= 3; ++r)
        for (const auto& t : q_rank_shell(QElement(u), k, r)) {
          CHECK(q_leq(QElement(u), t, k));
          auto Pi = q_interval(u, t, k);
          REQUIRE_FALSE(Pi.empty());
          for (const auto& e : Pi.edges) CHECK(Pi.ranks[e.to] == Pi.ranks[e.from] + 1);
          CHECK_FALSE(q_chains(QElement(u), t, k).empty());
          QMonomial g = QMonomial::from_exponents({0, 1, 1});
          CHECK(q_leq(QElement(g, u), QElement(g * t.q, t.w), k));
        }
}
