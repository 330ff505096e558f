#include <set>

#include "doctest.h"
#include "flagmn/kbruhat.hpp"
#include "flagmn/schubert.hpp"
#include "support.hpp"

using namespace flagmn;
using testsupport::P;

namespace {

std::set<std::string> node_names(const LabeledPoset& p) {
  std::set<std::string> s;
  for (const auto& x : p.elements) s.insert(x.str());
  return s;
}

// Direct cover test from the definition.
bool cover_by_definition(const Permutation& u, const Permutation& w, int k) {
  int n = u.n();
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) {
      if (u.swap_positions(i, j) != w) continue;
      if (w.length() == u.length() + 1 && u(i) < u(j)) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("cover test") {
  auto r = cover_witness_k(P("68235741"), P("68237541"), 5);
  REQUIRE(r);
  CHECK(P("68235741")(r->first) == 5);
  CHECK_FALSE(is_cover_k(P("1432"), P("1432"), 2));
  CHECK(is_cover_k(P("1432"), P("3412"), 2));
  CHECK_THROWS(is_cover_k(P("1432"), P("12345"), 2));
}

TEST_CASE("up covers") {
  CHECK(up_covers_k(Permutation::longest(5), 2).empty());
  std::set<std::string> got;
  for (const auto& c : up_covers_k(P("1432"), 2)) got.insert(c.target.w.str());
  CHECK(got == std::set<std::string>{"3412", "2431"});

  std::set<std::pair<int, std::string>> labelled;
  for (const auto& c : up_covers_k(P("68235741"), 5)) labelled.insert({c.label, c.target.w.str()});
  // The two bottom covers of the first interval, plus one leaving it.
  CHECK(labelled == std::set<std::pair<int, std::string>>{{5, "68237541"}, {3, "68245731"}, {6, "78235641"}});
  auto left = interval_k(P("68235741"), P("68357421"), 5);
  int bottom_edges = 0;
  for (const auto& e : left.edges) bottom_edges += e.from == 0;
  CHECK(bottom_edges == 2);
}

TEST_CASE("up covers agree with the cover predicate and the length criterion") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& u : all_permutations(n))
      for (int k = 1; k < n; ++k) {
        std::set<Permutation> a, b;
        for (const auto& c : up_covers_k(u, k)) {
          a.insert(c.target.w);
          CHECK(c.label == u(c.i));
          CHECK(c.target.w.length() == u.length() + 1);
        }
        for (int i = 1; i <= k; ++i)
          for (int j = k + 1; j <= n; ++j) {
            auto w = u.swap_positions(i, j);
            if (is_cover_k(u, w, k)) b.insert(w);
            CHECK(is_cover_k(u, w, k) == cover_by_definition(u, w, k));
          }
        CHECK(a == b);
      }
}

TEST_CASE("two labelled intervals") {
  auto left = interval_k(P("68235741"), P("68357421"), 5);
  CHECK(left.size() == 8);
  CHECK(node_names(left) == std::set<std::string>{"68357421", "68257431", "68347521", "68247531", "68345721", "68237541",
                                                  "68245731", "68235741"});
  CHECK(left.label_multiset() == std::multiset<int>{2, 2, 2, 3, 3, 4, 4, 5, 5, 5});

  auto right = interval_k(P("3217465"), P("6274135"), 3);
  CHECK(right.size() == 12);
  CHECK(node_names(right) == std::set<std::string>{"6274135", "4276135", "6247135", "3276145", "4267135", "6237145", "3267145",
                                                   "4237165", "6217345", "3247165", "4217365", "3217465"});
  CHECK(right.label_multiset() == std::multiset<int>{1, 1, 1, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 6, 6});
}

TEST_CASE("trivial and incomparable intervals") {
  auto one = interval_k(P("2143"), P("2143"), 2);
  CHECK(one.size() == 1);
  CHECK(one.edges.empty());
  CHECK(interval_k(P("2143"), P("1234"), 2).empty());
  CHECK(interval_k(P("1234"), P("4321"), 2).empty());
}

TEST_CASE("intervals are graded") {
  for (int t = 0; t < 40; ++t) {
    auto u = testsupport::random_perm(6);
    int k = testsupport::uniform(1, 5);
    Permutation w = u;
    for (int s = 0; s < 4; ++s) {
      auto cs = up_covers_k(w, k);
      if (cs.empty()) break;
      w = cs[testsupport::uniform(0, static_cast<int>(cs.size()) - 1)].target.w;
    }
    auto P = interval_k(u, w, k);
    REQUIRE_FALSE(P.empty());
    for (const auto& e : P.edges) CHECK(P.ranks[e.to] == P.ranks[e.from] + 1);
    for (const auto& c : saturated_chains(P)) CHECK(c.length() == w.length() - u.length());
  }
}

TEST_CASE("peakless chains") {
  auto u = P("68235741"), w = P("68357421");
  auto p3 = peakless_chains(u, w, 5, 3);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].labels == std::vector<int>{5, 3, 2, 4});
  CHECK(peakless_chains(u, w, 5, 1).empty());
  CHECK(peakless_chains(u, w, 5, 2).empty());
  CHECK(peakless_chains(u, w, 5, 4).empty());
  for (int a = 1; a <= 5; ++a) CHECK(peakless_chains(P("3217465"), P("6274135"), 3, a).empty());
  auto trivial = peakless_chains(u, u, 5, 1);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].length() == 0);
}

TEST_CASE("peakless predicate") {
  CHECK(is_peakless({5, 3, 2, 4}, 3));
  CHECK_FALSE(is_peakless({5, 3, 2, 4}, 2));
  CHECK(is_peakless({1, 2, 3}, 1));
  CHECK(is_peakless({3, 2, 1}, 3));
  CHECK(is_peakless({4}, 1));
  CHECK_FALSE(is_peakless({2, 2}, 1));
  CHECK(is_peakless({}, 1));
}

TEST_CASE("minimal permutations") {
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 6; ++b) CHECK(is_minimal(Permutation::transposition(6, a, b)));
  CHECK(is_minimal(P("(2,3,5,7,4)", 8)));
  CHECK_FALSE(is_minimal(P("(1,7,4)(3,6)", 7)));
  CHECK(grassmannian_rank(P("(1,7,4)(3,6)", 7)) == 5);
  CHECK(grassmannian_rank(P("(1,6,7,3,5)", 8)) == 4);
}

TEST_CASE("witness search finds a comparable interval of the right rank") {
  for (const auto& z : all_permutations(5)) {
    if (z.is_identity()) continue;
    auto wit = find_witness(z);
    REQUIRE(wit);
    auto st = stats(z);
    CHECK(leq_k(wit->u, compose(z, wit->u), wit->k));
    // The rank never drops below #supp - s.
    CHECK(wit->rank >= static_cast<int>(st.support.size()) - st.s);
  }
}

TEST_CASE("crossing") {
  CHECK_FALSE(crossing({1, 2}, {3, 4}));
  CHECK(crossing({1, 3}, {2, 4}));
  CHECK_FALSE(crossing({1, 4}, {2, 3}));
  CHECK(crossing_pairs(3, 1, 4, 2));
}

TEST_CASE("noncrossing factorization") {
  auto single = noncrossing_factor(P("(2,3,5,7,4)", 8));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == P("(2,3,5,7,4)", 8));

  auto two = noncrossing_factor(P("(1,7,6)(2,3,5,4)", 7));
  REQUIRE(two.size() == 2);
  CHECK(compose(two[0], two[1]) == P("(1,7,6)(2,3,5,4)", 7));
  CHECK_FALSE(crossing(stats(two[0]).support, stats(two[1]).support));

  CHECK(noncrossing_factor(P("(1,7,4)(3,6)", 7)).size() == 1);
}

TEST_CASE("noncrossing products: additive rank and factorwise minimality") {
  for (const auto& z : all_permutations(6)) {
    if (z.is_identity()) continue;
    auto factors = noncrossing_factor(z);
    Permutation prod(6);
    for (const auto& f : factors) prod = compose(prod, f);
    CHECK(prod == z);
    for (std::size_t a = 0; a < factors.size(); ++a)
      for (std::size_t b = a + 1; b < factors.size(); ++b) CHECK_FALSE(crossing(stats(factors[a]).support, stats(factors[b]).support));
    if (factors.size() < 2) continue;
    int sum = 0;
    bool all_min = true;
    for (const auto& f : factors) {
      sum += grassmannian_rank(f);
      all_min = all_min && is_minimal(f);
    }
    CHECK(grassmannian_rank(z) == sum);
    CHECK(is_minimal(z) == all_min);
  }
}

TEST_CASE("serializations") {
  auto left = interval_k(P("68235741"), P("68357421"), 5);
  auto dot = left.to_dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"68235741\" -> \"68237541\" [label=5") != std::string::npos);
  auto json = left.to_json();
  CHECK(json.find("\"edges\"") != std::string::npos);
  CHECK(json.find("\"label\": 5") != std::string::npos);
}
