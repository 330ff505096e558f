#include "doctest.h"
#include "flagmn/perm.hpp"
#include "support.hpp"

using namespace flagmn;
using testsupport::P;

TEST_CASE("length") {
  CHECK(Permutation(6).length() == 0);
  CHECK(P("68357421").length() == 22);
  CHECK(P("68235741").length() == 18);
  CHECK(P("6274135").length() == 12);
  CHECK(P("3217465").length() == 7);
}

TEST_CASE("compose") {
  auto u = P("3217465");
  CHECK(compose(Permutation(7), u) == u);
  CHECK(compose(P("(1,7,4)(3,6)", 7), u) == P("6274135"));
  CHECK(compose(P("(2,3,5,7,4)", 8), P("68235741")) == P("68357421"));
  CHECK_THROWS(compose(Permutation(3), Permutation(4)));
}

TEST_CASE("cycle statistics") {
  auto e = stats(Permutation(5));
  CHECK(e.support.empty());
  CHECK(e.s == 0);
  CHECK(e.het == 0);

  auto z2 = stats(P("(1,7,4)(3,6)", 7));
  CHECK(z2.support.size() == 5);
  CHECK(z2.s == 2);

  auto z = stats(P("(1,6,7,3,5)", 8));
  CHECK(z.het == 3);
  CHECK(z.s == 1);
  CHECK(z.support.size() == 5);
}

TEST_CASE("cycle notation parsing") {
  CHECK(P("(174)(36)", 7) == P("(1,7,4)(3,6)", 7));
  CHECK(P("(2,3,5,7,4)").n() == 7);
  CHECK(P("e", 4) == Permutation(4));
  CHECK_THROWS(P("1224"));
  CHECK_THROWS(P("(1,2)(2,3)", 3));
  CHECK_THROWS(P("12a"));
  auto big = P("(1,10)", 11);
  CHECK(big.str() == "10,2,3,4,5,6,7,8,9,1,11");
  CHECK(parse_permutation(big.str()) == big);
}

TEST_CASE("grassmannian codec") {
  CHECK(grassmannian(Partition{}, 3, 7) == Permutation(7));
  CHECK(grassmannian(Partition{3, 1, 0}, 3, 7) == P("1362457"));
  CHECK(grassmannian(Partition{1, 0, 0, 0}, 4, 7) == P("1235467"));
  CHECK(P("1235467") == Permutation::transposition(7, 4, 5));
  CHECK_THROWS(grassmannian(Partition{5}, 3, 7));
  CHECK_THROWS(grassmannian(Partition{1, 1, 1, 1}, 3, 7));
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      for (int m = 0; m <= k * (n - k); ++m)
        for (const auto& lam : partitions_of(m, k, n - k)) {
          auto v = grassmannian(lam, k, n);
          CHECK(grassmannian_shape(v, k) == lam);
          auto d = descents(v);
          CHECK((d.empty() || (d.size() == 1 && d[0] == k)));
          CHECK(v.length() == lam.size());
        }
}

TEST_CASE("flatten") {
  CHECK(flatten({1, 2, 3}) == std::vector<int>{1, 2, 3});
  CHECK(flatten({3, 6, 1, 6, 8, 3, 1}) == std::vector<int>{2, 3, 1, 3, 4, 2, 1});
  CHECK(flatten({9, 2}) == std::vector<int>{2, 1});
  for (int t = 0; t < 200; ++t) {
    std::vector<int> s;
    int len = testsupport::uniform(0, 9);
    for (int i = 0; i < len; ++i) s.push_back(testsupport::uniform(-5, 20));
    auto f = flatten(s);
    CHECK(flatten(f) == f);
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j) CHECK((s[i] > s[j]) == (f[i] > f[j]));
  }
}

TEST_CASE("descent signs") {
  auto e = Permutation(6);
  for (int i = 1; i < 6; ++i) CHECK(descent_sign(e, i) == 0);
  CHECK(descent_sign(P("68235741"), 7) == 1);
  CHECK(descent_sign(P("78256134"), 5) == 1);
  CHECK(descent_sign(P("78251634"), 5) == 0);
  CHECK_THROWS(descent_sign(e, 6));
  CHECK_THROWS(descent_sign(e, 0));
}

TEST_CASE("deletion and insertion") {
  CHECK(delete_position(P("413652"), 3) == P("31542"));
  for (int t = 0; t < 200; ++t) {
    int n = testsupport::uniform(1, 7);
    auto v = testsupport::random_perm(n);
    int r = testsupport::uniform(1, n + 1), s = testsupport::uniform(1, n + 1);
    auto u = insert_at(v, r, s);
    CHECK(u(r) == s);
    CHECK(delete_position(u, r) == v);
  }
  CHECK(tau(3, 2) == 2);
  CHECK(tau(3, 5) == 4);
  CHECK(iota(3, 2) == 2);
  CHECK(iota(3, 3) == 4);
}

TEST_CASE("group invariants") {
  for (int n = 1; n <= 6; ++n) {
    auto w0 = Permutation::longest(n);
    CHECK(w0.length() == n * (n - 1) / 2);
    CHECK(compose(w0, w0) == Permutation(n));
    for (const auto& u : all_permutations(n)) {
      CHECK(u.inverse().length() == u.length());
      CHECK(compose(u, u.inverse()) == Permutation(n));
      CHECK(oshift(u, n) == u);
      CHECK(oshift(u) == compose(Permutation::cyclic_shift(n), u));
      CHECK(Permutation::from_code(u.code(), n) == u);
      for (int i = 1; i < n; ++i) {
        int d = u.swap_positions(i, i + 1).length() - u.length();
        CHECK((d == 1 || d == -1));
      }
    }
  }
}

TEST_CASE("compose is associative") {
  for (int t = 0; t < 300; ++t) {
    int n = testsupport::uniform(1, 9);
    auto a = testsupport::random_perm(n), b = testsupport::random_perm(n), c = testsupport::random_perm(n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("partitions") {
  CHECK(Partition::hook(3, 2) == Partition{2, 1, 1});
  CHECK(Partition{2, 1, 1}.is_hook());
  CHECK_FALSE(Partition{2, 2}.is_hook());
  CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
  CHECK(parse_partition("12") == Partition{12});
  CHECK_THROWS(parse_partition("1,2"));
  CHECK(partitions_of(4, 4, 4).size() == 5);
}
