#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "yaxl/error.hpp"
#include "yaxl/transform.hpp"

using namespace yaxl;

namespace {

  FnMap fm(std::vector<Point> v) { return FnMap(std::move(v)); }

  oracle::Vec raw(FnMap const& f) { return {f.images().begin(), f.images().end()}; }

}  // namespace

TEST_CASE("FnMap rejects bad images") {
  CHECK_THROWS_AS(fm({}), InputError);
  CHECK_THROWS_AS(fm({0, 2}), InputError);
  CHECK_NOTHROW(fm({1, 1}));
}

TEST_CASE("compose") {
  CHECK(compose(fm({1, 0}), fm({1, 0})) == fm({0, 1}));
  FnMap g = fm({2, 0, 0});
  CHECK(compose(FnMap::identity(3), g) == g);
  CHECK(compose(fm({1, 2, 2}), fm({2, 2, 0})) == fm({2, 2, 1}));
  CHECK(raw(compose(fm({1, 2, 2}), fm({2, 2, 0})))
        == oracle::comp({1, 2, 2}, {2, 2, 0}));
  CHECK_THROWS_AS(compose(fm({0, 1}), fm({0, 1, 2})), InputError);
}

TEST_CASE("power") {
  CHECK(power(fm({1, 2, 0}), 3).is_identity());
  CHECK(power(fm({1, 2, 0}), 0).is_identity());
  CHECK(power(fm({2, 0, 1}), 1) == fm({2, 0, 1}));
  CHECK(power(fm({1, 0, 0}), 2) == fm({0, 1, 1}));
  CHECK(power(fm({1, 0, 0}), 2) == compose(fm({1, 0, 0}), fm({1, 0, 0})));
}

TEST_CASE("commutes") {
  FnMap f = fm({1, 2, 0, 0});
  CHECK(commutes(f, power(f, 5)));
  CHECK_FALSE(commutes(fm({1, 0, 2}), fm({0, 2, 1})));
  CHECK(commutes(FnMap::identity(3), fm({2, 2, 1})));
}

TEST_CASE("complete regularity") {
  for (auto const& p : permutations(4)) CHECK(is_completely_regular(p));
  CHECK_FALSE(is_completely_regular(fm({1, 2, 2})));
  CHECK(oracle::relative_inverses({1, 2, 2}).empty());
  CHECK(is_completely_regular(fm({1, 0, 0})));
  CHECK(oracle::relative_inverses({1, 0, 0}).size() == 1);
}

TEST_CASE("relative inverse examples") {
  auto id = relative_inverse(FnMap::identity(3));
  REQUIRE(id);
  CHECK(id->inverse.is_identity());
  CHECK(id->idempotent.is_identity());

  auto cyc = relative_inverse(fm({1, 2, 0}));
  REQUIRE(cyc);
  CHECK(cyc->inverse == fm({2, 0, 1}));

  auto t = relative_inverse(fm({1, 0, 0}));
  REQUIRE(t);
  CHECK(t->inverse == fm({1, 0, 0}));
  CHECK(t->idempotent == fm({0, 1, 1}));
  CHECK(oracle::relative_inverses({1, 0, 0}) == std::vector<oracle::Vec>{{1, 0, 0}});

  CHECK_FALSE(relative_inverse(fm({1, 2, 2})));
}

TEST_CASE("relative inverse agrees with brute force for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& f : all_maps(n)) {
      auto hits = oracle::relative_inverses(raw(f));
      auto got  = relative_inverse(f);
      CHECK(hits.size() <= 1);
      REQUIRE(got.has_value() == !hits.empty());
      if (got) CHECK(raw(got->inverse) == hits.front());
    }
  }
}

TEST_CASE("three way agreement on complete regularity, n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& f : all_maps(n)) {
      bool cr   = is_completely_regular(f);
      bool rank = f.rank() == compose(f, f).rank();
      CHECK(cr == rank);
      CHECK(cr == relative_inverse(f).has_value());
    }
  }
}

TEST_CASE("inverse of the inverse") {
  for (auto const& f : completely_regular_maps(4)) {
    auto t = relative_inverse(f);
    REQUIRE(t);
    auto u = relative_inverse(t->inverse);
    REQUIRE(u);
    CHECK(u->inverse == f);
    CHECK(u->idempotent == t->idempotent);
    CHECK(t->idempotent.is_idempotent());
    CHECK(compose(f, t->inverse) == compose(t->inverse, f));
  }
}

TEST_CASE("group inverse for permutations") {
  for (auto const& p : permutations(4)) {
    auto t = relative_inverse(p);
    REQUIRE(t);
    CHECK(compose(p, t->inverse).is_identity());
  }
}

TEST_CASE("idempotent of a product of commuting powers") {
  std::mt19937_64 rng(20261014);
  auto            maps = completely_regular_maps(5);
  std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
  std::uniform_int_distribution<int>         exp(1, 7);
  for (int i = 0; i < 500; ++i) {
    FnMap const& h = maps[pick(rng)];
    FnMap        f = power(h, static_cast<std::uint64_t>(exp(rng)));
    FnMap        g = power(h, static_cast<std::uint64_t>(exp(rng)));
    auto tf = relative_inverse(f), tg = relative_inverse(g), tfg = relative_inverse(compose(f, g));
    REQUIRE(tf);
    REQUIRE(tg);
    REQUIRE(tfg);
    CHECK(tfg->idempotent == compose(tf->idempotent, tg->idempotent));
  }
}

TEST_CASE("completely regular maps on 4 points") {
  // sum over k of C(4,k) k! k^(4-k)
  CHECK(completely_regular_maps(4).size() == 148);
  CHECK(all_maps(4).size() == 256);
  CHECK(permutations(4).size() == 24);
}

TEST_CASE("image period") {
  CHECK(image_period(fm({1, 2, 0, 3, 4})) == 3);
  CHECK(image_period(fm({1, 0, 3, 4, 2})) == 6);
  CHECK(image_period(fm({0, 0, 2})) == 1);
  CHECK_FALSE(image_period(fm({1, 2, 2})));
}

TEST_CASE("large periods on big carriers") {
  // Cycles of lengths 2, 3, 5, 7, 11, 13 on 41 points: lcm 30030.
  std::vector<Point> v;
  Point              base = 0;
  for (Point len : {2U, 3U, 5U, 7U, 11U, 13U}) {
    for (Point i = 0; i < len; ++i) v.push_back(base + (i + 1) % len);
    base += len;
  }
  FnMap f(v);
  CHECK(image_period(f) == 30030);
  auto t = relative_inverse(f);
  REQUIRE(t);
  CHECK(compose(f, t->inverse).is_identity());
}
