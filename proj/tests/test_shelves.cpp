#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "support.hpp"
#include "yaxl/constructions.hpp"
#include "yaxl/enumerate.hpp"
#include "yaxl/error.hpp"
#include "yaxl/shelves.hpp"
#include "yaxl/solutions.hpp"

using namespace yaxl;

namespace {

  std::vector<Magma> all_quasi_racks(std::size_t max_n) {
    std::vector<Magma> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      EnumerationSpec s;
      s.n      = n;
      s.cls    = StructureClass::quasi_rack;
      s.stream = true;
      auto r   = enumerate(s);
      out.insert(out.end(), r.items.begin(), r.items.end());
    }
    return out;
  }

  QuasiRackData qr(Magma const& m) {
    auto q = quasi_rack_structure(m);
    REQUIRE(q);
    return *q;
  }

}  // namespace

TEST_CASE("left self-distributivity") {
  CHECK(is_left_shelf(trivial_shelf(3)));
  CHECK(is_left_shelf(constant_shelf(FnMap({0, 0, 2}))));
  Magma bad(2, {1, 1, 0, 0});
  CHECK_FALSE(is_left_shelf(bad));
  CHECK_FALSE(oracle::left_sd(2, {1, 1, 0, 0}));
}

TEST_CASE("racks and quandles") {
  Magma d = dihedral_quandle(3);
  CHECK(is_rack(d));
  CHECK(is_quandle(d));
  CHECK_FALSE(is_rack(constant_shelf(FnMap({0, 0, 2}))));
  CHECK(is_rack(trivial_shelf(4)));
  CHECK(is_quandle(trivial_shelf(4)));
}

TEST_CASE("quasi rack structure") {
  CliffordTable s(fixture::magma("clifford3.txt"));
  CHECK(quasi_rack_structure(conjugation_quasi_quandle(s)));

  auto r2 = quasi_rack_structure(fixture::magma("star_only3.txt"));
  REQUIRE(r2);
  CHECK(check_star(*r2));
  CHECK_FALSE(check_starstar(*r2));

  for (std::size_t n = 2; n <= 4; ++n) {
    Magma left = Magma::from_function(n, [](Point x, Point) { return x; });
    CHECK(is_left_shelf(left));
    CHECK_FALSE(quasi_rack_structure(left));
  }
}

TEST_CASE("quasi quandles") {
  CliffordTable s(fixture::magma("clifford4.txt"));
  CHECK(is_quasi_quandle(qr(core_quasi_quandle(s))));
  CHECK_FALSE(is_quasi_quandle(qr(fixture::magma("deformed4.txt"))));
  CHECK(is_quasi_quandle(qr(dihedral_quandle(5))));
}

TEST_CASE("the three conditions are independent") {
  auto r3 = qr(fixture::magma("sss_without_star3.txt"));
  CHECK_FALSE(check_star(r3));
  CHECK(check_starstarstar(r3));
  CHECK(check_starstar(r3));

  auto r4 = qr(fixture::magma("ds_without_conditions4.txt"));
  CHECK(is_solution(derived_map(r4)));
  CHECK_FALSE(check_star(r4));
  CHECK_FALSE(check_starstar(r4));

  auto rk = qr(dihedral_quandle(3));
  CHECK(check_star(rk));
  CHECK(check_starstar(rk));
  CHECK(check_starstarstar(rk));
}

TEST_CASE("derived map of a rack") {
  Magma         d = dihedral_quandle(3);
  SolutionTable r = derived_map(qr(d));
  for (Point x = 0; x < 3; ++x)
    for (Point y = 0; y < 3; ++y) {
      CHECK(r(x, y).first == y);
      CHECK(r(x, y).second == d(y, x));
    }
}

TEST_CASE("derived map of the conjugation quasi quandle") {
  for (char const* name : {"clifford3.txt", "clifford4.txt"}) {
    CliffordTable s(fixture::magma(name));
    auto          q = qr(conjugation_quasi_quandle(s));
    SolutionTable r = derived_map(q);
    SolutionTable ri = derived_relative_inverse(q);
    for (Point x = 0; x < s.size(); ++x)
      for (Point y = 0; y < s.size(); ++y) {
        CHECK(r(x, y).first == s(s.zero(x), y));
        CHECK(r(x, y).second == s(s(s.inv(y), x), y));
        CHECK(ri(x, y).first == s(s(x, y), s.inv(x)));
        CHECK(ri(x, y).second == s(s.zero(y), x));
      }
    auto qb = quasi_bijective(r);
    REQUIRE(qb);
    CHECK(*qb == ri);
  }
}

TEST_CASE("derived relative inverse needs (***)") {
  CHECK_THROWS_AS(derived_relative_inverse(qr(fixture::magma("deformed4.txt"))),
                  PreconditionError);
  CHECK_THROWS_AS(opposite_right_quasi_rack(qr(fixture::magma("deformed4.txt"))),
                  PreconditionError);
}

TEST_CASE("opposite right quasi rack") {
  Magma d  = dihedral_quandle(3);
  Magma op = opposite_right_quasi_rack(qr(d));
  for (Point x = 0; x < 3; ++x)
    for (Point y = 0; y < 3; ++y) CHECK(op(y, x) == (2 * x + 3 - y) % 3);
  CHECK(is_right_shelf(op));

  CliffordTable s(fixture::magma("clifford4.txt"));
  Magma         c = opposite_right_quasi_rack(qr(conjugation_quasi_quandle(s)));
  for (Point x = 0; x < s.size(); ++x)
    for (Point y = 0; y < s.size(); ++y) CHECK(c(y, x) == s(s(x, y), s.inv(x)));
}

TEST_CASE("canonical form") {
  Magma d = dihedral_quandle(3);
  CHECK_FALSE(are_isomorphic(d, trivial_shelf(3)));
  Magma              rd = relabel(fixture::magma("ds_without_conditions4.txt"), std::vector<Point>{3, 1, 0, 2});
  CHECK(are_isomorphic(rd, fixture::magma("ds_without_conditions4.txt")));
  CHECK(canonical_form(canonical_form(rd)) == canonical_form(rd));
  CHECK(is_canonical(canonical_form(rd)));
  auto c = oracle::canonical(4, {rd.data().begin(), rd.data().end()});
  CHECK(std::equal(c.begin(), c.end(), canonical_form(rd).data().begin()));
  CHECK_THROWS_AS(canonical_form(trivial_shelf(9)), PreconditionError);
}

TEST_CASE("homomorphisms by brute force") {
  Magma d = dihedral_quandle(3);
  auto  h = homomorphisms(d, d);
  for (auto const& f : h) CHECK(is_homomorphism(f, d, d));
  std::size_t brute = 0;
  for (auto const& f : all_maps(3)) brute += is_homomorphism(f, d, d) ? 1 : 0;
  CHECK(h.size() == brute);
}

TEST_CASE("properties over every quasi rack of order <= 4") {
  for (Magma const& m : all_quasi_racks(4)) {
    auto q = qr(m);
    CHECK(verify_translation_lemma(q));
    bool s1 = check_star(q), s2 = check_starstar(q), s3 = check_starstarstar(q);
    if (s3) CHECK(s2);
    SolutionTable d = derived_map(q);
    if (s1 || s2 || s3) CHECK(is_solution(d));
    if (s3) {
      auto qb = quasi_bijective(d);
      REQUIRE(qb);
      CHECK(*qb == derived_relative_inverse(q));
    }
    if (is_solution(d)) {
      Classification c = classify(d);
      CHECK(c.left_nd == is_rack(m));
    }
  }
}

TEST_CASE("racks are quasi racks with trivial idempotents") {
  for (auto const& p : permutations(3)) {
    // x |> y = p(y) is a rack for every permutation p.
    Magma m = Magma::from_function(3, [&](Point, Point y) { return p(y); });
    auto  q = qr(m);
    for (Point x = 0; x < 3; ++x) {
      CHECK(q.L_zero[x].is_identity());
      CHECK(compose(q.L_inv[x], q.L[x]).is_identity());
    }
  }
}

TEST_CASE("canonical form is constant on orbits") {
  Magma              m = fixture::magma("ds_without_conditions4.txt");
  std::vector<Point> p(4);
  std::iota(p.begin(), p.end(), 0U);
  Magma c = canonical_form(m);
  do {
    CHECK(canonical_form(relabel(m, p)) == c);
  } while (std::next_permutation(p.begin(), p.end()));
}
