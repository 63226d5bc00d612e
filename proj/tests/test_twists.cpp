#include <doctest.h>

#include "support.hpp"
#include "yaxl/constructions.hpp"
#include "yaxl/enumerate.hpp"
#include "yaxl/error.hpp"
#include "yaxl/shelves.hpp"
#include "yaxl/solutions.hpp"
#include "yaxl/twists.hpp"

using namespace yaxl;

namespace {

  std::vector<QuasiRackData> star_starstar_racks(std::size_t max_n) {
    std::vector<QuasiRackData> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      EnumerationSpec s;
      s.n       = n;
      s.cls     = StructureClass::quasi_rack;
      s.filters = filter::star | filter::starstar;
      s.stream  = true;
      for (auto const& m : enumerate(s).items) out.push_back(*quasi_rack_structure(m));
    }
    return out;
  }

}  // namespace

TEST_CASE("construction validates the family") {
  Magma d = dihedral_quandle(3);
  CHECK_THROWS_AS(TwistFamily(d, {FnMap::identity(3)}), InputError);
  // A constant map onto a fixed point of the diagonal is an endomorphism.
  CHECK_NOTHROW(TwistFamily(d, std::vector<FnMap>(3, FnMap::constant(3, 0))));
  Magma bad(2, {1, 1, 0, 0});
  CHECK_THROWS_AS(TwistFamily(bad, std::vector<FnMap>(2, FnMap::identity(2))),
                  PreconditionError);
  // [1 2 2] is not completely regular.
  CHECK_THROWS_AS(TwistFamily(trivial_shelf(3), std::vector<FnMap>(3, FnMap({1, 2, 2}))),
                  PreconditionError);
}

TEST_CASE("identity twists") {
  for (Magma const& m : {dihedral_quandle(3), fixture::magma("star_only3.txt"), trivial_shelf(2)}) {
    TwistFamily t = identity_twist(m);
    CHECK(is_g_twist(t));
    CHECK(twist_theorem_roundtrip(t));
    SolutionTable s = solution_from_twist(t);
    for (Point a = 0; a < m.size(); ++a)
      for (Point b = 0; b < m.size(); ++b) CHECK(s(a, b) == std::pair{b, m(b, a)});
  }
}

TEST_CASE("automorphism twist of a rack") {
  // x -> -x is an automorphism of Z_3 with x |> y = 2x - y.  For a constant
  // family both sides of the twist law are phi^2.
  Magma       d = dihedral_quandle(3);
  FnMap       neg({0, 2, 1});
  TwistFamily t(d, std::vector<FnMap>(3, neg));
  CHECK(check_L0_com(t));
  CHECK(satisfies_twist_law(t));
  CHECK(is_g_twist(t));
  CHECK(is_special_qlnd_solution(solution_from_twist(t)));
  CHECK(twist_theorem_roundtrip(t));
}

TEST_CASE("translation twists") {
  // With phi = L the twisted map is (L_x(y), L0_{L_x(y)}(x)).  Under (**) this
  // is the derived map conjugated by the flip, not the derived map itself.
  std::size_t differs = 0;
  for (auto const& q : star_starstar_racks(4)) {
    TwistFamily t = translation_twist(q);
    CHECK(is_g_twist(t));
    CHECK(check_hom_lemma(t));
    CHECK(twist_theorem_roundtrip(t));
    SolutionTable r = solution_from_twist(t);
    SolutionTable d = derived_map(q);
    std::size_t   n = q.base.size();
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) {
        Point c = q.L[x](y);
        CHECK(r(x, y) == std::pair{c, q.L_zero[c](x)});
        auto [u, v] = d(y, x);
        CHECK(r(x, y) == std::pair{v, u});
      }
    differs += r == d ? 0 : 1;
  }
  CHECK(differs > 0);
}

TEST_CASE("perturbed families fail on both sides") {
  Magma        d  = trivial_shelf(3);
  auto         en = regular_endomorphisms(d);
  std::size_t  non_twists = 0;
  for (auto const& f : en) {
    std::vector<FnMap> phi(3, FnMap::identity(3));
    phi[0]        = f;
    TwistFamily t(d, phi);
    CHECK(twist_theorem_roundtrip(t));
    if (!is_g_twist(t)) {
      ++non_twists;
      CHECK_FALSE((check_L0_com(t) && is_special_qlnd_solution(twisted_map(t))));
    }
  }
  CHECK(non_twists > 0);
}

TEST_CASE("hom lemma on twists with central idempotents") {
  Magma d = fixture::magma("sss_without_star3.txt");
  for (auto const& f : regular_endomorphisms(d)) {
    TwistFamily t(d, std::vector<FnMap>(3, f));
    if (check_L0_com(t)) CHECK(check_hom_lemma(t));
  }
}

TEST_CASE("twist extracted from a special solution") {
  for (auto const& s : small_clifford_semigroups(4)) {
    SolutionTable b = brace_solution(trivial_weak_brace(s));
    REQUIRE(is_special_qlnd_solution(b));
    TwistFamily t = twist_from_solution(b);
    CHECK(t.base() == conjugation_quasi_quandle(s));
    CHECK(is_g_twist(t));
    CHECK(solution_from_twist(t) == b);
  }
  CHECK_THROWS_AS(twist_from_solution(fixture::solution("lyubashenko3.txt")),
                  PreconditionError);
}

TEST_CASE("solution from a non twist is rejected") {
  Magma              d = trivial_shelf(2);
  std::vector<FnMap> phi{FnMap({0, 0}), FnMap::identity(2)};
  TwistFamily        t(d, phi);
  REQUIRE_FALSE(is_g_twist(t));
  CHECK_THROWS_AS(solution_from_twist(t), PreconditionError);
}

TEST_CASE("regular endomorphisms") {
  Magma d  = dihedral_quandle(3);
  auto  en = regular_endomorphisms(d);
  for (auto const& f : en) {
    CHECK(is_homomorphism(f, d, d));
    CHECK(is_completely_regular(f));
  }
  std::size_t brute = 0;
  for (auto const& f : all_maps(3)) {
    brute += (is_homomorphism(f, d, d) && is_completely_regular(f)) ? 1 : 0;
  }
  CHECK(en.size() == brute);
}

TEST_CASE("centrality of the idempotents is required") {
  // (L0-com) and the twist law hold, but r_phi(x, y) = (x, x) is not quasi
  // left non-degenerate.
  TwistFamily t(trivial_shelf(2), {FnMap({0, 0}), FnMap({1, 1})});
  CHECK(check_L0_com(t));
  CHECK(satisfies_twist_law(t));
  CHECK_FALSE(check_phi_central(t));
  CHECK_FALSE(is_g_twist(t));
  CHECK_FALSE(quasi_left_nondeg(twisted_map(t)));
  CHECK(twist_theorem_roundtrip(t));
}

TEST_CASE("theorem roundtrip on every family over shelves of order <= 3") {
  std::size_t twists = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    EnumerationSpec s;
    s.n      = n;
    s.cls    = StructureClass::shelf;
    s.stream = true;
    for (auto const& m : enumerate(s).items) {
      auto                     en = regular_endomorphisms(m);
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<FnMap> phi;
        for (auto i : idx) phi.push_back(en[i]);
        TwistFamily t(m, phi);
        CHECK(twist_theorem_roundtrip(t));
        twists += is_g_twist(t) ? 1 : 0;
        std::size_t k = 0;
        while (k < n && ++idx[k] == en.size()) idx[k++] = 0;
        if (k == n) break;
      }
    }
  }
  CHECK(twists > 0);
}
