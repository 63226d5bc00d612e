#pragma once

// Shelves, racks, quandles and quasi racks.
//
// A quasi rack is a left shelf whose left translations L_x are completely
// regular transformations, with every idempotent L_x^0 = L_x L_x^- commuting
// with every translation L_y.

#include <optional>
#include <vector>

#include "yaxl/magma.hpp"
#include "yaxl/solution_table.hpp"
#include "yaxl/transform.hpp"

namespace yaxl {

  bool is_left_shelf(Magma const& m);
  // (x <| y) <| z = (x <| z) <| (y <| z), with table[x][y] = x <| y.
  bool is_right_shelf(Magma const& m);
  bool is_rack(Magma const& m);
  bool is_quandle(Magma const& m);

  struct QuasiRackData {
    Magma              base;
    std::vector<FnMap> L;       // L[x] = L_x
    std::vector<FnMap> L_inv;   // L_x^-
    std::vector<FnMap> L_zero;  // L_x^0

    std::size_t size() const noexcept { return base.size(); }
  };

  std::optional<QuasiRackData> quasi_rack_structure(Magma const& m);

  bool is_quasi_quandle(QuasiRackData const& q);

  // (*)   L^0_{L_x(y)} = L^0_x L^0_y
  bool check_star(QuasiRackData const& q);
  // (**)  L_y(x) = L_{L^0_x(y)}(x)
  bool check_starstar(QuasiRackData const& q);
  // (***) L^0_x(x) = x
  bool check_starstarstar(QuasiRackData const& q);

  // r(x, y) = (L^0_x(y), L_y(x)).  Not necessarily a solution.
  SolutionTable derived_map(QuasiRackData const& q);

  // r^-(x, y) = (L^-_x(y), L^0_y(x)).  Requires (***); the three relative
  // inverse identities against derived_map are checked before returning.
  SolutionTable derived_relative_inverse(QuasiRackData const& q);

  // y <| x := L^-_x(y), stored as table[y][x].  Requires (***).
  Magma opposite_right_quasi_rack(QuasiRackData const& q);

  // The four identities
  //   L^0_x L_y = L^0_x L_{L^0_x(y)},   L_x L_y   = L_{L^0_y(x)} L_y,
  //   L^0_x L_y = L^0_{L_y(x)} L_y,     L^0_x L^0_{L^-_x(y)} = L^0_x L^0_y.
  bool verify_translation_lemma(QuasiRackData const& q);

  // Lexicographically least relabelling (row-major) over all n! carrier
  // permutations.  Throws PreconditionError for n > kMaxCanonicalSize.
  inline constexpr std::size_t kMaxCanonicalSize = 8;

  Magma canonical_form(Magma const& m);
  bool  is_canonical(Magma const& m);
  bool  are_isomorphic(Magma const& a, Magma const& b);

  // Magma homomorphisms a -> b (brute force over |b|^|a| maps).
  std::vector<FnMap> homomorphisms(Magma const& a, Magma const& b);
  bool is_homomorphism(FnMap const& f, Magma const& a, Magma const& b);

}  // namespace yaxl
