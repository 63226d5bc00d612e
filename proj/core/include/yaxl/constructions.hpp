#pragma once

// Example families: groups, Clifford semigroups, the conjugation / core /
// deformed quasi racks they carry, constant shelves, rack-cocycle
// extensions and weak braces with their solutions.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "yaxl/magma.hpp"
#include "yaxl/semilattice.hpp"
#include "yaxl/solution_table.hpp"
#include "yaxl/transform.hpp"

namespace yaxl {

  // Groups ------------------------------------------------------------------

  bool is_group(Magma const& m);
  Magma cyclic_group(std::size_t n);
  Magma klein_four_group();
  // (a, b)(c, d) = (ac, bd), element (a, b) stored as a * |B| + b.
  Magma direct_product(Magma const& a, Magma const& b);
  // All groups of order <= max_order (at most 5) up to isomorphism.
  std::vector<Magma> small_groups(std::size_t max_order);

  // Inverse and Clifford semigroups ------------------------------------------

  // The unique y with x y x = x and y x y = y for every x, if the table is an
  // associative inverse semigroup.
  std::optional<std::vector<Point>> semigroup_inverses(Magma const& m);
  bool is_inverse_semigroup(Magma const& m);
  // Inverse semigroup whose idempotents are central.
  bool is_clifford(Magma const& m);

  class CliffordTable {
   public:
    // Throws InputError unless is_clifford(mul).
    explicit CliffordTable(Magma mul);

    std::size_t size() const noexcept { return mul_.size(); }
    Magma const& mul() const noexcept { return mul_; }
    Point operator()(Point x, Point y) const noexcept { return mul_(x, y); }
    Point inv(Point x) const { return inv_[x]; }
    // x^0 = x x^-
    Point zero(Point x) const { return mul_(x, inv_[x]); }
    std::vector<Point> const& inverses() const noexcept { return inv_; }
    std::vector<Point> idempotents() const;
    bool is_idempotent(Point x) const { return mul_(x, x) == x; }

   private:
    Magma              mul_;
    std::vector<Point> inv_;
  };

  // Product of a in G_alpha and b in G_beta is
  // phi_{alpha,ab}(a) phi_{beta,ab}(b) in G_{ab}.  Groups are validated.
  CliffordTable clifford_from_system(SemilatticeSystem const& sys);

  // Clifford semigroups from every strong semilattice of groups with at most
  // max_size elements.  Systems, not isomorphism classes: duplicates occur.
  std::vector<CliffordTable> small_clifford_semigroups(std::size_t max_size);

  // Quasi racks on Clifford semigroups ----------------------------------------

  // x |> y = x^- y x.
  Magma conjugation_quasi_quandle(CliffordTable const& s);
  // x |> y = x y^- x.
  Magma core_quasi_quandle(CliffordTable const& s);
  // x |> y = x^- y x e, e idempotent.  L^-_x = L_{x^-} is checked.
  Magma deformed_quasi_rack(CliffordTable const& s, Point e);

  // Other shelves -------------------------------------------------------------

  // x |> y = y.
  Magma trivial_shelf(std::size_t n);
  // x |> y = 2x - y mod n.
  Magma dihedral_quandle(std::size_t n);
  // x |> y = f(y), f idempotent.
  Magma constant_shelf(FnMap const& f);

  // alpha[(i * |X| + j) * s_size + s] = alpha_{i,j}(s), a map on {0..s_size-1}.
  // Element (i, s) of the product is i * s_size + s and
  //   L_{(i,s)}(j, t) = (i |> j, alpha_{i,j}(s)(t)).
  // Throws PreconditionError naming the first failing condition.
  Magma cocycle_extension(Magma const& rack, std::size_t s_size,
                          std::vector<FnMap> const& alpha);

  // Weak braces ---------------------------------------------------------------

  struct WeakBraceTable {
    Magma add;  // x + y
    Magma mul;  // x o y

    std::size_t size() const noexcept { return add.size(); }
  };

  struct WeakBraceReport {
    bool add_clifford = false;
    bool mul_inverse  = false;
    bool mul_clifford = false;
    // First triple (x, y, z) with x o (y + z) != x o y - x + x o z.
    std::optional<std::array<Point, 3>> distributivity_failure;
    // First x with x o x^- != -x + x.
    std::optional<Point> inverse_failure;

    bool valid() const {
      return add_clifford && mul_inverse && !distributivity_failure && !inverse_failure;
    }
    bool dual() const { return valid() && mul_clifford; }
  };

  WeakBraceReport weak_brace_validate(WeakBraceTable const& b);
  bool is_dual(WeakBraceTable const& b);

  // x + y = x o y on a Clifford semigroup.
  WeakBraceTable trivial_weak_brace(CliffordTable const& s);
  // x +op y = y + x.
  WeakBraceTable opposite_brace(WeakBraceTable const& b);

  // lambda_x(y) = -x + x o y and rho_y(x) = lambda_x(y)^- o x o y.
  std::vector<FnMap> brace_lambda(WeakBraceTable const& b);
  std::vector<FnMap> brace_rho(WeakBraceTable const& b);
  // Checked to be a solution; for dual braces r r^op r = r, r^op r r^op =
  // r^op and r r^op = r^op r are checked too.
  SolutionTable brace_solution(WeakBraceTable const& b);

  // {lambda_x} and {rho_x} are closed under composition, consist of completely
  // regular maps and their idempotents are central in each set.  Requires a
  // dual brace.
  bool lambda_rho_clifford_check(WeakBraceTable const& b);

  // The structure magma of brace_solution(b) is x |> y = -x + y + x.
  bool brace_structure_shelf_check(WeakBraceTable const& b);

  // Skew braces (both operations groups) of order <= max_order (at most 4)
  // up to isomorphism.
  std::vector<WeakBraceTable> small_skew_braces(std::size_t max_order);

}  // namespace yaxl
