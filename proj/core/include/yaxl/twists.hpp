#pragma once

// Families a -> phi_a of shelf endomorphisms and the map
//   r_phi(a, b) = (phi_a(b), phi^-_{phi_a(b)}(phi_a(b) |> a)).

#include <vector>

#include "yaxl/magma.hpp"
#include "yaxl/shelves.hpp"
#include "yaxl/solution_table.hpp"
#include "yaxl/transform.hpp"

namespace yaxl {

  class TwistFamily {
   public:
    // Throws InputError on size mismatch and PreconditionError unless base
    // is a left shelf and every phi_a is a completely regular endomorphism.
    TwistFamily(Magma base, std::vector<FnMap> phi);

    std::size_t size() const noexcept { return base_.size(); }
    Magma const& base() const noexcept { return base_; }

    FnMap const& phi(Point a) const { return phi_[a]; }
    FnMap const& phi_inv(Point a) const { return phi_inv_[a]; }
    FnMap const& phi_zero(Point a) const { return phi_zero_[a]; }
    std::vector<FnMap> const& phis() const noexcept { return phi_; }

   private:
    Magma              base_;
    std::vector<FnMap> phi_, phi_inv_, phi_zero_;
  };

  // phi^0_a L_b = L_b phi^0_a,  phi^0_{phi_a(b)} = phi^0_a phi^0_b  and
  // phi^0_{phi^0_a(b)} L_{phi^0_a(b)}(a) = L_b(a).
  bool check_L0_com(TwistFamily const& t);

  // phi_a phi_b = phi_{phi_a(b)} phi_{phi^-_{phi_a(b)} L_{phi_a(b)}(a)}.
  bool satisfies_twist_law(TwistFamily const& t);

  // phi^0_a phi_b = phi_b phi^0_a.  Part of the relative commuting inverse
  // hypothesis; without it r_phi need not be quasi left non-degenerate
  // (phi_0 = const 0, phi_1 = const 1 on the trivial shelf of order 2).
  bool check_phi_central(TwistFamily const& t);

  // check_phi_central, check_L0_com and the twist law.
  bool is_g_twist(TwistFamily const& t);

  // phi^0_a and phi^-_a are endomorphisms of the base.  Meaningful when
  // every phi^0_a commutes with every L_b.
  bool check_hom_lemma(TwistFamily const& t);

  // r_phi without any check.
  SolutionTable twisted_map(TwistFamily const& t);

  // A solution that is quasi left non-degenerate and satisfies (A), (B), (C).
  bool is_special_qlnd_solution(SolutionTable const& s);

  // Requires is_g_twist(t); the result is checked with
  // is_special_qlnd_solution.
  SolutionTable solution_from_twist(TwistFamily const& t);

  // Whether [r_phi special and (L0-com)] agrees with is_g_twist(t).
  bool twist_theorem_roundtrip(TwistFamily const& t);

  // lambda as a family over the structure magma of s.  Requires
  // is_special_qlnd_solution(s).
  TwistFamily twist_from_solution(SolutionTable const& s);

  TwistFamily identity_twist(Magma const& base);
  // phi_x = L_x.
  TwistFamily translation_twist(QuasiRackData const& q);

  // Completely regular endomorphisms of m (brute force over n^n maps).
  std::vector<FnMap> regular_endomorphisms(Magma const& m);

}  // namespace yaxl
