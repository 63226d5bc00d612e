#pragma once

// Set-theoretic solutions of the Yang-Baxter equation on finite carriers:
// verification, classification, relative inverses of r and of its
// component maps, and the shelf attached to quasi left non-degenerate
// solutions.

#include <optional>
#include <string>
#include <vector>

#include "yaxl/magma.hpp"
#include "yaxl/solution_table.hpp"
#include "yaxl/transform.hpp"

namespace yaxl {

  // (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on all n^3 triples.
  bool satisfies_braid_relation(SolutionTable const& s);
  // The three component identities (Y1), (Y2), (Y3) in lambda/rho form.
  bool satisfies_component_identities(SolutionTable const& s);

  // Both checks; throws InternalError if they disagree.
  bool is_solution(SolutionTable const& s);

  struct Classification {
    bool bijective     = false;
    bool involutive    = false;
    bool idempotent    = false;
    bool cubic         = false;  // r^3 = r
    bool left_nd       = false;
    bool right_nd      = false;
    bool nondegenerate = false;
  };

  // Throws PreconditionError if s is not a solution.
  Classification classify(SolutionTable const& s);

  // The relative inverse r^- of r viewed as a transformation of the pair
  // set (pair (x, y) encoded as x * n + y).  Requires is_solution(s).
  std::optional<SolutionTable> quasi_bijective(SolutionTable const& s);

  struct QuasiNondegData {
    bool               left  = false;
    bool               right = false;
    std::vector<FnMap> lam_inv, lam_zero;  // filled when left
    std::vector<FnMap> rho_inv, rho_zero;  // filled when right
  };

  // Requires is_solution(s).
  std::optional<QuasiNondegData> quasi_left_nondeg(SolutionTable const& s);
  std::optional<QuasiNondegData> quasi_right_nondeg(SolutionTable const& s);
  std::optional<QuasiNondegData> quasi_nondeg(SolutionTable const& s);

  // Conditions on a quasi left non-degenerate solution (d.left required):
  //   (A) lambda^0_{lambda_x(y)} = lambda^0_x lambda^0_y
  //   (B) rho_y(x) = lambda^0_{lambda_x(y)} rho_{lambda^0_x(y)}(x)
  //   (C) lambda^0_x rho_y = rho_y lambda^0_x
  bool check_A(SolutionTable const& s, QuasiNondegData const& d);
  bool check_B(SolutionTable const& s, QuasiNondegData const& d);
  bool check_C(SolutionTable const& s, QuasiNondegData const& d);

  // x |>_r y = lambda_x rho_{lambda^-_y(x)}(y).
  Magma structure_magma(SolutionTable const& s, QuasiNondegData const& d);

  // structure_magma for a quasi left non-degenerate solution satisfying
  // (A), (B) and (C); the result is checked to be a left shelf.
  Magma derived_shelf(SolutionTable const& s);

  struct IdentityCheck {
    std::string name;
    bool        passed = false;
  };

  struct IdentityReport {
    bool                       A = false, B = false, C = false;
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
  };

  // Checks every consequence of (A), (B), (C) whose hypotheses hold.
  IdentityReport verify_section3_identities(SolutionTable const& s,
                                            QuasiNondegData const& d, bool A,
                                            bool B, bool C);
  IdentityReport verify_section3_identities(SolutionTable const& s,
                                            QuasiNondegData const& d);

  // For r(x, y) = (lambda(y), rho_y(x)) with one shared completely regular
  // lambda, lambda^0 rho_x = rho_x lambda^0 and rho_x = lambda^0
  // rho_{lambda^0(x)}:  s(x, y) = (lambda^0(y), lambda rho_{lambda^-(y)}(x)).
  SolutionTable constant_lambda_twist(SolutionTable const& s);

  // r(x, y) = (f(y), g(x)) for commuting completely regular f, g.
  SolutionTable lyubashenko(FnMap const& f, FnMap const& g);

}  // namespace yaxl
