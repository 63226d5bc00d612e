#pragma once

// Plonka sums of racks over a semilattice and the decomposition of quasi
// racks with (*) and (***) back into such sums.

#include "yaxl/magma.hpp"
#include "yaxl/semilattice.hpp"
#include "yaxl/shelves.hpp"

namespace yaxl {

  using PlonkaSystem = SemilatticeSystem;

  // validate_system with rack fibers.
  void validate_plonka_system(PlonkaSystem const& p);

  // a |> b = phi_{alpha,ab}(a) |>_{ab} phi_{beta,ab}(b) on the disjoint union.
  // Checked to be a left shelf.
  Magma plonka_sum(PlonkaSystem const& p);

  struct SumStructureReport {
    bool quasi_rack    = false;
    bool star          = false;
    bool starstarstar  = false;
    bool closed_forms  = false;  // L^- and L^0 match the fiberwise formulas
    bool fibers_quandles = false;
    bool quasi_quandle = false;
  };

  // Throws InternalError if the sum fails to be a quasi rack with (*), (***)
  // and the closed forms, or if quandle fibers give a non quasi quandle.
  SumStructureReport sum_structure_check(PlonkaSystem const& p);

  // Requires check_star and check_starstarstar.  Semilattice points are the
  // distinct L^0_a in order of first occurrence, with composition as meet;
  // fiber elements keep ascending carrier order.
  PlonkaSystem decompose(QuasiRackData const& q);

  // plonka_sum(decompose(q)) is isomorphic to q.base.
  bool roundtrip(QuasiRackData const& q);

  // The derived map of the sum agrees with the fiber derived maps applied
  // after projecting both arguments to the meet fiber.
  bool solution_as_strong_semilattice(PlonkaSystem const& p);

  // An isomorphism of the sums carrying fibers onto fibers, compatible with a
  // semilattice isomorphism and with the structure maps.  Carrier size is
  // bounded by kMaxCanonicalSize.
  bool systems_isomorphic(PlonkaSystem const& a, PlonkaSystem const& b);

}  // namespace yaxl
