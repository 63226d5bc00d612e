#pragma once

// Meet semilattices and systems (Y, {X_alpha}, {phi_{alpha,beta}}) of
// fibers glued over a semilattice.  The same datum describes a strong
// semilattice of groups (group fibers) and a Plonka system (rack fibers).

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "yaxl/magma.hpp"
#include "yaxl/transform.hpp"

namespace yaxl {

  // Idempotent, commutative and associative.
  bool is_semilattice(Magma const& y);

  // a >= b iff a b = b.
  inline bool semilattice_geq(Magma const& y, Point a, Point b) {
    return y(a, b) == b;
  }

  // a > b with nothing strictly in between.
  bool semilattice_covers(Magma const& y, Point a, Point b);

  // Meet semilattices on m points up to isomorphism, in canonical form.
  std::vector<Magma> semilattices(std::size_t m);

  struct SemilatticeSystem {
    Magma              semilattice;
    std::vector<Magma> fibers;
    // Keyed by (alpha, beta) with alpha >= beta.  Identity entries may be
    // omitted; hom() supplies them.
    std::map<std::pair<Point, Point>, FnMap> homs;

    std::size_t carrier_size() const;
    // Fibers are concatenated in index order: offsets()[alpha] is the first
    // global element of X_alpha.
    std::vector<std::size_t> offsets() const;
    // Global element -> (alpha, local index).
    std::vector<std::pair<Point, Point>> locate() const;

    // Throws InputError when (alpha, beta) is missing and alpha != beta.
    FnMap hom(Point alpha, Point beta) const;
  };

  // Checks the semilattice, each fiber with fiber_ok, every phi a magma
  // homomorphism X_alpha -> X_beta, phi_{alpha,alpha} = id and
  // phi_{beta,gamma} phi_{alpha,beta} = phi_{alpha,gamma}.  Throws InputError
  // naming the first violation.
  void validate_system(SemilatticeSystem const&                     sys,
                       std::function<bool(Magma const&)> const& fiber_ok,
                       char const*                                 fiber_kind);

  // Every system over y whose fibers are drawn from candidates (repetition
  // allowed) with total carrier size <= max_total.  Homomorphisms are chosen
  // freely on covering pairs and composed elsewhere; assignments whose
  // compositions disagree are skipped.  Visits in a fixed order.
  void for_each_system(Magma const& y, std::vector<Magma> const& candidates,
                       std::size_t                                       max_total,
                       std::function<void(SemilatticeSystem const&)> const& visit);

}  // namespace yaxl
