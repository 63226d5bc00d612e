#include "yaxl/twists.hpp"

#include "yaxl/error.hpp"
#include "yaxl/solutions.hpp"

namespace yaxl {

  TwistFamily::TwistFamily(Magma base, std::vector<FnMap> phi)
      : base_(std::move(base)), phi_(std::move(phi)) {
    std::size_t const n = base_.size();
    if (phi_.size() != n) {
      throw InputError("TwistFamily: expected " + std::to_string(n) + " maps, got "
                       + std::to_string(phi_.size()));
    }
    if (!is_left_shelf(base_)) {
      throw PreconditionError("TwistFamily: base is not a left shelf");
    }
    for (Point a = 0; a < n; ++a) {
      if (phi_[a].size() != n || !phi_[a].is_self_map()) {
        throw InputError("TwistFamily: phi_" + std::to_string(a)
                         + " has the wrong size");
      }
      if (!is_homomorphism(phi_[a], base_, base_)) {
        throw PreconditionError("TwistFamily: phi_" + std::to_string(a)
                                + " is not a shelf endomorphism");
      }
      auto t = relative_inverse(phi_[a]);
      if (!t) {
        throw PreconditionError("TwistFamily: phi_" + std::to_string(a)
                                + " is not completely regular");
      }
      phi_inv_.push_back(std::move(t->inverse));
      phi_zero_.push_back(std::move(t->idempotent));
    }
  }

  bool check_L0_com(TwistFamily const& t) {
    std::size_t const n = t.size();
    Magma const&      m = t.base();
    for (Point a = 0; a < n; ++a) {
      FnMap const& za = t.phi_zero(a);
      for (Point b = 0; b < n; ++b) {
        FnMap const& zb   = t.phi_zero(b);
        FnMap const& zab  = t.phi_zero(t.phi(a)(b));
        Point const  c    = za(b);
        for (Point x = 0; x < n; ++x) {
          if (za(m(b, x)) != m(b, za(x)) || zab(x) != za(zb(x))) {
            return false;
          }
        }
        if (t.phi_zero(c)(m(c, a)) != m(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool satisfies_twist_law(TwistFamily const& t) {
    std::size_t const n = t.size();
    Magma const&      m = t.base();
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        Point const  c     = t.phi(a)(b);
        FnMap const& outer = t.phi(c);
        FnMap const& inner = t.phi(t.phi_inv(c)(m(c, a)));
        for (Point x = 0; x < n; ++x) {
          if (t.phi(a)(t.phi(b)(x)) != outer(inner(x))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool check_phi_central(TwistFamily const& t) {
    for (Point a = 0; a < t.size(); ++a) {
      for (Point b = 0; b < t.size(); ++b) {
        if (!commutes(t.phi_zero(a), t.phi(b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_g_twist(TwistFamily const& t) {
    return check_phi_central(t) && check_L0_com(t) && satisfies_twist_law(t);
  }

  bool check_hom_lemma(TwistFamily const& t) {
    for (Point a = 0; a < t.size(); ++a) {
      if (!is_homomorphism(t.phi_zero(a), t.base(), t.base())
          || !is_homomorphism(t.phi_inv(a), t.base(), t.base())) {
        return false;
      }
    }
    return true;
  }

  SolutionTable twisted_map(TwistFamily const& t) {
    std::size_t const  n = t.size();
    std::vector<Point> lam(n * n), rho(n * n);
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        Point const c = t.phi(a)(b);
        lam[a * n + b] = c;
        rho[b * n + a] = t.phi_inv(c)(t.base()(c, a));
      }
    }
    return SolutionTable(n, std::move(lam), std::move(rho));
  }

  bool is_special_qlnd_solution(SolutionTable const& s) {
    if (!is_solution(s)) {
      return false;
    }
    auto d = quasi_left_nondeg(s);
    return d && check_A(s, *d) && check_B(s, *d) && check_C(s, *d);
  }

  SolutionTable solution_from_twist(TwistFamily const& t) {
    if (!is_g_twist(t)) {
      throw PreconditionError("solution_from_twist: not a g-twist");
    }
    SolutionTable s = twisted_map(t);
    if (!is_special_qlnd_solution(s)) {
      throw InternalError(
          "solution_from_twist: r_phi is not a quasi left non-degenerate "
          "solution with (A), (B), (C)");
    }
    return s;
  }

  bool twist_theorem_roundtrip(TwistFamily const& t) {
    bool const standing = check_L0_com(t);
    bool const good     = standing && is_special_qlnd_solution(twisted_map(t));
    return good == is_g_twist(t);
  }

  TwistFamily twist_from_solution(SolutionTable const& s) {
    if (!is_special_qlnd_solution(s)) {
      throw PreconditionError(
          "twist_from_solution: needs a quasi left non-degenerate solution "
          "with (A), (B), (C)");
    }
    auto d = quasi_left_nondeg(s);
    return TwistFamily(structure_magma(s, *d), s.lambda_maps());
  }

  TwistFamily identity_twist(Magma const& base) {
    return TwistFamily(base, std::vector<FnMap>(base.size(), FnMap::identity(base.size())));
  }

  TwistFamily translation_twist(QuasiRackData const& q) {
    return TwistFamily(q.base, q.L);
  }

  std::vector<FnMap> regular_endomorphisms(Magma const& m) {
    std::vector<FnMap> out;
    for (auto& f : homomorphisms(m, m)) {
      if (is_completely_regular(f)) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

}  // namespace yaxl
