#include "yaxl/solutions.hpp"

#include <algorithm>
#include <functional>

#include "yaxl/error.hpp"
#include "yaxl/shelves.hpp"

namespace yaxl {

  bool satisfies_braid_relation(SolutionTable const& s) {
    std::size_t const n = s.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        auto const [a1, b1] = s(x, y);
        for (Point z = 0; z < n; ++z) {
          // left: (r x id)(id x r)(r x id)
          auto const [b2, c2] = s(b1, z);
          auto const [a3, b3] = s(a1, b2);
          // right: (id x r)(r x id)(id x r)
          auto const [q1, r1] = s(y, z);
          auto const [p2, q2] = s(x, q1);
          auto const [q3, r3] = s(q2, r1);
          if (a3 != p2 || b3 != q3 || c2 != r3) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool satisfies_component_identities(SolutionTable const& s) {
    std::size_t const n = s.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        Point const lxy = s.lambda(x, y);
        Point const ryx = s.rho(y, x);
        for (Point z = 0; z < n; ++z) {
          if (s.lambda(x, s.lambda(y, z)) != s.lambda(lxy, s.lambda(ryx, z))) {
            return false;
          }
          Point const lyz = s.lambda(y, z);
          if (s.lambda(s.rho(lyz, x), s.rho(z, y))
              != s.rho(s.lambda(ryx, z), lxy)) {
            return false;
          }
          if (s.rho(z, ryx) != s.rho(s.rho(z, y), s.rho(lyz, x))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_solution(SolutionTable const& s) {
    bool const braid = satisfies_braid_relation(s);
    if (braid != satisfies_component_identities(s)) {
      throw InternalError("is_solution: braid relation and (Y1)-(Y3) disagree");
    }
    return braid;
  }

  namespace {
    void require_solution(SolutionTable const& s, char const* who) {
      if (!is_solution(s)) {
        throw PreconditionError(std::string(who) + ": not a solution");
      }
    }

    void require_left(QuasiNondegData const& d, char const* who) {
      if (!d.left) {
        throw PreconditionError(std::string(who)
                                + ": needs quasi left non-degenerate data");
      }
    }

    // Relative inverses of a family plus pairwise centrality of the
    // idempotents; empty if either fails.
    bool side_inverses(std::vector<FnMap> const& maps, std::vector<FnMap>& inv,
                       std::vector<FnMap>& zero) {
      inv.clear();
      zero.clear();
      for (auto const& f : maps) {
        auto t = relative_inverse(f);
        if (!t) {
          return false;
        }
        inv.push_back(std::move(t->inverse));
        zero.push_back(std::move(t->idempotent));
      }
      for (auto const& e : zero) {
        for (auto const& f : maps) {
          if (!commutes(e, f)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  Classification classify(SolutionTable const& s) {
    require_solution(s, "classify");
    FnMap const    r  = s.as_pair_map();
    FnMap const    r2 = compose(r, r);
    Classification c;
    c.bijective  = r.is_permutation();
    c.involutive = r2.is_identity();
    c.idempotent = r2 == r;
    c.cubic      = compose(r, r2) == r;
    c.left_nd    = true;
    c.right_nd   = true;
    for (Point x = 0; x < s.size(); ++x) {
      c.left_nd  = c.left_nd && s.lambda_map(x).is_permutation();
      c.right_nd = c.right_nd && s.rho_map(x).is_permutation();
    }
    c.nondegenerate = c.left_nd && c.right_nd;
    return c;
  }

  std::optional<SolutionTable> quasi_bijective(SolutionTable const& s) {
    require_solution(s, "quasi_bijective");
    auto t = relative_inverse(s.as_pair_map());
    if (!t) {
      return std::nullopt;
    }
    SolutionTable inv = SolutionTable::from_pair_map(s.size(), t->inverse);
    if (!is_solution(inv)) {
      throw InternalError("quasi_bijective: relative inverse is not a solution");
    }
    return inv;
  }

  std::optional<QuasiNondegData> quasi_left_nondeg(SolutionTable const& s) {
    require_solution(s, "quasi_left_nondeg");
    QuasiNondegData d;
    if (!side_inverses(s.lambda_maps(), d.lam_inv, d.lam_zero)) {
      return std::nullopt;
    }
    d.left = true;
    return d;
  }

  std::optional<QuasiNondegData> quasi_right_nondeg(SolutionTable const& s) {
    require_solution(s, "quasi_right_nondeg");
    QuasiNondegData d;
    if (!side_inverses(s.rho_maps(), d.rho_inv, d.rho_zero)) {
      return std::nullopt;
    }
    d.right = true;
    return d;
  }

  std::optional<QuasiNondegData> quasi_nondeg(SolutionTable const& s) {
    auto l = quasi_left_nondeg(s);
    if (!l) {
      return std::nullopt;
    }
    auto r = quasi_right_nondeg(s);
    if (!r) {
      return std::nullopt;
    }
    l->right    = true;
    l->rho_inv  = std::move(r->rho_inv);
    l->rho_zero = std::move(r->rho_zero);
    return l;
  }

  bool check_A(SolutionTable const& s, QuasiNondegData const& d) {
    require_left(d, "check_A");
    std::size_t const n = s.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        FnMap const& lhs = d.lam_zero[s.lambda(x, y)];
        for (Point z = 0; z < n; ++z) {
          if (lhs(z) != d.lam_zero[x](d.lam_zero[y](z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool check_B(SolutionTable const& s, QuasiNondegData const& d) {
    require_left(d, "check_B");
    std::size_t const n = s.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        Point const rhs
            = d.lam_zero[s.lambda(x, y)](s.rho(d.lam_zero[x](y), x));
        if (s.rho(y, x) != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  bool check_C(SolutionTable const& s, QuasiNondegData const& d) {
    require_left(d, "check_C");
    std::size_t const n = s.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        for (Point z = 0; z < n; ++z) {
          if (d.lam_zero[x](s.rho(y, z)) != s.rho(y, d.lam_zero[x](z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Magma structure_magma(SolutionTable const& s, QuasiNondegData const& d) {
    require_left(d, "structure_magma");
    return Magma::from_function(s.size(), [&](Point x, Point y) {
      return s.lambda(x, s.rho(d.lam_inv[y](x), y));
    });
  }

  Magma derived_shelf(SolutionTable const& s) {
    auto d = quasi_left_nondeg(s);
    if (!d) {
      throw PreconditionError("derived_shelf: not quasi left non-degenerate");
    }
    if (!check_A(s, *d) || !check_B(s, *d) || !check_C(s, *d)) {
      throw PreconditionError("derived_shelf: conditions (A), (B), (C) required");
    }
    Magma m = structure_magma(s, *d);
    if (!is_left_shelf(m)) {
      throw InternalError("derived_shelf: structure magma is not a left shelf");
    }
    return m;
  }

  bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](IdentityCheck const& c) { return c.passed; });
  }

  IdentityReport verify_section3_identities(SolutionTable const& s,
                                            QuasiNondegData const& d) {
    return verify_section3_identities(s, d, check_A(s, d), check_B(s, d),
                                      check_C(s, d));
  }

  IdentityReport verify_section3_identities(SolutionTable const& s,
                                            QuasiNondegData const& d, bool A,
                                            bool B, bool C) {
    require_left(d, "verify_section3_identities");
    std::size_t const n = s.size();
    IdentityReport    report;
    report.A = A;
    report.B = B;
    report.C = C;

    auto lam  = [&](Point x, Point y) { return s.lambda(x, y); };
    auto rho  = [&](Point y, Point x) { return s.rho(y, x); };
    auto linv = [&](Point x, Point y) { return d.lam_inv[x](y); };
    auto l0   = [&](Point x, Point y) { return d.lam_zero[x](y); };

    auto forall2 = [n](auto&& pred) {
      for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
          if (!pred(x, y)) {
            return false;
          }
        }
      }
      return true;
    };
    auto forall3 = [n](auto&& pred) {
      for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
          for (Point z = 0; z < n; ++z) {
            if (!pred(x, y, z)) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto forall4 = [n](auto&& pred) {
      for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
          for (Point z = 0; z < n; ++z) {
            for (Point w = 0; w < n; ++w) {
              if (!pred(x, y, z, w)) {
                return false;
              }
            }
          }
        }
      }
      return true;
    };
    auto add = [&report](std::string name, bool ok) {
      report.checks.push_back({std::move(name), ok});
    };

    if (A) {
      add("A: lambda_{lambda_x(y)} = lambda_x lambda_y lambda^-_{rho_y(x)}",
          forall3([&](Point x, Point y, Point z) {
            return lam(lam(x, y), z) == lam(x, lam(y, linv(rho(y, x), z)));
          }));
    }
    if (B) {
      add("B.1: rho_y(x) = rho_{lambda^0_x(y)}(x)", forall2([&](Point x, Point y) {
            return rho(y, x) == rho(l0(x, y), x);
          }));
      add("B.2a: lambda_x lambda_y = lambda_x lambda_{lambda^0_x(y)}",
          forall3([&](Point x, Point y, Point z) {
            return lam(x, lam(y, z)) == lam(x, lam(l0(x, y), z));
          }));
      add("B.2b: lambda^0_x lambda_y = lambda^0_x lambda_{lambda^0_x(y)}",
          forall3([&](Point x, Point y, Point z) {
            return l0(x, lam(y, z)) == l0(x, lam(l0(x, y), z));
          }));
      add("B.2c: lambda^-_x lambda_y = lambda^-_x lambda_{lambda^0_x(y)}",
          forall3([&](Point x, Point y, Point z) {
            return linv(x, lam(y, z)) == linv(x, lam(l0(x, y), z));
          }));
    }
    if (A && B) {
      add("AB.1a: lambda_{lambda^0_x(y)} = lambda^0_x lambda_y",
          forall3([&](Point x, Point y, Point z) {
            return lam(l0(x, y), z) == l0(x, lam(y, z));
          }));
      add("AB.1b: lambda^0_{lambda^0_x(y)} = lambda^0_x lambda^0_y",
          forall3([&](Point x, Point y, Point z) {
            return l0(l0(x, y), z) == l0(x, l0(y, z));
          }));
      add("AB.2: lambda_{rho_y(x)} = lambda^-_{lambda_x(y)} lambda_x lambda_y",
          forall3([&](Point x, Point y, Point z) {
            return lam(rho(y, x), z) == linv(lam(x, y), lam(x, lam(y, z)));
          }));
      add("AB.3: lambda^-_{lambda_x(y)} lambda_x = lambda_{rho_y(x)} lambda^-_y",
          forall3([&](Point x, Point y, Point z) {
            return linv(lam(x, y), lam(x, z)) == lam(rho(y, x), linv(y, z));
          }));
      add("AB.4: lambda_{rho_{lambda^0_z(y)}(x)} = lambda_{rho_y(x)} "
          "lambda^0_{lambda^0_z(y)}",
          forall4([&](Point x, Point y, Point z, Point w) {
            return lam(rho(l0(z, y), x), w) == lam(rho(y, x), l0(l0(z, y), w));
          }));
      add("AB.5: lambda_{rho_{lambda^0_z(y)}(x)} rho_{lambda^-_z(y)}(z) = "
          "lambda_{rho_y(x)} rho_{lambda^-_z(y)}(z)",
          forall3([&](Point x, Point y, Point z) {
            Point const t = rho(linv(z, y), z);
            return lam(rho(l0(z, y), x), t) == lam(rho(y, x), t);
          }));
      add("AB.6: lambda^0_{lambda^-_x(y)} lambda^-_x = lambda^0_{lambda^0_x(y)} "
          "lambda^-_x",
          forall3([&](Point x, Point y, Point z) {
            return l0(linv(x, y), linv(x, z)) == l0(l0(x, y), linv(x, z));
          }));

      Magma const shelf = structure_magma(s, d);
      add("hom.1: rho_y(x) = lambda^-_{lambda_x(y)}(lambda_x(y) |>_r x)",
          forall2([&](Point x, Point y) {
            Point const t = lam(x, y);
            return rho(y, x) == linv(t, shelf(t, x));
          }));
      add("hom.2: lambda_x, lambda^-_x, lambda^0_x are |>_r homomorphisms",
          forall3([&](Point x, Point a, Point b) {
            Point const ab = shelf(a, b);
            return lam(x, ab) == shelf(lam(x, a), lam(x, b))
                   && linv(x, ab) == shelf(linv(x, a), linv(x, b))
                   && l0(x, ab) == shelf(l0(x, a), l0(x, b));
          }));
      if (C) {
        add("ABC.1: rho_{lambda^0_y lambda^-_z(x)}(z) = lambda^0_y "
            "rho_{lambda^-_z(x)}(z)",
            forall3([&](Point x, Point y, Point z) {
              return rho(l0(y, linv(z, x)), z) == l0(y, rho(linv(z, x), z));
            }));
        add("ABC.2: lambda_{rho_{lambda^-_y(x)}(y)} lambda^0_y = "
            "lambda_{rho_{lambda^-_y(x)}(y)}",
            forall3([&](Point x, Point y, Point z) {
              Point const t = rho(linv(y, x), y);
              return lam(t, l0(y, z)) == lam(t, z);
            }));
        add("ABC.3: lambda_y lambda_{rho_{lambda^-_x(y)}(x)} = lambda_x "
            "lambda_{lambda^-_x(y)}",
            forall3([&](Point x, Point y, Point z) {
              return lam(y, lam(rho(linv(x, y), x), z))
                     == lam(x, lam(linv(x, y), z));
            }));
        add("ABC.shelf: |>_r is left self-distributive", is_left_shelf(shelf));
      }
    }
    return report;
  }

  SolutionTable constant_lambda_twist(SolutionTable const& s) {
    require_solution(s, "constant_lambda_twist");
    std::size_t const n   = s.size();
    FnMap const       lam = s.lambda_map(0);
    for (Point x = 1; x < n; ++x) {
      if (s.lambda_map(x) != lam) {
        throw PreconditionError("constant_lambda_twist: lambda_x depends on x");
      }
    }
    auto t = relative_inverse(lam);
    if (!t) {
      throw PreconditionError(
          "constant_lambda_twist: lambda is not completely regular");
    }
    FnMap const& zero = t->idempotent;
    for (Point x = 0; x < n; ++x) {
      FnMap const rx = s.rho_map(x);
      if (!commutes(zero, rx)) {
        throw PreconditionError(
            "constant_lambda_twist: lambda^0 does not commute with rho_x");
      }
      if (compose(zero, s.rho_map(zero(x))) != rx) {
        throw PreconditionError(
            "constant_lambda_twist: rho_x != lambda^0 rho_{lambda^0(x)}");
      }
    }
    std::vector<Point> l(n * n), r(n * n);
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        l[x * n + y] = zero(y);
        r[y * n + x] = lam(s.rho(t->inverse(y), x));
      }
    }
    SolutionTable out(n, std::move(l), std::move(r));
    if (!is_solution(out) || !quasi_left_nondeg(out)) {
      throw InternalError(
          "constant_lambda_twist: result is not a quasi left non-degenerate "
          "solution");
    }
    return out;
  }

  SolutionTable lyubashenko(FnMap const& f, FnMap const& g) {
    if (f.size() != g.size()) {
      throw InputError("lyubashenko: size mismatch");
    }
    if (!commutes(f, g)) {
      throw PreconditionError("lyubashenko: f and g do not commute");
    }
    auto tf = relative_inverse(f);
    auto tg = relative_inverse(g);
    if (!tf || !tg) {
      throw PreconditionError("lyubashenko: f and g must be completely regular");
    }
    std::size_t const n = f.size();
    SolutionTable     out
        = SolutionTable::from_families(std::vector<FnMap>(n, f), std::vector<FnMap>(n, g));
    if (!is_solution(out) || !quasi_nondeg(out)) {
      throw InternalError("lyubashenko: not a quasi non-degenerate solution");
    }
    if (g == tf->inverse) {
      FnMap const r = out.as_pair_map();
      if (compose(r, compose(r, r)) != r) {
        throw InternalError("lyubashenko: r^3 != r for g = f^-");
      }
    }
    return out;
  }

}  // namespace yaxl
