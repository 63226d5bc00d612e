#include "yaxl/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "yaxl/error.hpp"
#include "yaxl/shelves.hpp"
#include "yaxl/solutions.hpp"

namespace yaxl {

  bool is_group(Magma const& m) {
    std::size_t const n = m.size();
    if (!is_associative(m)) {
      return false;
    }
    std::optional<Point> unit;
    for (Point e = 0; e < n && !unit; ++e) {
      bool ok = true;
      for (Point x = 0; x < n && ok; ++x) {
        ok = m(e, x) == x && m(x, e) == x;
      }
      if (ok) {
        unit = e;
      }
    }
    if (!unit) {
      return false;
    }
    for (Point x = 0; x < n; ++x) {
      bool found = false;
      for (Point y = 0; y < n && !found; ++y) {
        found = m(x, y) == *unit && m(y, x) == *unit;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Magma cyclic_group(std::size_t n) {
    return Magma::from_function(n, [n](Point x, Point y) { return (x + y) % n; });
  }

  Magma direct_product(Magma const& a, Magma const& b) {
    std::size_t const nb = b.size();
    return Magma::from_function(a.size() * nb, [&](Point x, Point y) {
      return a(x / nb, y / nb) * nb + b(x % nb, y % nb);
    });
  }

  Magma klein_four_group() {
    return direct_product(cyclic_group(2), cyclic_group(2));
  }

  std::vector<Magma> small_groups(std::size_t max_order) {
    if (max_order > 5) {
      throw PreconditionError("small_groups: only orders up to 5 are tabulated");
    }
    std::vector<Magma> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      out.push_back(cyclic_group(n));
      if (n == 4) {
        out.push_back(klein_four_group());
      }
    }
    return out;
  }

  std::optional<std::vector<Point>> semigroup_inverses(Magma const& m) {
    if (!is_associative(m)) {
      return std::nullopt;
    }
    std::size_t const  n = m.size();
    std::vector<Point> inv(n);
    for (Point x = 0; x < n; ++x) {
      int count = 0;
      for (Point y = 0; y < n; ++y) {
        if (m(m(x, y), x) == x && m(m(y, x), y) == y) {
          inv[x] = y;
          ++count;
        }
      }
      if (count != 1) {
        return std::nullopt;
      }
    }
    return inv;
  }

  bool is_inverse_semigroup(Magma const& m) {
    return semigroup_inverses(m).has_value();
  }

  bool is_clifford(Magma const& m) {
    if (!is_inverse_semigroup(m)) {
      return false;
    }
    for (Point e = 0; e < m.size(); ++e) {
      if (m(e, e) != e) {
        continue;
      }
      for (Point x = 0; x < m.size(); ++x) {
        if (m(e, x) != m(x, e)) {
          return false;
        }
      }
    }
    return true;
  }

  CliffordTable::CliffordTable(Magma mul) : mul_(std::move(mul)) {
    if (!is_clifford(mul_)) {
      throw InputError("CliffordTable: table is not a Clifford semigroup");
    }
    inv_ = *semigroup_inverses(mul_);
  }

  std::vector<Point> CliffordTable::idempotents() const {
    std::vector<Point> out;
    for (Point x = 0; x < size(); ++x) {
      if (is_idempotent(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  CliffordTable clifford_from_system(SemilatticeSystem const& sys) {
    validate_system(sys, is_group, "group");
    auto const        off = sys.offsets();
    auto const        at  = sys.locate();
    Magma const&      y   = sys.semilattice;
    std::size_t const n   = sys.carrier_size();
    Magma             mul = Magma::from_function(n, [&](Point u, Point v) {
      auto const [a, i] = at[u];
      auto const [b, j] = at[v];
      Point const c     = y(a, b);
      return static_cast<Point>(off[c])
             + sys.fibers[c](sys.hom(a, c)(i), sys.hom(b, c)(j));
    });
    return CliffordTable(std::move(mul));
  }

  std::vector<CliffordTable> small_clifford_semigroups(std::size_t max_size) {
    std::vector<Magma> const   groups = small_groups(std::min<std::size_t>(max_size, 5));
    std::vector<CliffordTable> out;
    for (std::size_t m = 1; m <= max_size; ++m) {
      for (auto const& y : semilattices(m)) {
        for_each_system(y, groups, max_size, [&](SemilatticeSystem const& sys) {
          out.push_back(clifford_from_system(sys));
        });
      }
    }
    return out;
  }

  Magma conjugation_quasi_quandle(CliffordTable const& s) {
    Magma m = Magma::from_function(s.size(),
                                   [&](Point x, Point y) { return s(s(s.inv(x), y), x); });
    auto q = quasi_rack_structure(m);
    if (!q || !is_quasi_quandle(*q)) {
      throw InternalError("conjugation_quasi_quandle: not a quasi quandle");
    }
    return m;
  }

  Magma core_quasi_quandle(CliffordTable const& s) {
    Magma m = Magma::from_function(s.size(),
                                   [&](Point x, Point y) { return s(s(x, s.inv(y)), x); });
    auto q = quasi_rack_structure(m);
    if (!q || !is_quasi_quandle(*q)) {
      throw InternalError("core_quasi_quandle: not a quasi quandle");
    }
    return m;
  }

  Magma deformed_quasi_rack(CliffordTable const& s, Point e) {
    if (e >= s.size() || !s.is_idempotent(e)) {
      throw PreconditionError("deformed_quasi_rack: e is not an idempotent");
    }
    Magma m = Magma::from_function(
        s.size(), [&](Point x, Point y) { return s(s(s(s.inv(x), y), x), e); });
    auto q = quasi_rack_structure(m);
    if (!q) {
      throw InternalError("deformed_quasi_rack: not a quasi rack");
    }
    for (Point x = 0; x < s.size(); ++x) {
      if (q->L_inv[x] != q->L[s.inv(x)]) {
        throw InternalError("deformed_quasi_rack: L^-_x != L_{x^-}");
      }
    }
    return m;
  }

  Magma trivial_shelf(std::size_t n) {
    return Magma::from_function(n, [](Point, Point y) { return y; });
  }

  Magma dihedral_quandle(std::size_t n) {
    return Magma::from_function(n, [n](Point x, Point y) { return (2 * x + n - y) % n; });
  }

  Magma constant_shelf(FnMap const& f) {
    if (!f.is_idempotent()) {
      throw PreconditionError("constant_shelf: f is not idempotent");
    }
    Magma m = Magma::from_function(f.size(), [&](Point, Point y) { return f(y); });
    if (!quasi_rack_structure(m)) {
      throw InternalError("constant_shelf: not a quasi rack");
    }
    return m;
  }

  Magma cocycle_extension(Magma const& rack, std::size_t s_size,
                          std::vector<FnMap> const& alpha) {
    if (!is_rack(rack)) {
      throw PreconditionError("cocycle_extension: base is not a rack");
    }
    std::size_t const nx = rack.size();
    std::size_t const ns = s_size;
    if (ns == 0 || alpha.size() != nx * nx * ns) {
      throw InputError("cocycle_extension: expected |X|^2 |S| maps");
    }
    auto a = [&](Point i, Point j, Point s) -> FnMap const& {
      return alpha[(i * nx + j) * ns + s];
    };
    std::vector<FnMap> zero;
    for (auto const& f : alpha) {
      if (f.size() != ns || !f.is_self_map()) {
        throw InputError("cocycle_extension: alpha map on the wrong carrier");
      }
      auto t = relative_inverse(f);
      if (!t) {
        throw PreconditionError(
            "cocycle_extension: condition 1 fails (alpha not completely regular)");
      }
      zero.push_back(std::move(t->idempotent));
    }
    auto a0 = [&](Point i, Point j, Point s) -> FnMap const& {
      return zero[(i * nx + j) * ns + s];
    };
    for (Point i = 0; i < nx; ++i) {
      for (Point j = 0; j < nx; ++j) {
        for (Point k = 0; k < nx; ++k) {
          for (Point s = 0; s < ns; ++s) {
            for (Point t = 0; t < ns; ++t) {
              FnMap const& lhs1 = a(i, rack(j, k), s);
              FnMap const& lhs2 = a(j, k, t);
              FnMap const& rhs1 = a(rack(i, j), rack(i, k), a(i, j, s)(t));
              FnMap const& rhs2 = a(i, k, s);
              for (Point u = 0; u < ns; ++u) {
                if (lhs1(lhs2(u)) != rhs1(rhs2(u))) {
                  throw PreconditionError("cocycle_extension: condition 2 fails");
                }
                if (lhs2(a0(i, k, s)(u)) != a0(i, rack(j, k), s)(lhs2(u))) {
                  throw PreconditionError("cocycle_extension: condition 3 fails");
                }
              }
            }
          }
        }
      }
    }
    Magma m = Magma::from_function(nx * ns, [&](Point p, Point q) {
      Point const i = p / ns, s = p % ns, j = q / ns, t = q % ns;
      return rack(i, j) * ns + a(i, j, s)(t);
    });
    auto qr = quasi_rack_structure(m);
    if (!qr) {
      throw InternalError("cocycle_extension: product is not a quasi rack");
    }
    for (Point p = 0; p < nx * ns; ++p) {
      for (Point q = 0; q < nx * ns; ++q) {
        Point const i = p / ns, s = p % ns, j = q / ns, t = q % ns;
        if (qr->L_zero[p](q) != j * ns + a0(i, j, s)(t)) {
          throw InternalError("cocycle_extension: L^0 closed form fails");
        }
      }
    }
    return m;
  }

  namespace {
    struct BraceOps {
      std::vector<Point> neg;   // additive inverse -x
      std::vector<Point> minv;  // multiplicative inverse x^-
    };

    BraceOps require_valid(WeakBraceTable const& b, char const* who) {
      if (!weak_brace_validate(b).valid()) {
        throw PreconditionError(std::string(who) + ": not a weak brace");
      }
      return {*semigroup_inverses(b.add), *semigroup_inverses(b.mul)};
    }

    SolutionTable raw_brace_solution(WeakBraceTable const& b, BraceOps const& ops) {
      std::size_t const  n = b.size();
      std::vector<Point> lam(n * n), rho(n * n);
      for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
          Point const l  = b.add(ops.neg[x], b.mul(x, y));
          lam[x * n + y] = l;
          rho[y * n + x] = b.mul(b.mul(ops.minv[l], x), y);
        }
      }
      return SolutionTable(n, std::move(lam), std::move(rho));
    }

    bool is_clifford_subsemigroup(std::vector<FnMap> const& maps) {
      std::set<FnMap> const set(maps.begin(), maps.end());
      for (auto const& f : set) {
        if (!is_completely_regular(f)) {
          return false;
        }
        for (auto const& g : set) {
          if (!set.contains(compose(f, g))) {
            return false;
          }
          if (f.is_idempotent() && !commutes(f, g)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  WeakBraceReport weak_brace_validate(WeakBraceTable const& b) {
    WeakBraceReport r;
    if (b.add.size() != b.mul.size()) {
      return r;
    }
    r.add_clifford = is_clifford(b.add);
    auto minv      = semigroup_inverses(b.mul);
    r.mul_inverse  = minv.has_value();
    r.mul_clifford = r.mul_inverse && is_clifford(b.mul);
    if (!r.add_clifford || !r.mul_inverse) {
      return r;
    }
    auto const        neg = *semigroup_inverses(b.add);
    std::size_t const n   = b.size();
    for (Point x = 0; x < n && !r.distributivity_failure; ++x) {
      for (Point y = 0; y < n && !r.distributivity_failure; ++y) {
        for (Point z = 0; z < n; ++z) {
          Point const lhs = b.mul(x, b.add(y, z));
          Point const rhs = b.add(b.add(b.mul(x, y), neg[x]), b.mul(x, z));
          if (lhs != rhs) {
            r.distributivity_failure = std::array<Point, 3>{x, y, z};
            break;
          }
        }
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (b.mul(x, (*minv)[x]) != b.add(neg[x], x)) {
        r.inverse_failure = x;
        break;
      }
    }
    return r;
  }

  bool is_dual(WeakBraceTable const& b) {
    return weak_brace_validate(b).dual();
  }

  WeakBraceTable trivial_weak_brace(CliffordTable const& s) {
    return {s.mul(), s.mul()};
  }

  WeakBraceTable opposite_brace(WeakBraceTable const& b) {
    return {Magma::from_function(b.size(), [&](Point x, Point y) { return b.add(y, x); }),
            b.mul};
  }

  std::vector<FnMap> brace_lambda(WeakBraceTable const& b) {
    return raw_brace_solution(b, require_valid(b, "brace_lambda")).lambda_maps();
  }

  std::vector<FnMap> brace_rho(WeakBraceTable const& b) {
    return raw_brace_solution(b, require_valid(b, "brace_rho")).rho_maps();
  }

  SolutionTable brace_solution(WeakBraceTable const& b) {
    BraceOps const ops = require_valid(b, "brace_solution");
    SolutionTable  s   = raw_brace_solution(b, ops);
    if (!is_solution(s)) {
      throw InternalError("brace_solution: map is not a solution");
    }
    if (weak_brace_validate(b).mul_clifford) {
      WeakBraceTable const op = opposite_brace(b);
      BraceOps const       op_ops{*semigroup_inverses(op.add), ops.minv};
      SolutionTable const  sop = raw_brace_solution(op, op_ops);
      FnMap const          r   = s.as_pair_map();
      FnMap const          rop = sop.as_pair_map();
      if (!is_solution(sop) || compose(r, compose(rop, r)) != r
          || compose(rop, compose(r, rop)) != rop || compose(r, rop) != compose(rop, r)) {
        throw InternalError("brace_solution: r^op is not the relative inverse of r");
      }
    }
    return s;
  }

  bool lambda_rho_clifford_check(WeakBraceTable const& b) {
    if (!is_dual(b)) {
      throw PreconditionError("lambda_rho_clifford_check: brace is not dual");
    }
    SolutionTable const s = raw_brace_solution(b, require_valid(b, "lambda_rho_clifford_check"));
    return is_clifford_subsemigroup(s.lambda_maps())
           && is_clifford_subsemigroup(s.rho_maps());
  }

  bool brace_structure_shelf_check(WeakBraceTable const& b) {
    if (!is_dual(b)) {
      throw PreconditionError("brace_structure_shelf_check: brace is not dual");
    }
    auto const          neg = *semigroup_inverses(b.add);
    SolutionTable const s   = brace_solution(b);
    auto const          d   = quasi_left_nondeg(s);
    if (!d) {
      return false;
    }
    Magma const expected = Magma::from_function(
        b.size(), [&](Point x, Point y) { return b.add(b.add(neg[x], y), x); });
    return structure_magma(s, *d) == expected;
  }

  std::vector<WeakBraceTable> small_skew_braces(std::size_t max_order) {
    if (max_order > 4) {
      throw PreconditionError("small_skew_braces: only orders up to 4 are supported");
    }
    std::vector<WeakBraceTable> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      std::vector<Point> perm(n);
      std::set<Magma>    labelled;
      for (auto const& g : small_groups(n)) {
        if (g.size() != n) {
          continue;
        }
        std::iota(perm.begin(), perm.end(), Point{0});
        do {
          labelled.insert(relabel(g, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      using Key = std::pair<std::vector<Point>, std::vector<Point>>;
      std::set<Key> seen;
      for (auto const& add : labelled) {
        for (auto const& mul : labelled) {
          WeakBraceTable const b{add, mul};
          if (!weak_brace_validate(b).valid()) {
            continue;
          }
          std::optional<Key> best;
          std::iota(perm.begin(), perm.end(), Point{0});
          do {
            Magma const ra = relabel(add, perm);
            Magma const rm = relabel(mul, perm);
            Key         k{{ra.data().begin(), ra.data().end()},
                          {rm.data().begin(), rm.data().end()}};
            if (!best || k < *best) {
              best = std::move(k);
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (seen.insert(*best).second) {
            out.push_back({Magma(n, best->first), Magma(n, best->second)});
          }
        }
      }
    }
    return out;
  }

}  // namespace yaxl
