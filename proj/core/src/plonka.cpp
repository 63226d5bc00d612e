#include "yaxl/plonka.hpp"

#include <algorithm>
#include <numeric>

#include "yaxl/error.hpp"

namespace yaxl {

  void validate_plonka_system(PlonkaSystem const& p) {
    validate_system(p, is_rack, "rack");
  }

  Magma plonka_sum(PlonkaSystem const& p) {
    validate_plonka_system(p);
    auto const   off = p.offsets();
    auto const   at  = p.locate();
    Magma const& y   = p.semilattice;
    Magma        m   = Magma::from_function(p.carrier_size(), [&](Point u, Point v) {
      auto const [a, i] = at[u];
      auto const [b, j] = at[v];
      Point const c     = y(a, b);
      return static_cast<Point>(off[c]) + p.fibers[c](p.hom(a, c)(i), p.hom(b, c)(j));
    });
    if (!is_left_shelf(m)) {
      throw InternalError("plonka_sum: result is not a left shelf");
    }
    return m;
  }

  SumStructureReport sum_structure_check(PlonkaSystem const& p) {
    Magma const        m   = plonka_sum(p);
    auto const         off = p.offsets();
    auto const         at  = p.locate();
    SumStructureReport r;
    auto               q = quasi_rack_structure(m);
    r.quasi_rack         = q.has_value();
    if (q) {
      r.star         = check_star(*q);
      r.starstarstar = check_starstarstar(*q);
      r.closed_forms = true;
      for (Point u = 0; u < m.size() && r.closed_forms; ++u) {
        auto const [a, i] = at[u];
        for (Point v = 0; v < m.size(); ++v) {
          auto const [b, j] = at[v];
          Point const c     = p.semilattice(a, b);
          Point const pj    = p.hom(b, c)(j);
          FnMap const row   = p.fibers[c].row(p.hom(a, c)(i));
          Point       pre   = 0;
          while (row(pre) != pj) {
            ++pre;
          }
          if (q->L_inv[u](v) != off[c] + pre || q->L_zero[u](v) != off[c] + pj) {
            r.closed_forms = false;
            break;
          }
        }
      }
      r.fibers_quandles = std::all_of(p.fibers.begin(), p.fibers.end(), is_quandle);
      r.quasi_quandle   = is_quasi_quandle(*q);
    }
    if (!r.quasi_rack || !r.star || !r.starstarstar || !r.closed_forms
        || (r.fibers_quandles && !r.quasi_quandle)) {
      throw InternalError("sum_structure_check: Plonka sum failed its structure identities");
    }
    return r;
  }

  PlonkaSystem decompose(QuasiRackData const& q) {
    if (!check_star(q) || !check_starstarstar(q)) {
      throw PreconditionError("decompose: requires (*) and (***)");
    }
    std::size_t const  n = q.size();
    std::vector<FnMap> classes;
    std::vector<Point> cls(n);
    for (Point a = 0; a < n; ++a) {
      auto it = std::find(classes.begin(), classes.end(), q.L_zero[a]);
      cls[a]  = static_cast<Point>(it - classes.begin());
      if (it == classes.end()) {
        classes.push_back(q.L_zero[a]);
      }
    }
    std::size_t const  m = classes.size();
    std::vector<Point> meet(m * m);
    for (Point a = 0; a < m; ++a) {
      for (Point b = 0; b < m; ++b) {
        auto it = std::find(classes.begin(), classes.end(), compose(classes[a], classes[b]));
        if (it == classes.end()) {
          throw InternalError("decompose: idempotents not closed under composition");
        }
        meet[a * m + b] = static_cast<Point>(it - classes.begin());
      }
    }
    PlonkaSystem p;
    p.semilattice = Magma(m, std::move(meet));

    std::vector<std::vector<Point>> members(m);
    std::vector<Point>              local(n);
    for (Point a = 0; a < n; ++a) {
      local[a] = static_cast<Point>(members[cls[a]].size());
      members[cls[a]].push_back(a);
    }
    for (Point c = 0; c < m; ++c) {
      auto const& mem = members[c];
      p.fibers.push_back(Magma::from_function(mem.size(), [&](Point i, Point j) {
        Point const v = q.base(mem[i], mem[j]);
        if (cls[v] != c) {
          throw InternalError("decompose: fiber not closed under the operation");
        }
        return local[v];
      }));
    }
    for (Point a = 0; a < m; ++a) {
      for (Point b = 0; b < m; ++b) {
        if (a == b || !semilattice_geq(p.semilattice, a, b)) {
          continue;
        }
        std::vector<Point> img;
        for (Point x : members[a]) {
          Point const v = classes[b](x);
          if (cls[v] != b) {
            throw InternalError("decompose: structure map leaves its target fiber");
          }
          img.push_back(local[v]);
        }
        p.homs.emplace(std::pair{a, b}, FnMap(std::move(img), members[b].size()));
      }
    }
    for (Point u = 0; u < n; ++u) {
      for (Point v = 0; v < n; ++v) {
        if (cls[q.base(u, v)] != p.semilattice(cls[u], cls[v])) {
          throw InternalError("decompose: projection is not a homomorphism onto Y");
        }
      }
    }
    try {
      validate_plonka_system(p);
    } catch (InputError const& e) {
      throw InternalError(std::string("decompose: ") + e.what());
    }
    return p;
  }

  bool roundtrip(QuasiRackData const& q) {
    return are_isomorphic(plonka_sum(decompose(q)), q.base);
  }

  bool solution_as_strong_semilattice(PlonkaSystem const& p) {
    Magma const m   = plonka_sum(p);
    auto const  q   = quasi_rack_structure(m);
    if (!q) {
      return false;
    }
    SolutionTable const r   = derived_map(*q);
    auto const          off = p.offsets();
    auto const          at  = p.locate();
    for (Point u = 0; u < m.size(); ++u) {
      auto const [a, i] = at[u];
      for (Point v = 0; v < m.size(); ++v) {
        auto const [b, j] = at[v];
        Point const  c = p.semilattice(a, b);
        Point const  x = p.hom(a, c)(i);
        Point const  y = p.hom(b, c)(j);
        Magma const& f = p.fibers[c];
        // Fiber derived solution of a rack: (x, y) -> (y, y |> x).
        if (r(u, v) != std::pair<Point, Point>{off[c] + y, off[c] + f(y, x)}) {
          return false;
        }
      }
    }
    return true;
  }

  bool systems_isomorphic(PlonkaSystem const& a, PlonkaSystem const& b) {
    Magma const sa = plonka_sum(a);
    Magma const sb = plonka_sum(b);
    if (sa.size() != sb.size() || a.semilattice.size() != b.semilattice.size()) {
      return false;
    }
    std::size_t const n = sa.size();
    if (n > kMaxCanonicalSize) {
      throw PreconditionError("systems_isomorphic: carrier exceeds the search guard");
    }
    auto const         at_a = a.locate();
    auto const         at_b = b.locate();
    std::size_t const  m    = a.semilattice.size();
    std::vector<Point> psi(n);
    std::iota(psi.begin(), psi.end(), Point{0});
    do {
      if (relabel(sa, psi) != sb) {
        continue;
      }
      std::vector<Point> sigma(m, static_cast<Point>(m));
      bool               ok = true;
      for (Point u = 0; u < n && ok; ++u) {
        Point const from = at_a[u].first;
        Point const to   = at_b[psi[u]].first;
        ok               = sigma[from] == m || sigma[from] == to;
        sigma[from]      = to;
      }
      if (!ok || relabel(a.semilattice, sigma) != b.semilattice) {
        continue;
      }
      auto const off_b = b.offsets();
      auto const off_a = a.offsets();
      for (Point al = 0; al < m && ok; ++al) {
        for (Point be = 0; be < m && ok; ++be) {
          if (!semilattice_geq(a.semilattice, al, be)) {
            continue;
          }
          FnMap const fa = a.hom(al, be);
          FnMap const fb = b.hom(sigma[al], sigma[be]);
          for (Point i = 0; i < fa.size() && ok; ++i) {
            Point const lhs = psi[off_a[be] + fa(i)];
            Point const rhs = off_b[sigma[be]] + fb(at_b[psi[off_a[al] + i]].second);
            ok              = lhs == rhs;
          }
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(psi.begin(), psi.end()));
    return false;
  }

}  // namespace yaxl
