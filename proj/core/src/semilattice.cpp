#include "yaxl/semilattice.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "yaxl/error.hpp"
#include "yaxl/shelves.hpp"

namespace yaxl {

  bool is_semilattice(Magma const& y) {
    for (Point a = 0; a < y.size(); ++a) {
      if (y(a, a) != a) {
        return false;
      }
    }
    return is_commutative(y) && is_associative(y);
  }

  bool semilattice_covers(Magma const& y, Point a, Point b) {
    if (a == b || !semilattice_geq(y, a, b)) {
      return false;
    }
    for (Point c = 0; c < y.size(); ++c) {
      if (c != a && c != b && semilattice_geq(y, a, c) && semilattice_geq(y, c, b)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Magma> semilattices(std::size_t m) {
    if (m == 0) {
      throw InputError("semilattices: m must be positive");
    }
    if (m > kMaxCanonicalSize) {
      throw PreconditionError("semilattices: m exceeds the canonical form guard");
    }
    // Every finite semilattice has a labelling in which a b >= max(a, b);
    // that restricts entry (a, b), a < b, to [b, m).
    std::vector<std::pair<Point, Point>> cells;
    for (Point b = 1; b < m; ++b) {
      for (Point a = 0; a < b; ++a) {
        cells.emplace_back(a, b);
      }
    }
    std::vector<Point> t(m * m, 0);
    for (Point a = 0; a < m; ++a) {
      t[a * m + a] = a;
    }
    std::set<Magma> found;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == cells.size()) {
        Magma const y(m, t);
        if (is_associative(y)) {
          found.insert(canonical_form(y));
        }
        return;
      }
      auto const [a, b] = cells[k];
      for (Point v = b; v < m; ++v) {
        t[a * m + b] = v;
        t[b * m + a] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    return {found.begin(), found.end()};
  }

  std::size_t SemilatticeSystem::carrier_size() const {
    std::size_t total = 0;
    for (auto const& f : fibers) {
      total += f.size();
    }
    return total;
  }

  std::vector<std::size_t> SemilatticeSystem::offsets() const {
    std::vector<std::size_t> out;
    std::size_t              acc = 0;
    for (auto const& f : fibers) {
      out.push_back(acc);
      acc += f.size();
    }
    return out;
  }

  std::vector<std::pair<Point, Point>> SemilatticeSystem::locate() const {
    std::vector<std::pair<Point, Point>> out;
    for (Point a = 0; a < fibers.size(); ++a) {
      for (Point i = 0; i < fibers[a].size(); ++i) {
        out.emplace_back(a, i);
      }
    }
    return out;
  }

  FnMap SemilatticeSystem::hom(Point alpha, Point beta) const {
    auto it = homs.find({alpha, beta});
    if (it != homs.end()) {
      return it->second;
    }
    if (alpha == beta) {
      return FnMap::identity(fibers.at(alpha).size());
    }
    throw InputError("system: missing homomorphism " + std::to_string(alpha) + " -> "
                     + std::to_string(beta));
  }

  namespace {
    std::optional<std::string> system_violation(
        SemilatticeSystem const& sys, std::function<bool(Magma const&)> const& fiber_ok,
        char const* fiber_kind) {
      Magma const&      y = sys.semilattice;
      std::size_t const m = y.size();
      if (m == 0 || !is_semilattice(y)) {
        return "not a semilattice";
      }
      if (sys.fibers.size() != m) {
        return "expected " + std::to_string(m) + " fibers, got "
               + std::to_string(sys.fibers.size());
      }
      for (Point a = 0; a < m; ++a) {
        if (!fiber_ok(sys.fibers[a])) {
          return "fiber " + std::to_string(a) + " is not a " + fiber_kind;
        }
      }
      for (auto const& [key, f] : sys.homs) {
        auto const [a, b] = key;
        if (a >= m || b >= m || !semilattice_geq(y, a, b)) {
          return "homomorphism key (" + std::to_string(a) + ", " + std::to_string(b)
                 + ") is not a comparable pair";
        }
        if (f.size() != sys.fibers[a].size() || f.codomain() != sys.fibers[b].size()) {
          return "homomorphism " + std::to_string(a) + " -> " + std::to_string(b)
                 + " has the wrong shape";
        }
      }
      for (Point a = 0; a < m; ++a) {
        for (Point b = 0; b < m; ++b) {
          if (!semilattice_geq(y, a, b)) {
            continue;
          }
          if (a != b && !sys.homs.contains({a, b})) {
            return "missing homomorphism " + std::to_string(a) + " -> " + std::to_string(b);
          }
          FnMap const f = sys.hom(a, b);
          if (a == b && !f.is_identity()) {
            return "phi_{" + std::to_string(a) + "," + std::to_string(a)
                   + "} is not the identity";
          }
          if (!is_homomorphism(f, sys.fibers[a], sys.fibers[b])) {
            return "phi_{" + std::to_string(a) + "," + std::to_string(b)
                   + "} is not a homomorphism";
          }
        }
      }
      for (Point a = 0; a < m; ++a) {
        for (Point b = 0; b < m; ++b) {
          if (!semilattice_geq(y, a, b)) {
            continue;
          }
          for (Point c = 0; c < m; ++c) {
            if (semilattice_geq(y, b, c)
                && compose(sys.hom(b, c), sys.hom(a, b)) != sys.hom(a, c)) {
              return "phi_{" + std::to_string(b) + "," + std::to_string(c) + "} phi_{"
                     + std::to_string(a) + "," + std::to_string(b) + "} != phi_{"
                     + std::to_string(a) + "," + std::to_string(c) + "}";
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  void validate_system(SemilatticeSystem const&                 sys,
                       std::function<bool(Magma const&)> const& fiber_ok,
                       char const*                              fiber_kind) {
    if (auto v = system_violation(sys, fiber_ok, fiber_kind)) {
      throw InputError("system: " + *v);
    }
  }

  void for_each_system(Magma const& y, std::vector<Magma> const& candidates,
                       std::size_t max_total,
                       std::function<void(SemilatticeSystem const&)> const& visit) {
    if (!is_semilattice(y)) {
      throw InputError("for_each_system: not a semilattice");
    }
    std::size_t const                    m = y.size();
    std::vector<std::pair<Point, Point>> edges, others;
    for (Point a = 0; a < m; ++a) {
      for (Point b = 0; b < m; ++b) {
        if (semilattice_covers(y, a, b)) {
          edges.emplace_back(a, b);
        } else if (a != b && semilattice_geq(y, a, b)) {
          others.emplace_back(a, b);
        }
      }
    }
    // Longer gaps need their shorter pieces first; sorting by the number of
    // elements strictly between a and b gives such an order.
    auto gap = [&](std::pair<Point, Point> p) {
      std::size_t g = 0;
      for (Point c = 0; c < m; ++c) {
        g += (c != p.first && c != p.second && semilattice_geq(y, p.first, c)
              && semilattice_geq(y, c, p.second));
      }
      return g;
    };
    std::stable_sort(others.begin(), others.end(),
                     [&](auto const& p, auto const& q) { return gap(p) < gap(q); });

    std::vector<std::size_t> choice(m, 0);
    auto accept = [](Magma const&) { return true; };

    auto with_fibers = [&] {
      SemilatticeSystem sys;
      sys.semilattice = y;
      for (Point a = 0; a < m; ++a) {
        sys.fibers.push_back(candidates[choice[a]]);
      }
      std::vector<std::vector<FnMap>> options;
      for (auto const& [a, b] : edges) {
        options.push_back(homomorphisms(sys.fibers[a], sys.fibers[b]));
        if (options.back().empty()) {
          return;
        }
      }
      std::vector<std::size_t> pick(edges.size(), 0);
      while (true) {
        sys.homs.clear();
        for (std::size_t e = 0; e < edges.size(); ++e) {
          sys.homs.emplace(edges[e], options[e][pick[e]]);
        }
        for (auto const& [a, b] : others) {
          for (auto const& [c, d] : edges) {
            if (c == a && semilattice_geq(y, d, b)) {
              sys.homs.emplace(std::pair{a, b}, compose(sys.hom(d, b), sys.hom(a, d)));
              break;
            }
          }
        }
        if (!system_violation(sys, accept, "fiber")) {
          visit(sys);
        }
        std::size_t e = edges.size();
        while (e > 0 && ++pick[e - 1] == options[e - 1].size()) {
          pick[e - 1] = 0;
          --e;
        }
        if (e == 0) {
          return;
        }
      }
    };

    auto rec = [&](auto&& self, Point a, std::size_t total) -> void {
      if (a == m) {
        with_fibers();
        return;
      }
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (total + candidates[c].size() <= max_total) {
          choice[a] = c;
          self(self, a + 1, total + candidates[c].size());
        }
      }
    };
    rec(rec, 0, 0);
  }

}  // namespace yaxl
