#pragma once

// Brute-force reference implementations.  Deliberately naive and written
// against raw vectors so that they share no code paths with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

  using Vec   = std::vector<std::uint32_t>;
  using Table = std::vector<std::uint32_t>;  // row-major n x n

  inline Vec comp(Vec const& f, Vec const& g) {
    Vec h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
  }

  // Every n^n map, in odometer order.
  inline std::vector<Vec> every_map(std::size_t n) {
    std::vector<Vec> out;
    Vec              v(n, 0);
    for (;;) {
      out.push_back(v);
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++v[i] < n) break;
        v[i] = 0;
        if (i == 0) return out;
      }
    }
  }

  // All g with fgf = f, gfg = g, fg = gf.
  inline std::vector<Vec> relative_inverses(Vec const& f) {
    std::vector<Vec> hits;
    for (auto const& g : every_map(f.size())) {
      Vec fg = comp(f, g);
      if (comp(fg, f) == f && comp(comp(g, f), g) == g && fg == comp(g, f)) {
        hits.push_back(g);
      }
    }
    return hits;
  }

  inline bool left_sd(std::size_t n, Table const& t) {
    auto op = [&](std::uint32_t x, std::uint32_t y) { return t[x * n + y]; };
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
          if (op(x, op(y, z)) != op(op(x, y), op(x, z))) return false;
    return true;
  }

  inline Vec row(std::size_t n, Table const& t, std::uint32_t x) {
    return Vec(t.begin() + static_cast<long>(x * n), t.begin() + static_cast<long>((x + 1) * n));
  }

  inline bool is_perm(Vec v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != i) return false;
    return true;
  }

  // Relative inverse via search, memoized per map.
  class InverseCache {
   public:
    // Empty vector when f has none.
    Vec const& inverse(Vec const& f) {
      auto it = cache_.find(f);
      if (it != cache_.end()) return it->second;
      auto hits = relative_inverses(f);
      return cache_[f] = hits.empty() ? Vec{} : hits.front();
    }

   private:
    std::map<Vec, Vec> cache_;
  };

  struct ShelfFlags {
    bool shelf = false, rack = false, quandle = false;
    bool quasi_rack = false, quasi_quandle = false;
    bool star = false, starstar = false, starstarstar = false, ds = false;
  };

  // Braid relation evaluated on the pair table directly.
  inline bool braid(std::size_t n, Table const& lam, Table const& rho) {
    auto r = [&](std::uint32_t x, std::uint32_t y) {
      return std::pair{lam[x * n + y], rho[y * n + x]};
    };
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z) {
          // left side: (r x id)(id x r)(r x id)
          auto [a1, b1] = r(x, y);
          auto [b2, c2] = r(b1, z);
          auto [a3, b3] = r(a1, b2);
          // right side: (id x r)(r x id)(id x r)
          auto [q1, s1] = r(y, z);
          auto [p2, q2] = r(x, q1);
          auto [q3, s3] = r(q2, s1);
          if (a3 != p2 || b3 != q3 || c2 != s3) return false;
        }
    return true;
  }

  inline ShelfFlags classify_shelf(std::size_t n, Table const& t, InverseCache& inv) {
    ShelfFlags f;
    f.shelf = left_sd(n, t);
    if (!f.shelf) return f;
    std::vector<Vec> L(n), Li(n), L0(n);
    f.rack    = true;
    f.quandle = true;
    bool cr   = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      L[x] = row(n, t, x);
      f.rack = f.rack && is_perm(L[x]);
      f.quandle = f.quandle && L[x][x] == x;
      Li[x] = inv.inverse(L[x]);
      if (Li[x].empty()) {
        cr = false;
      } else {
        L0[x] = comp(L[x], Li[x]);
      }
    }
    f.quandle = f.quandle && f.rack;
    if (!cr) return f;
    bool central = true;
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        central = central && comp(L0[x], L[y]) == comp(L[y], L0[x]);
    if (!central) return f;
    f.quasi_rack    = true;
    f.quasi_quandle = true;
    f.star = f.starstar = f.starstarstar = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      f.quasi_quandle = f.quasi_quandle && L[x][x] == x;
      f.starstarstar  = f.starstarstar && L0[x][x] == x;
      for (std::uint32_t y = 0; y < n; ++y) {
        f.star     = f.star && L0[L[x][y]] == comp(L0[x], L0[y]);
        f.starstar = f.starstar && L[y][x] == L[L0[x][y]][x];
      }
    }
    Table lam(n * n), rho(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) {
        lam[x * n + y] = L0[x][y];
        rho[y * n + x] = L[y][x];
      }
    f.ds = braid(n, lam, rho);
    return f;
  }

  // Lexicographically least relabelling, by trying every permutation.
  inline Table canonical(std::size_t n, Table const& t) {
    Vec p(n);
    std::iota(p.begin(), p.end(), 0U);
    Table best;
    do {
      Table r(n * n);
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) r[p[x] * n + p[y]] = p[t[x * n + y]];
      if (best.empty() || r < best) best = r;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  // Class name -> set of canonical tables, over all n^(n^2) tables.
  inline std::map<std::string, std::set<Table>> naive_classes(std::size_t n) {
    std::map<std::string, std::set<Table>> out;
    InverseCache                           inv;
    std::size_t                            cells = n * n;
    Table                                  t(cells, 0);
    for (;;) {
      ShelfFlags f = classify_shelf(n, t, inv);
      if (f.shelf) {
        Table c = canonical(n, t);
        out["shelf"].insert(c);
        if (f.rack) out["rack"].insert(c);
        if (f.quandle) out["quandle"].insert(c);
        if (f.quasi_rack) out["quasi_rack"].insert(c);
        if (f.quasi_quandle) out["quasi_quandle"].insert(c);
        if (f.quasi_rack && f.star) out["quasi_rack+star"].insert(c);
        if (f.quasi_rack && f.starstar) out["quasi_rack+starstar"].insert(c);
        if (f.quasi_rack && f.starstarstar) out["quasi_rack+starstarstar"].insert(c);
        if (f.quasi_rack && f.ds) out["quasi_rack+derived_is_solution"].insert(c);
      }
      std::size_t i = cells;
      bool        done = true;
      while (i > 0) {
        --i;
        if (++t[i] < n) {
          done = false;
          break;
        }
        t[i] = 0;
      }
      if (done) break;
    }
    return out;
  }

  // Pair maps as vectors over n*n points, pair (x, y) <-> x*n + y.
  inline Vec pair_map(std::size_t n, Table const& lam, Table const& rho) {
    Vec p(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        p[x * n + y] = lam[x * n + y] * static_cast<std::uint32_t>(n) + rho[y * n + x];
    return p;
  }

  inline bool assoc(std::size_t n, Table const& t) {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
    return true;
  }

  inline bool group(std::size_t n, Table const& t) {
    if (!assoc(n, t)) return false;
    for (std::uint32_t e = 0; e < n; ++e) {
      bool ident = true;
      for (std::uint32_t x = 0; x < n; ++x)
        ident = ident && t[e * n + x] == x && t[x * n + e] == x;
      if (!ident) continue;
      for (std::uint32_t x = 0; x < n; ++x) {
        bool has = false;
        for (std::uint32_t y = 0; y < n; ++y) has = has || t[x * n + y] == e;
        if (!has) return false;
      }
      return true;
    }
    return false;
  }

  // Isomorphism types of tables satisfying pred, by brute force.
  inline std::size_t count_types(std::size_t n, bool (*pred)(std::size_t, Table const&)) {
    std::set<Table> seen;
    std::size_t     cells = n * n;
    Table           t(cells, 0);
    for (;;) {
      if (pred(n, t)) seen.insert(canonical(n, t));
      std::size_t i = cells;
      bool        done = true;
      while (i > 0) {
        --i;
        if (++t[i] < n) {
          done = false;
          break;
        }
        t[i] = 0;
      }
      if (done) break;
    }
    return seen.size();
  }

  inline bool semilattice(std::size_t n, Table const& t) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (t[x * n + x] != x) return false;
      for (std::uint32_t y = 0; y < n; ++y)
        if (t[x * n + y] != t[y * n + x]) return false;
    }
    return assoc(n, t);
  }

}  // namespace oracle
