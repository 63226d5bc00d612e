#include "yaxl/shelves.hpp"

#include <algorithm>
#include <numeric>

#include "yaxl/error.hpp"

namespace yaxl {

  bool is_left_shelf(Magma const& m) {
    std::size_t const n = m.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        Point const xy = m(x, y);
        for (Point z = 0; z < n; ++z) {
          if (m(x, m(y, z)) != m(xy, m(x, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_right_shelf(Magma const& m) {
    std::size_t const n = m.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        for (Point z = 0; z < n; ++z) {
          if (m(m(x, y), z) != m(m(x, z), m(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_rack(Magma const& m) {
    for (Point x = 0; x < m.size(); ++x) {
      if (!m.row(x).is_permutation()) {
        return false;
      }
    }
    return is_left_shelf(m);
  }

  bool is_quandle(Magma const& m) {
    for (Point x = 0; x < m.size(); ++x) {
      if (m(x, x) != x) {
        return false;
      }
    }
    return is_rack(m);
  }

  std::optional<QuasiRackData> quasi_rack_structure(Magma const& m) {
    if (!is_left_shelf(m)) {
      return std::nullopt;
    }
    QuasiRackData q;
    q.base = m;
    for (Point x = 0; x < m.size(); ++x) {
      auto t = relative_inverse(m.row(x));
      if (!t) {
        return std::nullopt;
      }
      q.L.push_back(std::move(t->f));
      q.L_inv.push_back(std::move(t->inverse));
      q.L_zero.push_back(std::move(t->idempotent));
    }
    for (auto const& zero : q.L_zero) {
      for (auto const& l : q.L) {
        if (!commutes(zero, l)) {
          return std::nullopt;
        }
      }
    }
    return q;
  }

  bool is_quasi_quandle(QuasiRackData const& q) {
    for (Point x = 0; x < q.size(); ++x) {
      if (q.base(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  bool check_star(QuasiRackData const& q) {
    std::size_t const n = q.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        FnMap const& lhs = q.L_zero[q.L[x](y)];
        for (Point z = 0; z < n; ++z) {
          if (lhs(z) != q.L_zero[x](q.L_zero[y](z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool check_starstar(QuasiRackData const& q) {
    std::size_t const n = q.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        if (q.L[y](x) != q.L[q.L_zero[x](y)](x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool check_starstarstar(QuasiRackData const& q) {
    for (Point x = 0; x < q.size(); ++x) {
      if (q.L_zero[x](x) != x) {
        return false;
      }
    }
    return true;
  }

  SolutionTable derived_map(QuasiRackData const& q) {
    return SolutionTable::from_families(q.L_zero, q.L);
  }

  SolutionTable derived_relative_inverse(QuasiRackData const& q) {
    if (!check_starstarstar(q)) {
      throw PreconditionError(
          "derived_relative_inverse: requires L^0_x(x) = x for all x");
    }
    std::size_t const  n = q.size();
    std::vector<Point> lambda(n * n), rho(n * n);
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        lambda[x * n + y] = q.L_inv[x](y);
        rho[y * n + x]    = q.L_zero[y](x);
      }
    }
    SolutionTable inv(n, std::move(lambda), std::move(rho));
    FnMap const   r  = derived_map(q).as_pair_map();
    FnMap const   ri = inv.as_pair_map();
    if (compose(r, compose(ri, r)) != r || compose(ri, compose(r, ri)) != ri
        || compose(r, ri) != compose(ri, r)) {
      throw InternalError(
          "derived_relative_inverse: relative inverse identities failed");
    }
    return inv;
  }

  Magma opposite_right_quasi_rack(QuasiRackData const& q) {
    if (!check_starstarstar(q)) {
      throw PreconditionError(
          "opposite_right_quasi_rack: requires L^0_x(x) = x for all x");
    }
    Magma out = Magma::from_function(
        q.size(), [&q](Point y, Point x) { return q.L_inv[x](y); });
    if (!is_right_shelf(out)) {
      throw InternalError("opposite_right_quasi_rack: not right self-distributive");
    }
    return out;
  }

  bool verify_translation_lemma(QuasiRackData const& q) {
    std::size_t const n      = q.size();
    auto const&       L      = q.L;
    auto const&       L_zero = q.L_zero;
    auto const&       L_inv  = q.L_inv;
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        FnMap const& a = L[L_zero[x](y)];
        FnMap const& b = L[L_zero[y](x)];
        FnMap const& c = L_zero[L[y](x)];
        FnMap const& d = L_zero[L_inv[x](y)];
        for (Point z = 0; z < n; ++z) {
          Point const ly = L[y](z);
          if (L_zero[x](ly) != L_zero[x](a(z))) {
            return false;
          }
          if (L[x](ly) != b(ly)) {
            return false;
          }
          if (L_zero[x](ly) != c(ly)) {
            return false;
          }
          if (L_zero[x](d(z)) != L_zero[x](L_zero[y](z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    void require_canonical_size(std::size_t n) {
      if (n > kMaxCanonicalSize) {
        throw PreconditionError("canonical form: n = " + std::to_string(n)
                                + " exceeds the n! orbit guard of "
                                + std::to_string(kMaxCanonicalSize));
      }
    }

    // Compare relabel(m, p) with best (whose inverse labelling is q_best is
    // irrelevant); returns <0, 0, >0 like memcmp on the row-major tables.
    int compare_relabelled(Magma const& m, std::span<Point const> inv,
                           std::span<Point const> perm,
                           std::span<Point const> target) {
      std::size_t const n = m.size();
      for (Point i = 0; i < n; ++i) {
        for (Point j = 0; j < n; ++j) {
          Point const v = perm[m(inv[i], inv[j])];
          Point const t = target[i * n + j];
          if (v != t) {
            return v < t ? -1 : 1;
          }
        }
      }
      return 0;
    }
  }  // namespace

  Magma canonical_form(Magma const& m) {
    std::size_t const n = m.size();
    require_canonical_size(n);
    std::vector<Point> perm(n), inv(n);
    std::iota(perm.begin(), perm.end(), Point{0});
    std::vector<Point> best(m.data().begin(), m.data().end());
    do {
      for (Point x = 0; x < n; ++x) {
        inv[perm[x]] = x;
      }
      if (compare_relabelled(m, inv, perm, best) < 0) {
        for (Point i = 0; i < n; ++i) {
          for (Point j = 0; j < n; ++j) {
            best[i * n + j] = perm[m(inv[i], inv[j])];
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Magma(n, std::move(best));
  }

  bool is_canonical(Magma const& m) {
    std::size_t const n = m.size();
    require_canonical_size(n);
    std::vector<Point> perm(n), inv(n);
    std::iota(perm.begin(), perm.end(), Point{0});
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (Point x = 0; x < n; ++x) {
        inv[perm[x]] = x;
      }
      if (compare_relabelled(m, inv, perm, m.data()) < 0) {
        return false;
      }
    }
    return true;
  }

  bool are_isomorphic(Magma const& a, Magma const& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
  }

  bool is_homomorphism(FnMap const& f, Magma const& a, Magma const& b) {
    for (Point x = 0; x < a.size(); ++x) {
      for (Point y = 0; y < a.size(); ++y) {
        if (f(a(x, y)) != b(f(x), f(y))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<FnMap> homomorphisms(Magma const& a, Magma const& b) {
    std::size_t const  n = a.size();
    std::size_t const  m = b.size();
    std::vector<Point> v(n, 0);
    std::vector<FnMap> out;
    auto ok = [&] {
      for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
          if (v[a(x, y)] != b(v[x], v[y])) {
            return false;
          }
        }
      }
      return true;
    };
    while (true) {
      if (ok()) {
        out.push_back(FnMap(v, m));
      }
      std::size_t i = n;
      while (i > 0 && ++v[i - 1] == m) {
        v[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

}  // namespace yaxl
