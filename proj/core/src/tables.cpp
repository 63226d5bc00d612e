#include <string>

#include "yaxl/error.hpp"
#include "yaxl/magma.hpp"
#include "yaxl/solution_table.hpp"

namespace yaxl {

  namespace {
    void check_entries(std::size_t n, std::span<Point const> v, char const* what) {
      if (n == 0) {
        throw InputError(std::string(what) + ": carrier must be non-empty");
      }
      if (v.size() != n * n) {
        throw InputError(std::string(what) + ": expected " + std::to_string(n * n)
                         + " entries, got " + std::to_string(v.size()));
      }
      for (Point e : v) {
        if (e >= n) {
          throw InputError(std::string(what) + ": entry " + std::to_string(e)
                           + " outside carrier of size " + std::to_string(n));
        }
      }
    }
  }  // namespace

  Magma::Magma(std::size_t n, std::vector<Point> table)
      : n_(n), table_(std::move(table)) {
    check_entries(n_, table_, "Magma");
  }

  Magma Magma::from_rows(std::vector<FnMap> const& rows) {
    std::size_t const  n = rows.size();
    std::vector<Point> t;
    t.reserve(n * n);
    for (auto const& r : rows) {
      if (r.size() != n) {
        throw InputError("Magma::from_rows: row size mismatch");
      }
      t.insert(t.end(), r.images().begin(), r.images().end());
    }
    return Magma(n, std::move(t));
  }

  FnMap Magma::row(Point x) const {
    auto first = table_.begin() + static_cast<std::ptrdiff_t>(x * n_);
    return FnMap(std::vector<Point>(first, first + static_cast<std::ptrdiff_t>(n_)));
  }

  std::vector<FnMap> Magma::rows() const {
    std::vector<FnMap> out;
    out.reserve(n_);
    for (Point x = 0; x < n_; ++x) {
      out.push_back(row(x));
    }
    return out;
  }

  Magma relabel(Magma const& m, std::span<Point const> perm) {
    std::size_t const  n = m.size();
    std::vector<Point> t(n * n);
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        t[perm[x] * n + perm[y]] = perm[m(x, y)];
      }
    }
    return Magma(n, std::move(t));
  }

  bool is_associative(Magma const& m) {
    std::size_t const n = m.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        Point const xy = m(x, y);
        for (Point z = 0; z < n; ++z) {
          if (m(xy, z) != m(x, m(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_commutative(Magma const& m) {
    for (Point x = 0; x < m.size(); ++x) {
      for (Point y = x + 1; y < m.size(); ++y) {
        if (m(x, y) != m(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  SolutionTable::SolutionTable(std::size_t n, std::vector<Point> lambda,
                               std::vector<Point> rho)
      : n_(n), lambda_(std::move(lambda)), rho_(std::move(rho)) {
    check_entries(n_, lambda_, "SolutionTable lambda");
    check_entries(n_, rho_, "SolutionTable rho");
  }

  SolutionTable SolutionTable::from_families(std::vector<FnMap> const& lambda,
                                             std::vector<FnMap> const& rho) {
    std::size_t const n = lambda.size();
    if (rho.size() != n) {
      throw InputError("SolutionTable: lambda and rho families differ in size");
    }
    std::vector<Point> l, r;
    l.reserve(n * n);
    r.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (lambda[i].size() != n || rho[i].size() != n) {
        throw InputError("SolutionTable: map size mismatch");
      }
      l.insert(l.end(), lambda[i].images().begin(), lambda[i].images().end());
      r.insert(r.end(), rho[i].images().begin(), rho[i].images().end());
    }
    return SolutionTable(n, std::move(l), std::move(r));
  }

  SolutionTable SolutionTable::from_pair_map(std::size_t n, FnMap const& pairs) {
    if (pairs.size() != n * n) {
      throw InputError("SolutionTable::from_pair_map: expected a map on n^2 points");
    }
    std::vector<Point> l(n * n), r(n * n);
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        Point const img = pairs(static_cast<Point>(x * n + y));
        l[x * n + y]    = static_cast<Point>(img / n);
        r[y * n + x]    = static_cast<Point>(img % n);
      }
    }
    return SolutionTable(n, std::move(l), std::move(r));
  }

  FnMap SolutionTable::lambda_map(Point x) const {
    auto first = lambda_.begin() + static_cast<std::ptrdiff_t>(x * n_);
    return FnMap(std::vector<Point>(first, first + static_cast<std::ptrdiff_t>(n_)));
  }

  FnMap SolutionTable::rho_map(Point y) const {
    auto first = rho_.begin() + static_cast<std::ptrdiff_t>(y * n_);
    return FnMap(std::vector<Point>(first, first + static_cast<std::ptrdiff_t>(n_)));
  }

  std::vector<FnMap> SolutionTable::lambda_maps() const {
    std::vector<FnMap> out;
    for (Point x = 0; x < n_; ++x) {
      out.push_back(lambda_map(x));
    }
    return out;
  }

  std::vector<FnMap> SolutionTable::rho_maps() const {
    std::vector<FnMap> out;
    for (Point y = 0; y < n_; ++y) {
      out.push_back(rho_map(y));
    }
    return out;
  }

  FnMap SolutionTable::as_pair_map() const {
    std::vector<Point> v(n_ * n_);
    for (Point x = 0; x < n_; ++x) {
      for (Point y = 0; y < n_; ++y) {
        v[x * n_ + y] = static_cast<Point>(lambda(x, y) * n_ + rho(y, x));
      }
    }
    return FnMap(std::move(v));
  }

}  // namespace yaxl
