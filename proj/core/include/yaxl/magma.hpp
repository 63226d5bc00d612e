#pragma once

// An n x n operation table on {0, ..., n-1}.  Used for shelves and
// quasi racks (x |> y), for semigroup Cayley tables and for semilattices.

#include <compare>
#include <span>
#include <vector>

#include "yaxl/transform.hpp"

namespace yaxl {

  class Magma {
   public:
    Magma() = default;

    // Row-major: table[x * n + y] = x |> y.  Throws InputError on bad entries.
    Magma(std::size_t n, std::vector<Point> table);

    static Magma from_rows(std::vector<FnMap> const& rows);
    static Magma from_function(std::size_t n, auto&& op) {
      std::vector<Point> t(n * n);
      for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
          t[x * n + y] = static_cast<Point>(op(x, y));
        }
      }
      return Magma(n, std::move(t));
    }

    std::size_t size() const noexcept { return n_; }

    Point operator()(Point x, Point y) const noexcept {
      return table_[x * n_ + y];
    }

    // Left translation L_x : y -> x |> y.
    FnMap row(Point x) const;
    std::vector<FnMap> rows() const;

    std::span<Point const> data() const noexcept { return table_; }

    friend bool operator==(Magma const&, Magma const&) = default;
    friend auto operator<=>(Magma const&, Magma const&) = default;

   private:
    std::size_t        n_ = 0;
    std::vector<Point> table_;
  };

  // new[p[x]][p[y]] = p[old[x][y]].
  Magma relabel(Magma const& m, std::span<Point const> perm);

  bool is_associative(Magma const& m);
  bool is_commutative(Magma const& m);

}  // namespace yaxl
