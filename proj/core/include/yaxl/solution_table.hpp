#pragma once

// A map r : X x X -> X x X on a finite carrier, stored as
// r(x, y) = (lambda_x(y), rho_y(x)).

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "yaxl/transform.hpp"

namespace yaxl {

  class SolutionTable {
   public:
    SolutionTable() = default;

    // lambda[x * n + y] = lambda_x(y); rho[y * n + x] = rho_y(x).
    SolutionTable(std::size_t n, std::vector<Point> lambda, std::vector<Point> rho);

    // lambda[x] is the map lambda_x, rho[y] is the map rho_y.
    static SolutionTable from_families(std::vector<FnMap> const& lambda,
                                       std::vector<FnMap> const& rho);

    // Decodes a transformation of the n^2 pairs, pair (x, y) <-> x * n + y.
    static SolutionTable from_pair_map(std::size_t n, FnMap const& pairs);

    std::size_t size() const noexcept { return n_; }

    Point lambda(Point x, Point y) const noexcept { return lambda_[x * n_ + y]; }
    Point rho(Point y, Point x) const noexcept { return rho_[y * n_ + x]; }

    std::pair<Point, Point> operator()(Point x, Point y) const noexcept {
      return {lambda(x, y), rho(y, x)};
    }

    FnMap lambda_map(Point x) const;
    FnMap rho_map(Point y) const;
    std::vector<FnMap> lambda_maps() const;
    std::vector<FnMap> rho_maps() const;

    FnMap as_pair_map() const;

    std::span<Point const> lambda_data() const noexcept { return lambda_; }
    std::span<Point const> rho_data() const noexcept { return rho_; }

    friend bool operator==(SolutionTable const&, SolutionTable const&) = default;
    friend auto operator<=>(SolutionTable const&, SolutionTable const&) = default;

   private:
    std::size_t        n_ = 0;
    std::vector<Point> lambda_;
    std::vector<Point> rho_;
  };

}  // namespace yaxl
