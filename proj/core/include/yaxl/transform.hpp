#pragma once

// Total transformations of a finite carrier {0, ..., n-1} and their
// relative (group) inverses.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace yaxl {

  using Point = std::uint32_t;

  class FnMap {
   public:
    FnMap() = default;

    // Throws InputError if images is empty or has an entry outside [0, n).
    explicit FnMap(std::vector<Point> images);
    // A map {0..n-1} -> {0..codomain-1}; used for structure maps between
    // fibers of different sizes.
    FnMap(std::vector<Point> images, std::size_t codomain);

    static FnMap identity(std::size_t n);
    static FnMap constant(std::size_t n, Point value);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t codomain() const noexcept { return codomain_; }
    bool is_self_map() const noexcept { return codomain_ == images_.size(); }

    Point operator()(Point x) const noexcept { return images_[x]; }

    std::span<Point const> images() const noexcept { return images_; }

    bool is_permutation() const;
    bool is_idempotent() const;
    bool is_identity() const;

    // Sorted distinct images.
    std::vector<Point> image() const;
    std::size_t rank() const;

    friend bool operator==(FnMap const&, FnMap const&) = default;
    friend auto operator<=>(FnMap const&, FnMap const&) = default;

   private:
    std::vector<Point> images_;
    std::size_t        codomain_ = 0;
  };

  // (f o g)(i) = f(g(i)).  Throws InputError unless f.size() == g.codomain().
  FnMap compose(FnMap const& f, FnMap const& g);

  FnMap power(FnMap const& f, std::uint64_t k);

  bool commutes(FnMap const& f, FnMap const& g);

  // f restricted to im(f) is a permutation of im(f).
  bool is_completely_regular(FnMap const& f);

  // Least common multiple of the cycle lengths of f on im(f).  Empty when f
  // is not completely regular or the value does not fit in 64 bits.
  std::optional<std::uint64_t> image_period(FnMap const& f);

  struct RegularTriple {
    FnMap f;
    FnMap inverse;     // f^-
    FnMap idempotent;  // f^0 = f f^- = f^- f
  };

  // The unique g with fgf = f, gfg = g, fg = gf, if it exists.
  std::optional<RegularTriple> relative_inverse(FnMap const& f);

  // All n^n transformations in lexicographic order of their image vectors.
  std::vector<FnMap> all_maps(std::size_t n);
  std::vector<FnMap> completely_regular_maps(std::size_t n);
  std::vector<FnMap> permutations(std::size_t n);

  // "1 0 0"
  std::string to_string(FnMap const& f);

}  // namespace yaxl
