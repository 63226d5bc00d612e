#include "yaxl/transform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "yaxl/error.hpp"

namespace yaxl {

  FnMap::FnMap(std::vector<Point> images) : FnMap(images, images.size()) {}

  FnMap::FnMap(std::vector<Point> images, std::size_t codomain)
      : images_(std::move(images)), codomain_(codomain) {
    if (images_.empty() || codomain_ == 0) {
      throw InputError("FnMap: carrier must be non-empty");
    }
    for (Point v : images_) {
      if (v >= codomain_) {
        throw InputError("FnMap: image " + std::to_string(v)
                         + " outside carrier of size "
                         + std::to_string(codomain_));
      }
    }
  }

  FnMap FnMap::identity(std::size_t n) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), Point{0});
    return FnMap(std::move(v));
  }

  FnMap FnMap::constant(std::size_t n, Point value) {
    return FnMap(std::vector<Point>(n, value));
  }

  bool FnMap::is_permutation() const {
    if (!is_self_map()) {
      return false;
    }
    std::vector<bool> seen(size(), false);
    for (Point v : images_) {
      if (seen[v]) {
        return false;
      }
      seen[v] = true;
    }
    return true;
  }

  bool FnMap::is_idempotent() const {
    return is_self_map() && std::all_of(images_.begin(), images_.end(), [this](Point v) {
      return images_[v] == v;
    });
  }

  bool FnMap::is_identity() const {
    if (!is_self_map()) {
      return false;
    }
    for (std::size_t i = 0; i < size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::vector<Point> FnMap::image() const {
    std::vector<bool> seen(codomain_, false);
    for (Point v : images_) {
      seen[v] = true;
    }
    std::vector<Point> out;
    for (Point i = 0; i < codomain_; ++i) {
      if (seen[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::size_t FnMap::rank() const {
    return image().size();
  }

  FnMap compose(FnMap const& f, FnMap const& g) {
    if (f.size() != g.codomain()) {
      throw InputError("compose: size mismatch (" + std::to_string(f.size())
                       + " vs " + std::to_string(g.codomain()) + ")");
    }
    std::vector<Point> out(g.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = f(g(static_cast<Point>(i)));
    }
    return FnMap(std::move(out), f.codomain());
  }

  FnMap power(FnMap const& f, std::uint64_t k) {
    if (!f.is_self_map()) {
      throw InputError("power: not a self-map");
    }
    FnMap result = FnMap::identity(f.size());
    FnMap base   = f;
    while (k > 0) {
      if (k & 1U) {
        result = compose(base, result);
      }
      k >>= 1U;
      if (k > 0) {
        base = compose(base, base);
      }
    }
    return result;
  }

  bool commutes(FnMap const& f, FnMap const& g) {
    if (f.size() != g.size() || !f.is_self_map() || !g.is_self_map()) {
      throw InputError("commutes: size mismatch");
    }
    for (Point i = 0; i < f.size(); ++i) {
      if (f(g(i)) != g(f(i))) {
        return false;
      }
    }
    return true;
  }

  bool is_completely_regular(FnMap const& f) {
    return f.is_self_map() && f.rank() == compose(f, f).rank();
  }

  namespace {
    // Cycle lengths of f on im(f), assuming f is completely regular.
    std::vector<std::uint64_t> cycle_lengths_on_image(FnMap const& f) {
      std::vector<Point> const im = f.image();
      std::vector<bool>        done(f.size(), false);
      std::vector<std::uint64_t> lengths;
      for (Point start : im) {
        if (done[start]) {
          continue;
        }
        std::uint64_t len = 0;
        Point         x   = start;
        do {
          done[x] = true;
          x       = f(x);
          ++len;
        } while (x != start);
        lengths.push_back(len);
      }
      return lengths;
    }

    // g = sigma^{-2} o f, where sigma = f restricted to im(f).  This is the
    // same map as f^{p-1}; used when p overflows.
    FnMap inverse_via_image_cycles(FnMap const& f) {
      std::vector<Point> sigma_inv(f.size(), 0);
      for (Point x : f.image()) {
        sigma_inv[f(x)] = x;
      }
      std::vector<Point> out(f.size());
      for (Point i = 0; i < f.size(); ++i) {
        out[i] = sigma_inv[sigma_inv[f(i)]];
      }
      return FnMap(std::move(out));
    }
  }  // namespace

  std::optional<std::uint64_t> image_period(FnMap const& f) {
    if (!is_completely_regular(f)) {
      return std::nullopt;
    }
    std::uint64_t p = 1;
    for (std::uint64_t len : cycle_lengths_on_image(f)) {
      std::uint64_t const g    = std::gcd(p, len);
      std::uint64_t const step = len / g;
      if (p > UINT64_MAX / step) {
        return std::nullopt;
      }
      p *= step;
    }
    return p;
  }

  std::optional<RegularTriple> relative_inverse(FnMap const& f) {
    if (!is_completely_regular(f)) {
      return std::nullopt;
    }
    FnMap inv;
    if (auto p = image_period(f)) {
      inv = (*p == 1) ? f : power(f, *p - 1);
    } else {
      inv = inverse_via_image_cycles(f);
    }
    FnMap zero = compose(f, inv);
    if (compose(zero, f) != f || compose(inv, compose(f, inv)) != inv
        || compose(inv, f) != zero) {
      throw InternalError("relative_inverse: identities failed for "
                          + to_string(f));
    }
    return RegularTriple{f, std::move(inv), std::move(zero)};
  }

  std::vector<FnMap> all_maps(std::size_t n) {
    std::vector<FnMap> out;
    std::vector<Point> v(n, 0);
    while (true) {
      out.emplace_back(v);
      std::size_t i = n;
      while (i > 0 && ++v[i - 1] == n) {
        v[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return out;
      }
    }
  }

  std::vector<FnMap> completely_regular_maps(std::size_t n) {
    std::vector<FnMap> out;
    for (auto& f : all_maps(n)) {
      if (is_completely_regular(f)) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  std::vector<FnMap> permutations(std::size_t n) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), Point{0});
    std::vector<FnMap> out;
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  std::string to_string(FnMap const& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) {
        os << ' ';
      }
      os << f(static_cast<Point>(i));
    }
    return os.str();
  }

}  // namespace yaxl
