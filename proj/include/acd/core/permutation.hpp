#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "acd/core/error.hpp"

namespace acd {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image list.
///
/// Products compose left to right: (a * b)(x) = b(a(x)), i.e. apply `a`
/// first. Conjugation `a ^ b` is b^-1 * a * b.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) throw ConstructionError("image list is not a bijection");
      seen[p] = true;
    }
  }

  /// Builds a permutation of the given degree from disjoint cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> touched(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Point from = cyc[i];
        if (from >= degree || touched[from]) throw ConstructionError("cycles are not disjoint or out of range");
        touched[from] = true;
        img[from] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(img));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  Permutation& operator*=(const Permutation& b) {
    if (&b == this) return *this = *this * b;
    for (auto& v : images_) v = b.images_[v];
    return *this;
  }

  /// b^-1 * a * b
  friend Permutation operator^(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[b.images_[i]] = b.images_[a.images_[i]];
    return r;
  }

  Permutation pow(std::uint64_t e) const {
    Permutation result(degree());
    Permutation base = *this;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  bool commutes_with(const Permutation& b) const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (b.images_[images_[i]] != images_[b.images_[i]]) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : images_) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      bool first = true;
      for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        seen[x] = true;
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<Point> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycle_string(); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace acd
