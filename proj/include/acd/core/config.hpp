#pragma once

#include <cstddef>
#include <cstdint>

namespace acd {

/// Resource caps shared by the group engine and the character-degree code.
struct Limits {
  std::size_t max_points = 4096;        // permutation degree / quotient index
  std::uint64_t max_enumeration = 100000;  // element enumeration
  std::size_t max_classes = 150;        // Dixon class-count bound
};

inline Limits& default_limits() {
  static Limits limits;
  return limits;
}

}  // namespace acd
