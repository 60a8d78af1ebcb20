#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "acd/core/config.hpp"
#include "acd/core/error.hpp"
#include "acd/core/perm_group.hpp"

namespace acd {

/// All elements of a group in lexicographic order of their image lists,
/// with O(1) expected lookup from element to position.
class ElementIndex {
 public:
  explicit ElementIndex(const PermGroup& g, const Limits& limits = default_limits())
      : elements_(g.elements(limits)) {
    std::sort(elements_.begin(), elements_.end());
    lookup_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const noexcept { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  std::uint32_t index_of(const Permutation& g) const {
    auto it = lookup_.find(g);
    if (it == lookup_.end()) throw InternalError("element not in group: " + g.to_cycle_string());
    return it->second;
  }

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> lookup_;
};

/// Conjugacy classes of an enumerated group.
///
/// Class 0 is the identity class. Every class representative is the
/// lexicographically least element of its class, and classes are ordered
/// by their representatives.
class ClassStructure {
 public:
  explicit ClassStructure(const PermGroup& g, const Limits& limits = default_limits())
      : index_(g, limits), order_(index_.size()) {
    const auto& gens = g.generators();
    class_of_.assign(order_, kUnassigned);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < order_; ++start) {
      if (class_of_[start] != kUnassigned) continue;
      auto cls = static_cast<std::uint32_t>(reps_.size());
      reps_.push_back(index_[start]);
      members_.emplace_back();
      auto& members = members_.back();
      class_of_[start] = cls;
      members.push_back(start);
      for (std::size_t head = 0; head < members.size(); ++head) {
        const Permutation& x = index_[members[head]];
        for (const auto& s : gens) {
          std::uint32_t y = index_.index_of(x ^ s);
          if (class_of_[y] == kUnassigned) {
            class_of_[y] = cls;
            members.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());
      sizes_.push_back(members.size());
    }
    inverse_class_.resize(reps_.size());
    for (std::size_t j = 0; j < reps_.size(); ++j) inverse_class_[j] = class_of(reps_[j].inverse());
  }

  std::uint64_t order() const noexcept { return order_; }
  std::size_t class_count() const noexcept { return reps_.size(); }
  const std::vector<Permutation>& reps() const noexcept { return reps_; }
  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }
  const std::vector<std::size_t>& inverse_class() const noexcept { return inverse_class_; }
  /// Element indices (into `elements()`) of class j, ascending.
  const std::vector<std::uint32_t>& members(std::size_t j) const noexcept { return members_[j]; }
  const ElementIndex& elements() const noexcept { return index_; }

  std::size_t class_of(const Permutation& g) const { return class_of_[index_.index_of(g)]; }
  std::size_t class_of_index(std::uint32_t element_index) const noexcept { return class_of_[element_index]; }

  /// Group exponent: lcm of the element orders of the representatives.
  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& r : reps_) e = std::lcm(e, r.order());
    return e;
  }

 private:
  static constexpr std::uint32_t kUnassigned = 0xffffffffu;

  ElementIndex index_;
  std::uint64_t order_;
  std::vector<Permutation> reps_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::size_t> inverse_class_;
};

inline ClassStructure conjugacy_classes(const PermGroup& g, const Limits& limits = default_limits()) {
  return ClassStructure(g, limits);
}

}  // namespace acd
