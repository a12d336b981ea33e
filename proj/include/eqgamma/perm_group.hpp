#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "eqgamma/permutation.hpp"

namespace eqgamma {

/// Groups are enumerated explicitly; anything larger than this is refused.
inline constexpr std::size_t kMaxGroupOrder = 100000;

/// Finite permutation group with every element listed.
///
/// Elements are stored in lexicographic order of their image vectors, so the
/// identity is element 0. Conjugacy classes are numbered by their
/// lexicographically least member, which is also the class representative;
/// class 0 is therefore {e}.
class PermGroup {
public:
  /// Closure of the generators. Throws GroupTooLarge past `guard` elements.
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::size_t guard = kMaxGroupOrder);
  /// Group from a full element list; closure is verified.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);
  static PermGroup trivial(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::span<const Permutation> generators() const noexcept { return generators_; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  bool is_subgroup_of(const PermGroup& other) const;

  std::size_t class_count() const noexcept { return classes_.size(); }
  std::span<const std::size_t> class_members(std::size_t c) const { return classes_[c]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  const Permutation& class_representative(std::size_t c) const {
    return elements_[classes_[c].front()];
  }
  std::size_t class_of_index(std::size_t element_index) const { return class_of_[element_index]; }
  /// Throws NotASubgroup if p is not an element.
  std::size_t class_of(const Permutation& p) const;
  /// Class containing rep(c)^k.
  std::size_t power_class(std::size_t c, long long k) const;
  std::size_t inverse_class(std::size_t c) const { return power_class(c, -1); }

  /// Least common multiple of the element orders.
  int exponent() const noexcept { return exponent_; }

private:
  PermGroup() = default;
  void finalize();

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  int exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

GroupPtr make_group(PermGroup group);

/// Full symmetric group on {0, ..., n-1}.
PermGroup symmetric_group(int n);
/// Direct product of the symmetric groups of the given disjoint blocks,
/// acting on {0, ..., degree-1} and fixing every point outside the blocks.
PermGroup block_symmetric_group(int degree, const std::vector<std::vector<int>>& blocks);
/// <g> as a permutation group.
PermGroup cyclic_subgroup(const Permutation& g);
/// Every subgroup of `group`, ordered by (order, sorted element list).
std::vector<PermGroup> all_subgroups(const PermGroup& group);

}  // namespace eqgamma
