#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace eqgamma {

/// Bijection of {0, ..., n-1}. Composition follows function notation:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  int order() const;

  /// Cycles including fixed points, each starting at its smallest point, in
  /// order of that smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle lengths sorted nonincreasingly (a partition of degree()).
  std::vector<int> cycle_type() const;

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for e.
  std::string to_cycle_string() const;
  /// Cycle notation using the given point names.
  std::string to_cycle_string(std::span<const std::string> names) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace eqgamma
