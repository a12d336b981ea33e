#include "eqgamma/permutation.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "eqgamma/error.hpp"

namespace eqgamma {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw Error(ErrorCode::InvalidArgument, "image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<int>(i);
  return inv;
}

int Permutation::order() const {
  int result = 1;
  for (int len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::vector<std::string> names;
  for (int i = 0; i < degree(); ++i) names.push_back(std::to_string(i + 1));
  return to_cycle_string(names);
}

std::string Permutation::to_cycle_string(std::span<const std::string> names) const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += names[c[i]];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::SizeMismatch, "composing permutations of different degree");
  Permutation c;
  c.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) c.images_[i] = a.images_[b.images_[i]];
  return c;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  auto im = p.images();
  return boost::hash_range(im.begin(), im.end());
}

}  // namespace eqgamma
