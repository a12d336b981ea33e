#include "eqgamma/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "eqgamma/error.hpp"

namespace eqgamma {

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators, std::size_t guard) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : generators)
    if (s.degree() != degree)
      throw Error(ErrorCode::SizeMismatch, "generator degree differs from group degree");
  std::erase_if(generators, [](const Permutation& s) { return s.is_identity(); });
  g.generators_ = std::move(generators);

  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.emplace(elements.front(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : g.generators_) {
      Permutation next = elements[i] * s;
      if (seen.contains(next)) continue;
      if (elements.size() >= guard)
        throw Error(ErrorCode::GroupTooLarge,
                    "group has more than " + std::to_string(guard) + " elements");
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  g.elements_ = std::move(elements);
  g.finalize();
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.size() > kMaxGroupOrder)
    throw Error(ErrorCode::GroupTooLarge, "element list exceeds the group order guard");
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].degree() != degree)
      throw Error(ErrorCode::SizeMismatch, "element degree differs from group degree");
    index.emplace(elements[i], i);
  }
  if (elements.empty() || !elements.front().is_identity())
    throw Error(ErrorCode::NotASubgroup, "element list does not contain the identity");

  // A finite subset closed under products is a subgroup. Checking products
  // against a greedy generating set keeps this linear in |G|.
  PermGroup g;
  g.degree_ = degree;
  std::vector<bool> covered(elements.size(), false);
  covered[0] = true;
  std::size_t covered_count = 1;
  for (std::size_t i = 1; i < elements.size() && covered_count < elements.size(); ++i) {
    if (covered[i]) continue;
    g.generators_.push_back(elements[i]);
    std::vector<std::size_t> frontier;
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (covered[j]) frontier.push_back(j);
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (const auto& s : g.generators_) {
        auto it = index.find(elements[frontier[k]] * s);
        if (it == index.end())
          throw Error(ErrorCode::NotASubgroup, "element list is not closed under composition");
        if (!covered[it->second]) {
          covered[it->second] = true;
          ++covered_count;
          frontier.push_back(it->second);
        }
      }
    }
  }
  for (const auto& s : g.generators_)
    for (const auto& x : elements)
      if (!index.contains(x * s))
        throw Error(ErrorCode::NotASubgroup, "element list is not closed under composition");
  g.elements_ = std::move(elements);
  g.finalize();
  return g;
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

void PermGroup::finalize() {
  std::sort(elements_.begin(), elements_.end());
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  exponent_ = 1;
  for (const auto& x : elements_) exponent_ = std::lcm(exponent_, x.order());

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  class_of_.assign(elements_.size(), unset);
  classes_.clear();
  std::vector<Permutation> gen_inverses;
  for (const auto& s : generators_) gen_inverses.push_back(s.inverse());
  for (std::size_t start = 0; start < elements_.size(); ++start) {
    if (class_of_[start] != unset) continue;
    const std::size_t c = classes_.size();
    std::vector<std::size_t> members{start};
    class_of_[start] = c;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t j = 0; j < generators_.size(); ++j) {
        std::size_t idx = index_.at(generators_[j] * elements_[members[k]] * gen_inverses[j]);
        if (class_of_[idx] == unset) {
          class_of_[idx] = c;
          members.push_back(idx);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& x) { return other.contains(x); });
}

std::size_t PermGroup::class_of(const Permutation& p) const {
  auto idx = index_of(p);
  if (!idx) throw Error(ErrorCode::NotASubgroup, "permutation is not a group element");
  return class_of_[*idx];
}

std::size_t PermGroup::power_class(std::size_t c, long long k) const {
  const Permutation& rep = class_representative(c);
  const long long n = rep.order();
  long long e = ((k % n) + n) % n;
  Permutation result = Permutation::identity(degree_);
  for (long long i = 0; i < e; ++i) result = result * rep;
  return class_of(result);
}

GroupPtr make_group(PermGroup group) { return std::make_shared<const PermGroup>(std::move(group)); }

PermGroup symmetric_group(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return block_symmetric_group(n, {all});
}

PermGroup block_symmetric_group(int degree, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> gens;
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> swap(static_cast<std::size_t>(degree));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[block[0]], swap[block[1]]);
    gens.emplace_back(std::move(swap));
    if (block.size() > 2) {
      std::vector<int> cycle(static_cast<std::size_t>(degree));
      std::iota(cycle.begin(), cycle.end(), 0);
      for (std::size_t i = 0; i < block.size(); ++i) cycle[block[i]] = block[(i + 1) % block.size()];
      gens.emplace_back(std::move(cycle));
    }
  }
  return PermGroup::generate(degree, std::move(gens));
}

PermGroup cyclic_subgroup(const Permutation& g) { return PermGroup::generate(g.degree(), {g}); }

std::vector<PermGroup> all_subgroups(const PermGroup& group) {
  constexpr std::size_t kMaxOrder = 5040;
  const std::size_t n = group.order();
  if (n > kMaxOrder)
    throw Error(ErrorCode::GroupTooLarge, "subgroup enumeration is limited to order 5040");

  // Work with element indices and a product table.
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = *group.index_of(group.element(a) * group.element(b));

  struct Found {
    std::vector<bool> members;
    std::vector<std::size_t> gens;
  };
  auto closure = [&](std::vector<std::size_t> gens) {
    std::vector<bool> in(n, false);
    std::vector<std::size_t> list{0};
    in[0] = true;
    for (std::size_t k = 0; k < list.size(); ++k)
      for (std::size_t s : gens) {
        std::size_t x = table[list[k] * n + s];
        if (!in[x]) {
          in[x] = true;
          list.push_back(x);
        }
      }
    return Found{std::move(in), std::move(gens)};
  };

  std::vector<Found> found{closure({})};
  std::set<std::vector<bool>> seen{found.front().members};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 1; g < n; ++g) {
      if (found[i].members[g]) continue;
      auto gens = found[i].gens;
      gens.push_back(g);
      Found next = closure(std::move(gens));
      if (seen.insert(next.members).second) found.push_back(std::move(next));
    }
  }

  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (const auto& f : found) {
    std::vector<Permutation> elems;
    for (std::size_t i = 0; i < n; ++i)
      if (f.members[i]) elems.push_back(group.element(i));
    result.push_back(PermGroup::from_elements(group.degree(), std::move(elems)));
  }
  std::sort(result.begin(), result.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return result;
}

}  // namespace eqgamma
