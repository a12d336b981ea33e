#include "eqgamma/saturation.hpp"

#include <algorithm>
#include <set>

#include "eqgamma/error.hpp"

namespace eqgamma {

std::vector<int> Saturation::profile() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  return out;
}

std::vector<Saturation> enumerate_saturations(const LabeledPoset& lp) {
  if (!lp.is_parity())
    throw Error(ErrorCode::RankOutOfParityRange, "saturations are enumerated for ranks in {0, 1} only");
  const auto& poset = lp.poset();
  const int n = lp.size();
  std::vector<Saturation> out;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  Saturation current;

  auto recurse = [&](auto&& self, int placed_count) -> void {
    if (placed_count == n) {
      out.push_back(current);
      return;
    }
    const int level = static_cast<int>(current.blocks.size());
    std::vector<int> candidates;
    for (int p = 0; p < n; ++p) {
      if (placed[p] || lp.rank(p) != level % 2) continue;
      bool ready = true;
      for (int x = 0; x < n && ready; ++x)
        if (poset.less(x, p) && !placed[x]) ready = false;
      if (ready) candidates.push_back(p);
    }
    const std::size_t c = candidates.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << c); ++mask) {
      std::vector<int> block;
      for (std::size_t i = 0; i < c; ++i)
        if (mask >> i & 1) block.push_back(candidates[i]);
      for (int p : block) placed[p] = true;
      if (level > 0) current.block_signs.push_back(level % 2 == 1 ? 1 : -1);
      current.blocks.push_back(block);
      self(self, placed_count + static_cast<int>(block.size()));
      current.blocks.pop_back();
      if (level > 0) current.block_signs.pop_back();
      for (int p : block) placed[p] = false;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

LabeledPoset saturated_poset(const LabeledPoset& lp, const Saturation& s) {
  if (s.block_signs.size() + 1 != s.blocks.size())
    throw Error(ErrorCode::InvalidArgument, "saturation needs one sign per block gap");
  std::vector<SignedCover> covers;
  for (std::size_t i = 0; i + 1 < s.blocks.size(); ++i)
    for (int a : s.blocks[i])
      for (int b : s.blocks[i + 1]) covers.push_back({a, b, s.block_signs[i]});
  return labeled_poset(lp.poset().names(), covers);
}

bool is_saturation(const LabeledPoset& lp, const Saturation& s) {
  if (!lp.is_consistent()) return false;
  const int n = lp.size();
  // Q = P as sets: the blocks partition the ground set.
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const auto& block : s.blocks) {
    if (block.empty()) return false;
    for (int p : block) {
      if (p < 0 || p >= n) return false;
      ++count[p];
    }
  }
  if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; })) return false;
  if (s.block_signs.size() + 1 != s.blocks.size()) return false;
  for (int sign : s.block_signs)
    if (sign != 1 && sign != -1) return false;

  const LabeledPoset q = saturated_poset(lp, s);
  if (!q.is_consistent()) return false;
  const auto& qp = q.poset();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (std::abs(q.rank(y) - q.rank(x)) == 1 && !qp.comparable(x, y)) return false;
      if (lp.poset().less(x, y) && !qp.less(x, y)) return false;
    }
  for (int x = 0; x < n; ++x)
    if (q.rank(x) != lp.rank(x)) return false;
  return true;
}

Saturation act(const Permutation& g, const Saturation& s) {
  Saturation out;
  out.block_signs = s.block_signs;
  for (const auto& block : s.blocks) {
    std::vector<int> image;
    for (int p : block) image.push_back(g(p));
    std::sort(image.begin(), image.end());
    out.blocks.push_back(std::move(image));
  }
  return out;
}

PermGroup saturation_automorphisms(int degree, const Saturation& s) {
  return block_symmetric_group(degree, s.blocks);
}

std::vector<SaturationOrbit> saturation_orbits(const LabeledPoset& lp, const PermGroup& group) {
  if (group.degree() != lp.size())
    throw Error(ErrorCode::NotASubgroupOfAut, "group acts on a different number of points");
  for (const auto& s : group.generators())
    if (!is_automorphism(lp, s))
      throw Error(ErrorCode::NotASubgroupOfAut, "group contains a non-automorphism");
  const auto all = enumerate_saturations(lp);
  std::set<Saturation> assigned;
  std::vector<SaturationOrbit> out;
  for (const auto& s : all) {
    if (assigned.contains(s)) continue;
    std::set<Saturation> members;
    std::vector<Permutation> fixing;
    for (const auto& g : group.elements()) {
      Saturation image = act(g, s);
      if (image == s) fixing.push_back(g);
      members.insert(std::move(image));
    }
    // Stabilizer by the intersection G cap Aut(Q, delta).
    const PermGroup aut_q = automorphism_group(saturated_poset(lp, s));
    std::vector<Permutation> intersection;
    for (const auto& g : group.elements())
      if (aut_q.contains(g)) intersection.push_back(g);
    if (intersection != fixing)
      throw Error(ErrorCode::InternalError, "stabilizer disagrees with G cap Aut(Q, delta)");
    if (members.size() * fixing.size() != group.order())
      throw Error(ErrorCode::InternalError, "orbit-stabilizer count fails");
    assigned.insert(members.begin(), members.end());
    SaturationOrbit orbit;
    orbit.members.assign(members.begin(), members.end());
    // `all` is sorted, so s is the least member of its orbit.
    orbit.representative = s;
    orbit.stabilizer = make_group(PermGroup::from_elements(group.degree(), std::move(fixing)));
    out.push_back(std::move(orbit));
  }
  std::stable_sort(out.begin(), out.end(), [](const SaturationOrbit& a, const SaturationOrbit& b) {
    if (a.representative.blocks.size() != b.representative.blocks.size())
      return a.representative.blocks.size() < b.representative.blocks.size();
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.representative < b.representative;
  });
  return out;
}

}  // namespace eqgamma
