#pragma once

#include <compare>
#include <vector>

#include "eqgamma/perm_group.hpp"
#include "eqgamma/poset.hpp"

namespace eqgamma {

/// A saturation A_0 (+)_{s_1} A_1 (+)_{s_2} ... (+)_{s_k} A_k of a labeled
/// poset, each A_i an antichain of element indices (kept sorted).
struct Saturation {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_signs;

  /// r_Q(1): the number of gaps between blocks.
  int grade_value_one() const noexcept { return static_cast<int>(blocks.size()) - 1; }
  std::vector<int> profile() const;

  friend bool operator==(const Saturation&, const Saturation&) = default;
  friend auto operator<=>(const Saturation&, const Saturation&) = default;
};

/// All saturations of a parity-form poset: ordered partitions into nonempty
/// blocks with A_i of rank i mod 2 that extend the order. Sorted.
/// Throws RankOutOfParityRange unless lp.is_parity().
std::vector<Saturation> enumerate_saturations(const LabeledPoset& lp);

/// The saturated poset (Q, delta) with the element names of lp.
LabeledPoset saturated_poset(const LabeledPoset& lp, const Saturation& s);

/// Checks the four defining clauses directly on (Q, delta): same ground set,
/// elements of adjacent rank comparable, Q extends P, ranks agree.
bool is_saturation(const LabeledPoset& lp, const Saturation& s);

/// g . (Q, delta): x <_{gQ} y iff g^-1 x <_Q g^-1 y.
Saturation act(const Permutation& g, const Saturation& s);

/// Aut(Q, delta) = S_{|A_0|} x ... x S_{|A_k|} on the ground set of lp.
PermGroup saturation_automorphisms(int degree, const Saturation& s);

struct SaturationOrbit {
  Saturation representative;
  std::vector<Saturation> members;
  GroupPtr stabilizer;
};

/// G-orbits on enumerate_saturations(lp), ordered by block count, then by
/// decreasing orbit size, then by representative. Stabilizers are computed
/// as fixed-point sets and as G intersected with Aut(Q, delta); a
/// disagreement raises InternalError.
std::vector<SaturationOrbit> saturation_orbits(const LabeledPoset& lp, const PermGroup& group);

}  // namespace eqgamma
