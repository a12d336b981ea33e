#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqgamma/character.hpp"

namespace eqgamma {

using Partition = std::vector<int>;

/// All partitions of d, in decreasing lexicographic order ((d) first).
std::vector<Partition> partitions(int d);
/// "(2,1)" style label.
std::string partition_label(const Partition& lambda);

/// chi^lambda at cycle type mu by the Murnaghan-Nakayama rule.
/// Throws SizeMismatch unless |lambda| = |mu|.
std::int64_t symmetric_character(const Partition& lambda, const Partition& mu);

/// Character table of a group acting as the full symmetric group on its
/// degree, with irreducibles chi^lambda named by partition_label and listed in
/// partitions() order. Throws InvalidArgument when the group is not S_d.
TablePtr symmetric_group_table(const GroupPtr& group);

}  // namespace eqgamma
