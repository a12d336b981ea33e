#pragma once

#include <optional>
#include <random>
#include <vector>

#include "eqgamma/poset.hpp"

/// Connected 1-graded posets (all maximal chains of equal length) with n
/// elements, one per isomorphism class, with all labels +1.
std::vector<eqgamma::LabeledPoset> connected_graded_posets(int n);

/// All posets with n elements up to isomorphism (connected or not).
std::vector<eqgamma::FinitePoset> all_posets(int n);

/// A random eps-consistent labeling of `poset`, if the draw succeeds: ranks
/// are chosen along a linear extension, each adjacent to all lower covers.
std::optional<eqgamma::EdgeLabeling> random_consistent_labeling(std::mt19937& rng,
                                                                const eqgamma::FinitePoset& poset);

/// A random connected poset with at most `max_size` elements carrying a
/// random eps-graded labeling, drawn by choosing ranks cover by cover.
eqgamma::LabeledPoset random_eps_graded(std::mt19937& rng, int max_size);
