#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqgamma/perm_group.hpp"
#include "eqgamma/polynomial.hpp"
#include "eqgamma/poset.hpp"

namespace eqgamma {

/// Number of f: P -> {0..m} with f(p) >= f(q) for p <= q, strictly on
/// nonascending pairs, and (when `fix` is given) f constant on the cycles of
/// `fix`. Dynamic programming over cover constraints between the cycles.
/// Throws NotConsistent or NotAnAutomorphism.
std::int64_t count_points(const LabeledPoset& lp, int m, const std::optional<Permutation>& fix = {});

/// Same count by enumerating all (m+1)^|P| maps and testing every pair
/// p < q literally. Throws GuardExceeded past 10^8 maps.
std::int64_t count_points_bruteforce(const LabeledPoset& lp, int m,
                                     const std::optional<Permutation>& fix = {});

/// h* from the dilate counts c_0..c_|P| by binomial convolution.
IntPolynomial hstar(const LabeledPoset& lp);
/// sum over linear extensions of t^des for the vertex labeling omega.
IntPolynomial hstar_linear_extensions(const LabeledPoset& lp);

/// For each class representative u: hstar(P/<u>) * prod_j (1 + ... + t^(mu_j - 1)).
CharPolynomial equivariant_hstar(const LabeledPoset& lp, const GroupPtr& group);
/// For each class representative u: the fixed-point count series up to
/// max_dilate times (1 - t) prod_j (1 - t^mu_j). Coefficients past |P| must
/// vanish inside the window (TruncationUnstable otherwise).
CharPolynomial equivariant_hstar_bruteforce(const LabeledPoset& lp, const GroupPtr& group,
                                            int max_dilate);
/// Default window for the brute-force path: |P| + largest cycle + 1.
int default_max_dilate(const LabeledPoset& lp, const PermGroup& group);

/// Sum over saturation orbits of Ind Res of the saturations' equivariant h*.
/// Requires a parity-form poset (RankOutOfParityRange otherwise).
CharPolynomial hstar_via_saturations(const LabeledPoset& lp, const GroupPtr& group);

struct Inequality {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;
  bool strict = false;
};

/// {x : normal . x <= offset (or <)} for each inequality; the m-th dilate
/// scales every offset by m.
struct LatticePolytopeHRep {
  int dimension = 0;
  std::vector<Inequality> inequalities;
};

/// Integer box containing the polytope (dilate 1), by Fourier-Motzkin.
/// Throws Unbounded.
std::vector<std::pair<Rational, Rational>> bounding_box(const LatticePolytopeHRep& poly);
/// Lattice points of the m-th dilate fixed by `fix` (all points if empty).
std::int64_t count_lattice_points(const LatticePolytopeHRep& poly, int m,
                                  const std::optional<Permutation>& fix = {});

/// Equivariant h* of an explicit polytope under coordinate permutations.
/// Throws Unbounded, GroupDoesNotPreserve, TruncationUnstable.
CharPolynomial generic_equivariant_hstar(const LatticePolytopeHRep& poly, const GroupPtr& group,
                                         std::optional<int> max_dilate = {});

}  // namespace eqgamma
