#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqgamma/perm_group.hpp"
#include "eqgamma/poset.hpp"

namespace eqgamma {

struct LawResult {
  std::string name;
  bool applicable = true;
  bool holds = false;
  std::string detail;
};

struct LawOptions {
  /// Window for the fixed-point series; the default is |P| + longest cycle + 1.
  std::optional<int> max_dilate;
  /// Also compare the DP count with brute-force enumeration (small inputs).
  bool oracle = false;
  /// Largest dilate for the brute-force comparison.
  int oracle_max_dilate = 5;
};

/// Quotient formula against the fixed-point series, plus the values at e.
LawResult law_evaluation(const LabeledPoset& lp, const GroupPtr& group, const LawOptions& options = {});
/// Saturation formula for the parity labeling.
LawResult law_main_theorem(const LabeledPoset& lp, const GroupPtr& group);
/// h*_eps = t^((r(eps_par) - r(eps)) / 2) h*_eps_par for graded input.
LawResult law_parity_shift(const LabeledPoset& lp, const GroupPtr& group);
/// h* of lp (+)_1 A_2 under G x S_2 is the product of the factors.
LawResult law_ordinal_sum(const LabeledPoset& lp, const GroupPtr& group);
/// For 1-graded input: degree |P| - r - 1, palindromic, effective coefficients.
LawResult law_palindromic(const LabeledPoset& lp, const GroupPtr& group);
/// #saturations of P/G = #saturations of P fixed by G (parity labeling).
LawResult law_saturation_bijection(const LabeledPoset& lp, const GroupPtr& group);
/// For 1-graded input: saturation gamma = extracted gamma, all effective.
LawResult law_gamma(const LabeledPoset& lp, const GroupPtr& group);
/// DP point counts against brute force for every g in the group.
LawResult law_oracle_counts(const LabeledPoset& lp, const GroupPtr& group, int max_dilate);

/// Every law above in order; errors raised inside a law count as failures.
std::vector<LawResult> verify_laws(const LabeledPoset& lp, const GroupPtr& group, const LawOptions& options = {});

/// Direct product of two permutation groups acting on the disjoint union.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

}  // namespace eqgamma
