#pragma once

#include <vector>

#include "eqgamma/ehrhart.hpp"
#include "eqgamma/polynomial.hpp"
#include "eqgamma/saturation.hpp"
#include "eqgamma/symmetric.hpp"

namespace eqgamma {

/// f(t) = sum_i gamma_i t^i (1 + t)^(s - 2i).
struct GammaPolynomial {
  std::vector<VirtualCharacter> coefficients;
  int degree_s = 0;
  Rational center;

  /// sum_i gamma_i t^i (1 + t)^(s - 2i) as a CharPolynomial.
  CharPolynomial reconstruct() const;
  bool is_effective() const;
  std::string to_string() const;
};

/// gamma-coefficients as class functions by elimination against the basis
/// t^i (1 + t)^(s - 2i). Throws DegreeMismatch, NotPalindromic.
std::vector<ClassFunction> gamma_class_functions(const CharPolynomial& p, int expected_degree);
/// Same, decomposed over `table`.
GammaPolynomial gamma_extract(const TablePtr& table, const CharPolynomial& p, int expected_degree);
/// Integer version.
IntPolynomial gamma_extract(const IntPolynomial& p, int expected_degree);

struct TableauDatum {
  Partition shape;
  int descent_count = 0;
  bool has_double_descent = false;
  bool has_final_descent = false;
};

/// All standard Young tableaux with d boxes. Entry i is a descent when it
/// sits in a strictly higher row (smaller row index) than i + 1.
std::vector<TableauDatum> standard_tableaux(int d);

/// gamma of the unit cube under S_d: chi_{d,i} = sum of chi^lambda(T) over
/// tableaux without double or final descent and with i descents.
/// Guard 1 <= d <= 8 (InvalidArgument otherwise).
GammaPolynomial cube_gamma(int d);
/// chi_{d,i} at a permutation of cycle type mu (a partition of d).
IntPolynomial cube_gamma_values(int d, const Partition& mu);
/// #{w in S_d without double or final descent, des(w) = i}.
IntPolynomial eulerian_gamma(int d);

/// (|P| - r_P(1) - 1); throws NotOneGraded unless all labels are +1 and
/// the poset is graded.
int one_graded_degree(const LabeledPoset& lp);

struct OrbitContribution {
  SaturationOrbit orbit;
  int shift = 0;
  /// Ind_stab^G Res (t^shift prod of cube gammas), as class functions of G.
  std::vector<ClassFunction> contribution;
};

/// Per-orbit terms of the saturation formula for gamma.
std::vector<OrbitContribution> gamma_contributions(const LabeledPoset& lp, const GroupPtr& group);
/// Sum of the per-orbit terms, decomposed over `table`.
GammaPolynomial gamma_via_saturations(const LabeledPoset& lp, const GroupPtr& group, const TablePtr& table);

struct OrbitLedger {
  Saturation representative;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  int shift = 0;
  std::vector<VirtualCharacter> contribution;
};

struct GammaReport {
  TablePtr table;
  GammaPolynomial extracted;
  GammaPolynomial via_saturations;
  bool agree = false;
  std::vector<bool> coefficient_effective;
  bool effective = false;
  std::vector<OrbitLedger> orbits;
};

/// Both gamma computations, their comparison and the per-orbit ledger. When
/// `table` is null the Dixon table of the group is used.
GammaReport effectiveness_report(const LabeledPoset& lp, const GroupPtr& group, TablePtr table = nullptr);

}  // namespace eqgamma
