#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqgamma/character.hpp"

namespace eqgamma {

/// Integer polynomial in t, constant term first, no trailing zeros.
using IntPolynomial = std::vector<std::int64_t>;

IntPolynomial trimmed(IntPolynomial p);
IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
/// t^k * p.
IntPolynomial shifted(const IntPolynomial& p, int k);
/// 1 + t + ... + t^(k-1).
IntPolynomial geometric_sum(int k);
/// (1 + t)^k.
IntPolynomial one_plus_t_power(int k);
/// Degree of p; -1 for the zero polynomial.
int degree(const IntPolynomial& p);
/// p_i = p_{s-i} for all i, with p of degree at most s.
bool is_palindromic(const IntPolynomial& p, int s);
std::string to_string(const IntPolynomial& p);

/// Polynomial in t whose coefficients are class functions of one group.
class CharPolynomial {
public:
  CharPolynomial() = default;
  CharPolynomial(GroupPtr group, std::vector<ClassFunction> coefficients);
  static CharPolynomial zero(GroupPtr group);
  /// Builds from the integer polynomial obtained at each conjugacy class.
  static CharPolynomial from_class_evaluations(GroupPtr group, const std::vector<IntPolynomial>& values);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<ClassFunction>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^i (zero past the end).
  ClassFunction coefficient(std::size_t i) const;
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Evaluation at the class c; requires integer values.
  IntPolynomial at_class(std::size_t c) const;
  IntPolynomial at(const Permutation& g) const { return at_class(group_->class_of(g)); }

  CharPolynomial& operator+=(const CharPolynomial& other);
  CharPolynomial& operator-=(const CharPolynomial& other);
  friend CharPolynomial operator+(CharPolynomial a, const CharPolynomial& b) { return a += b; }
  friend CharPolynomial operator-(CharPolynomial a, const CharPolynomial& b) { return a -= b; }
  friend CharPolynomial operator*(const CharPolynomial& a, const CharPolynomial& b);
  CharPolynomial shifted(int k) const;
  friend bool operator==(const CharPolynomial& a, const CharPolynomial& b);

private:
  void trim();

  GroupPtr group_;
  std::vector<ClassFunction> coeffs_;
};

CharPolynomial induce(const GroupPtr& sub, const GroupPtr& parent, const CharPolynomial& p);
CharPolynomial restrict(const GroupPtr& parent, const GroupPtr& sub, const CharPolynomial& p);

/// Coefficientwise decomposition; throws NotVirtual on non-integral data.
std::vector<VirtualCharacter> decompose(const TablePtr& table, const CharPolynomial& p);
CharPolynomial to_char_polynomial(const std::vector<VirtualCharacter>& coefficients);
bool is_effective(const std::vector<VirtualCharacter>& coefficients);
/// e.g. "1 + (5 + X.1)t + (3)t^2".
std::string to_string(const std::vector<VirtualCharacter>& coefficients);

}  // namespace eqgamma
