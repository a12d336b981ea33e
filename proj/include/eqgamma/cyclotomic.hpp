#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace eqgamma {

using Rational = boost::rational<std::int64_t>;

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Exact element of Q(zeta_N), zeta_N = exp(2 pi i / N).
///
/// Stored as coefficients in the power basis 1, z, ..., z^(phi(N)-1) reduced
/// modulo the N-th cyclotomic polynomial. Rational values are always kept at
/// N = 1, so mixing them with any other field is a scalar operation. Values in
/// different fields are lifted to the lcm field before combining.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(std::int64_t value) : Cyclotomic(Rational(value)) {}  // NOLINT: implicit by intent
  Cyclotomic(Rational value);                                        // NOLINT
  /// zeta_n^k.
  static Cyclotomic root_of_unity(int n, long long k);
  /// Builds from raw power-basis coefficients (length <= phi(n)); reduces.
  static Cyclotomic from_coefficients(int n, std::vector<Rational> coefficients);

  int field_order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_rational() const noexcept { return order_ == 1; }
  bool is_integer() const noexcept { return order_ == 1 && coeffs_[0].denominator() == 1; }
  bool is_zero() const noexcept { return order_ == 1 && coeffs_[0].numerator() == 0; }
  /// Throws NotVirtual when the value is not rational.
  Rational rational_value() const;
  /// Throws NotVirtual when the value is not an integer.
  std::int64_t integer_value() const;

  /// Complex conjugate (zeta -> zeta^(N-1)).
  Cyclotomic conj() const;
  /// Same value expressed in Q(zeta_m); requires field_order() | m.
  Cyclotomic lifted(int m) const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator/(const Rational& r) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Total order: lexicographic on coefficients after lifting to a common field.
  friend std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable form, e.g. "-1", "1/2", "z3 + 2*z3^2" style for the
  /// power basis ("z<N>^k" terms).
  std::string to_string() const;

private:
  Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  void reduce_and_normalize();

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

inline bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) < 0; }

std::string to_string(const Rational& r);

}  // namespace eqgamma
