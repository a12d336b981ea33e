#include "eqgamma/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "eqgamma/error.hpp"

namespace eqgamma {

namespace {

std::vector<std::int64_t> compute_cyclotomic(int n) {
  // (x^n - 1) / prod_{d | n, d < n} Phi_d(x), exact long division by monic polys.
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const long dd = static_cast<long>(div.size()) - 1;
    std::vector<std::int64_t> quot(num.size() - static_cast<std::size_t>(dd), 0);
    for (long i = static_cast<long>(num.size()) - 1; i >= dd; --i) {
      const std::int64_t c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(Rational value) : order_(1), coeffs_{value} {}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
  const long long e = ((k % n) + n) % n;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
  raw[e] = 1;
  return from_coefficients(n, std::move(raw));
}

Cyclotomic Cyclotomic::from_coefficients(int n, std::vector<Rational> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0);
  Cyclotomic c(n, std::move(coefficients));
  c.reduce_and_normalize();
  return c;
}

void Cyclotomic::reduce_and_normalize() {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs_.size(); i-- > deg;) {
    Rational c = coeffs_[i];
    if (c.numerator() == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) coeffs_[i - deg + j] -= c * phi[j];
  }
  coeffs_.resize(deg, Rational(0));
  bool rational = true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i].numerator() != 0) rational = false;
  if (rational) {
    Rational r = coeffs_.empty() ? Rational(0) : coeffs_[0];
    order_ = 1;
    coeffs_.assign(1, r);
  }
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::NotVirtual, "value " + to_string() + " is not rational");
  return coeffs_[0];
}

std::int64_t Cyclotomic::integer_value() const {
  Rational r = rational_value();
  if (r.denominator() != 1)
    throw Error(ErrorCode::NotVirtual, "value " + to_string() + " is not an integer");
  return r.numerator();
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  std::vector<Rational> raw(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    raw[(static_cast<std::size_t>(order_) - k) % static_cast<std::size_t>(order_)] += coeffs_[k];
  return from_coefficients(order_, std::move(raw));
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m % order_ != 0) throw Error(ErrorCode::InvalidArgument, "lift target is not a multiple");
  if (m == order_ || is_rational()) return *this;
  const std::size_t step = static_cast<std::size_t>(m / order_);
  std::vector<Rational> raw((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * step] = coeffs_[k];
  Cyclotomic c(m, std::move(raw));
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.coeffs_.size(); i-- > deg;) {
    Rational v = c.coeffs_[i];
    if (v.numerator() == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) c.coeffs_[i - deg + j] -= v * phi[j];
  }
  c.coeffs_.resize(deg, Rational(0));
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (order_ == other.order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    if (order_ != 1) reduce_and_normalize();
    return *this;
  }
  const int m = std::lcm(order_, other.order_);
  Cyclotomic a = lifted(m);
  Cyclotomic b = other.lifted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.reduce_and_normalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic c = *this;
  for (auto& x : c.coeffs_) x = -x;
  return c;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.is_rational()) {
    const Rational s = other.coeffs_[0];
    for (auto& x : coeffs_) x *= s;
    if (s.numerator() == 0) reduce_and_normalize();
    return *this;
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    *this = other;
    for (auto& x : coeffs_) x *= s;
    if (s.numerator() == 0) reduce_and_normalize();
    return *this;
  }
  const int m = std::lcm(order_, other.order_);
  Cyclotomic a = lifted(m);
  Cyclotomic b = other.lifted(m);
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].numerator() == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return *this = from_coefficients(m, std::move(raw));
}

Cyclotomic Cyclotomic::operator/(const Rational& r) const {
  if (r.numerator() == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Cyclotomic c = *this;
  for (auto& x : c.coeffs_) x /= r;
  return c;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() || b.is_rational()) return false;
  const int m = std::lcm(a.order_, b.order_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.order_, b.order_);
  const Cyclotomic la = a.lifted(m);
  const Cyclotomic lb = b.lifted(m);
  const std::size_t n = std::max(la.coeffs_.size(), lb.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = i < la.coeffs_.size() ? la.coeffs_[i] : Rational(0);
    Rational y = i < lb.coeffs_.size() ? lb.coeffs_[i] : Rational(0);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return eqgamma::to_string(coeffs_[0]);
  std::string out;
  const std::string z = "z" + std::to_string(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_[k];
    if (c.numerator() == 0) continue;
    std::string term;
    bool negative = c.numerator() < 0;
    Rational mag = negative ? -c : c;
    if (k == 0) {
      term = eqgamma::to_string(mag);
    } else {
      if (mag != Rational(1)) term = eqgamma::to_string(mag) + "*";
      term += z;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
  }
  return out;
}

}  // namespace eqgamma
