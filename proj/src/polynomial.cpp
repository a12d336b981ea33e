#include "eqgamma/polynomial.hpp"

#include <algorithm>

#include "eqgamma/error.hpp"

namespace eqgamma {

IntPolynomial trimmed(IntPolynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trimmed(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return trimmed(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trimmed(std::move(out));
}

IntPolynomial shifted(const IntPolynomial& p, int k) {
  if (p.empty()) return {};
  if (k < 0) {
    for (int i = 0; i < -k && i < static_cast<int>(p.size()); ++i)
      if (p[i] != 0) throw Error(ErrorCode::InvalidArgument, "negative shift drops nonzero terms");
    if (-k >= static_cast<int>(p.size())) return {};
    return IntPolynomial(p.begin() - k, p.end());
  }
  IntPolynomial out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

IntPolynomial geometric_sum(int k) { return IntPolynomial(static_cast<std::size_t>(k), 1); }

IntPolynomial one_plus_t_power(int k) {
  IntPolynomial out{1};
  for (int i = 0; i < k; ++i) out = out * IntPolynomial{1, 1};
  return out;
}

int degree(const IntPolynomial& p) { return static_cast<int>(trimmed(p).size()) - 1; }

bool is_palindromic(const IntPolynomial& p, int s) {
  if (degree(p) > s) return false;
  auto at = [&](int i) -> std::int64_t { return i < static_cast<int>(p.size()) ? p[i] : 0; };
  for (int i = 0; i <= s; ++i)
    if (at(i) != at(s - i)) return false;
  return true;
}

std::string to_string(const IntPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    std::string term;
    if (i == 0 || mag != 1) term = std::to_string(mag);
    if (i >= 1) term += "t";
    if (i >= 2) term += "^" + std::to_string(i);
    if (out.empty())
      out = c < 0 ? "-" + term : term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

CharPolynomial::CharPolynomial(GroupPtr group, std::vector<ClassFunction> coefficients)
    : group_(std::move(group)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c.values().size() != group_->class_count())
      throw Error(ErrorCode::SizeMismatch, "coefficient lives on another group");
  trim();
}

CharPolynomial CharPolynomial::zero(GroupPtr group) { return CharPolynomial(std::move(group), {}); }

CharPolynomial CharPolynomial::from_class_evaluations(GroupPtr group,
                                                      const std::vector<IntPolynomial>& values) {
  if (values.size() != group->class_count())
    throw Error(ErrorCode::SizeMismatch, "one evaluation per conjugacy class is required");
  std::size_t len = 0;
  for (const auto& v : values) len = std::max(len, v.size());
  std::vector<ClassFunction> coeffs;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Cyclotomic> vals;
    for (const auto& v : values) vals.emplace_back(i < v.size() ? v[i] : 0);
    coeffs.emplace_back(group, std::move(vals));
  }
  return CharPolynomial(std::move(group), std::move(coeffs));
}

ClassFunction CharPolynomial::coefficient(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return ClassFunction::zero(group_);
}

IntPolynomial CharPolynomial::at_class(std::size_t c) const {
  IntPolynomial out;
  for (const auto& f : coeffs_) out.push_back(f.at_class(c).integer_value());
  return trimmed(std::move(out));
}

void CharPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CharPolynomial& CharPolynomial::operator+=(const CharPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), ClassFunction::zero(group_));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

CharPolynomial& CharPolynomial::operator-=(const CharPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), ClassFunction::zero(group_));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

CharPolynomial operator*(const CharPolynomial& a, const CharPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return CharPolynomial::zero(a.group_);
  std::vector<ClassFunction> out(a.coeffs_.size() + b.coeffs_.size() - 1, ClassFunction::zero(a.group_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return CharPolynomial(a.group_, std::move(out));
}

CharPolynomial CharPolynomial::shifted(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative shift");
  if (coeffs_.empty()) return *this;
  std::vector<ClassFunction> out(static_cast<std::size_t>(k), ClassFunction::zero(group_));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return CharPolynomial(group_, std::move(out));
}

bool operator==(const CharPolynomial& a, const CharPolynomial& b) { return a.coeffs_ == b.coeffs_; }

CharPolynomial induce(const GroupPtr& sub, const GroupPtr& parent, const CharPolynomial& p) {
  const auto transversal = left_transversal(*parent, *sub);
  std::vector<ClassFunction> out;
  for (const auto& c : p.coefficients()) out.push_back(induce(sub, parent, c, &transversal));
  return CharPolynomial(parent, std::move(out));
}

CharPolynomial restrict(const GroupPtr& parent, const GroupPtr& sub, const CharPolynomial& p) {
  std::vector<ClassFunction> out;
  for (const auto& c : p.coefficients()) out.push_back(restrict(parent, sub, c));
  return CharPolynomial(sub, std::move(out));
}

std::vector<VirtualCharacter> decompose(const TablePtr& table, const CharPolynomial& p) {
  std::vector<VirtualCharacter> out;
  for (const auto& c : p.coefficients()) out.push_back(decompose(table, c));
  return out;
}

CharPolynomial to_char_polynomial(const std::vector<VirtualCharacter>& coefficients) {
  if (coefficients.empty()) throw Error(ErrorCode::InvalidArgument, "no coefficients to convert");
  std::vector<ClassFunction> out;
  for (const auto& v : coefficients) out.push_back(v.class_function());
  return CharPolynomial(coefficients.front().table()->group(), std::move(out));
}

bool is_effective(const std::vector<VirtualCharacter>& coefficients) {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const VirtualCharacter& v) { return is_effective(v); });
}

std::string to_string(const std::vector<VirtualCharacter>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    std::string c = coefficients[i].to_string();
    std::string term;
    if (i == 0)
      term = c;
    else
      term = (c == "1" ? "" : "(" + c + ")") + "t" + (i >= 2 ? "^" + std::to_string(i) : "");
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace eqgamma
