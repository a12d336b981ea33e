#include "eqgamma/gamma.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eqgamma/error.hpp"

namespace eqgamma {

namespace {

constexpr int kCubeGuard = 8;

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_cube_degree(int d) {
  if (d < 1 || d > kCubeGuard)
    throw Error(ErrorCode::InvalidArgument, "cube dimension must be in 1.." + std::to_string(kCubeGuard));
}

// Tableaux contributing to chi_{d,i}: (shape, descent count).
const std::vector<std::pair<Partition, int>>& cube_tableaux(int d) {
  static std::map<int, std::vector<std::pair<Partition, int>>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<Partition, int>> out;
  for (const auto& t : standard_tableaux(d))
    if (!t.has_double_descent && !t.has_final_descent) out.emplace_back(t.shape, t.descent_count);
  return cache.emplace(d, std::move(out)).first->second;
}

std::vector<VirtualCharacter> decompose_all(const TablePtr& table, const std::vector<ClassFunction>& fs) {
  std::vector<VirtualCharacter> out;
  for (const auto& f : fs) out.push_back(decompose(table, f));
  return out;
}

}  // namespace

CharPolynomial GammaPolynomial::reconstruct() const {
  if (coefficients.empty()) throw Error(ErrorCode::InvalidArgument, "empty gamma polynomial");
  const GroupPtr& group = coefficients.front().table()->group();
  std::vector<ClassFunction> out(static_cast<std::size_t>(degree_s) + 1, ClassFunction::zero(group));
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const ClassFunction g = coefficients[i].class_function();
    const int e = degree_s - 2 * static_cast<int>(i);
    for (int j = 0; j <= e; ++j) out[i + j] += g * Cyclotomic(binomial(e, j));
  }
  return CharPolynomial(group, std::move(out));
}

bool GammaPolynomial::is_effective() const { return eqgamma::is_effective(coefficients); }

std::string GammaPolynomial::to_string() const { return eqgamma::to_string(coefficients); }

std::vector<ClassFunction> gamma_class_functions(const CharPolynomial& p, int expected_degree) {
  const int s = expected_degree;
  if (s < 0 || p.degree() != s)
    throw Error(ErrorCode::DegreeMismatch, "polynomial has degree " + std::to_string(p.degree()) +
                                               ", expected " + std::to_string(s));
  for (int i = 0; i <= s / 2; ++i)
    if (!(p.coefficient(i) == p.coefficient(s - i)))
      throw Error(ErrorCode::NotPalindromic, "coefficients of t^" + std::to_string(i) + " and t^" +
                                                 std::to_string(s - i) + " differ");
  std::vector<ClassFunction> residual = p.coefficients();
  std::vector<ClassFunction> gamma;
  for (int i = 0; i <= s / 2; ++i) {
    const ClassFunction g = residual[i];
    const int e = s - 2 * i;
    for (int j = 0; j <= e; ++j) residual[i + j] -= g * Cyclotomic(binomial(e, j));
    gamma.push_back(g);
  }
  for (const auto& r : residual)
    if (!r.is_zero()) throw Error(ErrorCode::InternalError, "gamma elimination left a remainder");
  return gamma;
}

GammaPolynomial gamma_extract(const TablePtr& table, const CharPolynomial& p, int expected_degree) {
  const auto& a = table->group()->elements();
  const auto& b = p.group()->elements();
  if (table->group() != p.group() && !std::equal(a.begin(), a.end(), b.begin(), b.end()))
    throw Error(ErrorCode::InvalidArgument, "character table belongs to another group");
  GammaPolynomial out;
  out.coefficients = decompose_all(table, gamma_class_functions(p, expected_degree));
  out.degree_s = expected_degree;
  out.center = Rational(expected_degree, 2);
  if (!(out.reconstruct() == p)) throw Error(ErrorCode::InternalError, "gamma reconstruction failed");
  return out;
}

IntPolynomial gamma_extract(const IntPolynomial& p, int expected_degree) {
  const int s = expected_degree;
  if (s < 0 || degree(p) != s)
    throw Error(ErrorCode::DegreeMismatch, "polynomial has degree " + std::to_string(degree(p)) +
                                               ", expected " + std::to_string(s));
  if (!is_palindromic(p, s)) throw Error(ErrorCode::NotPalindromic, "polynomial is not palindromic");
  IntPolynomial residual = p;
  IntPolynomial gamma;
  for (int i = 0; i <= s / 2; ++i) {
    const std::int64_t g = residual[i];
    const int e = s - 2 * i;
    for (int j = 0; j <= e; ++j) residual[i + j] -= g * binomial(e, j);
    gamma.push_back(g);
  }
  if (!trimmed(residual).empty()) throw Error(ErrorCode::InternalError, "gamma elimination left a remainder");
  return trimmed(std::move(gamma));
}

std::vector<TableauDatum> standard_tableaux(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "tableaux need at least one box");
  std::vector<TableauDatum> out;
  std::vector<int> shape, row_of(static_cast<std::size_t>(d) + 1, 0);
  auto recurse = [&](auto&& self, int next) -> void {
    if (next > d) {
      TableauDatum t;
      t.shape = shape;
      std::vector<bool> descent(static_cast<std::size_t>(d) + 1, false);
      for (int i = 1; i < d; ++i) descent[i] = row_of[i] < row_of[i + 1];
      for (int i = 1; i < d; ++i) t.descent_count += descent[i];
      for (int i = 1; i + 1 < d; ++i) t.has_double_descent = t.has_double_descent || (descent[i] && descent[i + 1]);
      t.has_final_descent = d >= 2 && descent[d - 1];
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t r = 0; r <= shape.size(); ++r) {
      if (r == shape.size()) {
        shape.push_back(1);
      } else {
        if (r > 0 && shape[r] == shape[r - 1]) continue;
        ++shape[r];
      }
      row_of[next] = static_cast<int>(r);
      self(self, next + 1);
      if (--shape[r] == 0) shape.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

IntPolynomial cube_gamma_values(int d, const Partition& mu) {
  check_cube_degree(d);
  IntPolynomial out(static_cast<std::size_t>((d - 1) / 2) + 1, 0);
  for (const auto& [shape, des] : cube_tableaux(d)) out[des] += symmetric_character(shape, mu);
  return trimmed(std::move(out));
}

GammaPolynomial cube_gamma(int d) {
  check_cube_degree(d);
  static std::map<int, GammaPolynomial> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;

  const GroupPtr group = make_group(symmetric_group(d));
  const TablePtr table = symmetric_group_table(group);
  GammaPolynomial out;
  out.degree_s = d - 1;
  out.center = Rational(d - 1, 2);
  out.coefficients.assign(static_cast<std::size_t>((d - 1) / 2) + 1, VirtualCharacter::zero(table));
  for (const auto& [shape, des] : cube_tableaux(d))
    out.coefficients[des] += VirtualCharacter::irreducible(table, *table->find(partition_label(shape)));

  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("a" + std::to_string(i));
  const CharPolynomial h = equivariant_hstar(antichain(names), group);
  if (!(out.reconstruct() == h))
    throw Error(ErrorCode::InternalError, "tableau gamma disagrees with the cube's equivariant h*");
  return cache.emplace(d, out).first->second;
}

IntPolynomial eulerian_gamma(int d) {
  check_cube_degree(d);
  std::vector<int> w(static_cast<std::size_t>(d));
  std::iota(w.begin(), w.end(), 1);
  IntPolynomial out(static_cast<std::size_t>((d - 1) / 2) + 1, 0);
  do {
    int des = 0;
    bool excluded = d >= 2 && w[d - 2] > w[d - 1];
    for (int i = 0; i + 1 < d; ++i) {
      if (w[i] <= w[i + 1]) continue;
      ++des;
      if (i + 2 < d && w[i + 1] > w[i + 2]) excluded = true;
    }
    if (!excluded) ++out[des];
  } while (std::next_permutation(w.begin(), w.end()));
  return trimmed(std::move(out));
}

int one_graded_degree(const LabeledPoset& lp) {
  if (!lp.all_positive() || !lp.is_graded())
    throw Error(ErrorCode::NotOneGraded, "gamma needs a graded poset with all labels +1");
  return lp.size() - lp.grade_value() - 1;
}

std::vector<OrbitContribution> gamma_contributions(const LabeledPoset& lp, const GroupPtr& group) {
  const int s = one_graded_degree(lp);
  const int r = lp.grade_value();
  const LabeledPoset par(lp.poset(), parity_labeling(lp.poset()));
  const std::size_t len = static_cast<std::size_t>(s / 2) + 1;

  std::vector<OrbitContribution> out;
  for (auto& orbit : saturation_orbits(par, *group)) {
    const auto& blocks = orbit.representative.blocks;
    const int diff = orbit.representative.grade_value_one() - r;
    if (diff < 0 || diff % 2 != 0)
      throw Error(ErrorCode::InternalError, "saturation shift (r_Q - r_P)/2 is not a nonnegative integer");
    OrbitContribution c;
    c.shift = diff / 2;

    std::vector<int> block_of(static_cast<std::size_t>(lp.size()));
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int p : blocks[b]) block_of[p] = static_cast<int>(b);
    const GroupPtr& stab = orbit.stabilizer;
    std::vector<IntPolynomial> values;
    for (std::size_t k = 0; k < stab->class_count(); ++k) {
      std::vector<Partition> types(blocks.size());
      for (const auto& cyc : stab->class_representative(k).cycles())
        types[block_of[cyc.front()]].push_back(static_cast<int>(cyc.size()));
      IntPolynomial v{1};
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::sort(types[b].rbegin(), types[b].rend());
        v = v * cube_gamma_values(static_cast<int>(blocks[b].size()), types[b]);
      }
      values.push_back(shifted(v, c.shift));
    }
    const CharPolynomial induced = induce(stab, group, CharPolynomial::from_class_evaluations(stab, values));
    if (induced.degree() >= static_cast<int>(len))
      throw Error(ErrorCode::InternalError, "orbit contribution exceeds the gamma degree");
    for (std::size_t i = 0; i < len; ++i) c.contribution.push_back(induced.coefficient(i));
    c.orbit = std::move(orbit);
    out.push_back(std::move(c));
  }
  return out;
}

GammaPolynomial gamma_via_saturations(const LabeledPoset& lp, const GroupPtr& group, const TablePtr& table) {
  const int s = one_graded_degree(lp);
  std::vector<ClassFunction> total(static_cast<std::size_t>(s / 2) + 1, ClassFunction::zero(group));
  for (const auto& c : gamma_contributions(lp, group))
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += c.contribution[i];
  GammaPolynomial out;
  out.coefficients = decompose_all(table, total);
  out.degree_s = s;
  out.center = Rational(s, 2);
  return out;
}

GammaReport effectiveness_report(const LabeledPoset& lp, const GroupPtr& group, TablePtr table) {
  const int s = one_graded_degree(lp);
  GammaReport report;
  report.table = table ? std::move(table) : character_table(group);
  report.extracted = gamma_extract(report.table, equivariant_hstar(lp, group), s);

  const auto contributions = gamma_contributions(lp, group);
  std::vector<ClassFunction> total(static_cast<std::size_t>(s / 2) + 1, ClassFunction::zero(group));
  for (const auto& c : contributions) {
    OrbitLedger row;
    row.representative = c.orbit.representative;
    row.orbit_size = c.orbit.members.size();
    row.stabilizer_order = c.orbit.stabilizer->order();
    row.shift = c.shift;
    row.contribution = decompose_all(report.table, c.contribution);
    report.orbits.push_back(std::move(row));
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += c.contribution[i];
  }
  report.via_saturations.coefficients = decompose_all(report.table, total);
  report.via_saturations.degree_s = s;
  report.via_saturations.center = Rational(s, 2);
  report.agree = report.extracted.coefficients == report.via_saturations.coefficients;
  for (const auto& g : report.extracted.coefficients) report.coefficient_effective.push_back(is_effective(g));
  report.effective = std::all_of(report.coefficient_effective.begin(), report.coefficient_effective.end(),
                                 [](bool b) { return b; });
  return report;
}

}  // namespace eqgamma
