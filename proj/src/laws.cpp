#include "eqgamma/laws.hpp"

#include <functional>

#include "eqgamma/ehrhart.hpp"
#include "eqgamma/error.hpp"
#include "eqgamma/gamma.hpp"
#include "eqgamma/saturation.hpp"

namespace eqgamma {

namespace {

LawResult run(const std::string& name, const std::function<void(LawResult&)>& body) {
  LawResult r;
  r.name = name;
  try {
    body(r);
  } catch (const Error& e) {
    r.holds = false;
    r.detail = e.what();
  }
  return r;
}

void not_applicable(LawResult& r, const std::string& why) {
  r.applicable = false;
  r.holds = true;
  r.detail = why;
}

LabeledPoset with_parity_labeling(const LabeledPoset& lp) {
  return LabeledPoset(lp.poset(), parity_labeling(lp.poset()));
}

bool one_graded(const LabeledPoset& lp) { return lp.all_positive() && lp.is_graded(); }

Permutation embed(const Permutation& g, int offset, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (int i = 0; i < g.degree(); ++i) images[offset + i] = offset + g(i);
  return Permutation(std::move(images));
}

}  // namespace

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const int n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(embed(g, 0, n));
  for (const auto& g : b.generators()) gens.push_back(embed(g, a.degree(), n));
  return PermGroup::generate(n, std::move(gens));
}

LawResult law_evaluation(const LabeledPoset& lp, const GroupPtr& group, const LawOptions& options) {
  return run("evaluation", [&](LawResult& r) {
    const CharPolynomial symbolic = equivariant_hstar(lp, group);
    const int window = options.max_dilate.value_or(default_max_dilate(lp, *group));
    const CharPolynomial series = equivariant_hstar_bruteforce(lp, group, window);
    const IntPolynomial at_e = symbolic.at(Permutation::identity(lp.size()));
    const IntPolynomial h = hstar(lp);
    const bool extensions = h == hstar_linear_extensions(lp);
    r.holds = symbolic == series && at_e == h && extensions;
    r.detail = "h* = " + to_string(h) + (symbolic == series ? "" : "; quotient and series formulas differ") +
               (at_e == h ? "" : "; value at e differs from h*") +
               (extensions ? "" : "; linear extension count differs");
  });
}

LawResult law_main_theorem(const LabeledPoset& lp, const GroupPtr& group) {
  return run("main-theorem", [&](LawResult& r) {
    const LabeledPoset par = with_parity_labeling(lp);
    r.holds = hstar_via_saturations(par, group) == equivariant_hstar(par, group);
    r.detail = std::to_string(enumerate_saturations(par).size()) + " saturations";
  });
}

LawResult law_parity_shift(const LabeledPoset& lp, const GroupPtr& group) {
  return run("parity-shift", [&](LawResult& r) {
    if (!lp.is_graded()) return not_applicable(r, "input is not graded");
    const LabeledPoset par = with_parity_labeling(lp);
    const int diff = par.grade_value() - lp.grade_value();
    if (diff % 2 != 0) {
      r.holds = false;
      r.detail = "grade values differ by an odd amount";
      return;
    }
    const CharPolynomial h = equivariant_hstar(lp, group);
    const CharPolynomial hp = equivariant_hstar(par, group);
    const int e = diff / 2;
    r.holds = e >= 0 ? h == hp.shifted(e) : h.shifted(-e) == hp;
    r.detail = "exponent " + std::to_string(e);
  });
}

LawResult law_ordinal_sum(const LabeledPoset& lp, const GroupPtr& group) {
  return run("ordinal-sum", [&](LawResult& r) {
    std::vector<std::string> extra;
    for (int i = 0; extra.size() < 2; ++i) {
      std::string name = "#" + std::to_string(i);
      if (!lp.poset().index_of(name)) extra.push_back(name);
    }
    const LabeledPoset q = antichain(extra);
    const GroupPtr s2 = make_group(symmetric_group(2));
    const LabeledPoset sum = ordinal_sum(lp, q, 1);
    const GroupPtr prod = make_group(direct_product(*group, *s2));
    const CharPolynomial h = equivariant_hstar(sum, prod);
    const CharPolynomial hp = equivariant_hstar(lp, group);
    const CharPolynomial hq = equivariant_hstar(q, s2);
    const int n = lp.size();
    bool ok = true;
    for (std::size_t c = 0; c < prod->class_count() && ok; ++c) {
      const Permutation& x = prod->class_representative(c);
      std::vector<int> left(static_cast<std::size_t>(n)), right(2);
      for (int i = 0; i < n; ++i) left[i] = x(i);
      for (int i = 0; i < 2; ++i) right[i] = x(n + i) - n;
      ok = h.at_class(c) == hp.at(Permutation(left)) * hq.at(Permutation(right));
    }
    r.holds = ok;
    r.detail = "P (+)_1 A_2 under G x S_2, " + std::to_string(prod->class_count()) + " classes";
  });
}

LawResult law_palindromic(const LabeledPoset& lp, const GroupPtr& group) {
  return run("palindromic", [&](LawResult& r) {
    if (!one_graded(lp)) return not_applicable(r, "input is not 1-graded");
    const int s = one_graded_degree(lp);
    const CharPolynomial h = equivariant_hstar(lp, group);
    const TablePtr table = character_table(group);
    bool ok = h.degree() == s;
    for (int i = 0; i <= s && ok; ++i) ok = h.coefficient(i) == h.coefficient(s - i);
    const auto coeffs = decompose(table, h);
    const bool effective = is_effective(coeffs);
    r.holds = ok && effective && is_palindromic(hstar(lp), s);
    r.detail = "degree " + std::to_string(h.degree()) + ", s = " + std::to_string(s) +
               (effective ? "" : ", some coefficient is not effective");
  });
}

LawResult law_saturation_bijection(const LabeledPoset& lp, const GroupPtr& group) {
  return run("saturation-bijection", [&](LawResult& r) {
    const LabeledPoset par = with_parity_labeling(lp);
    const auto sats = enumerate_saturations(par);
    std::size_t fixed = 0;
    for (const auto& s : sats) {
      bool all = true;
      for (const auto& g : group->generators()) all = all && act(g, s) == s;
      fixed += all;
    }
    const std::size_t quotient_count = enumerate_saturations(quotient(par, *group)).size();
    r.holds = fixed == quotient_count;
    r.detail = std::to_string(quotient_count) + " saturations of P/G, " + std::to_string(fixed) + " fixed by G";
  });
}

LawResult law_gamma(const LabeledPoset& lp, const GroupPtr& group) {
  return run("gamma", [&](LawResult& r) {
    if (!one_graded(lp)) return not_applicable(r, "input is not 1-graded");
    const GammaReport report = effectiveness_report(lp, group);
    r.holds = report.agree && report.effective && report.via_saturations.is_effective();
    r.detail = report.extracted.to_string();
  });
}

LawResult law_oracle_counts(const LabeledPoset& lp, const GroupPtr& group, int max_dilate) {
  return run("oracle-counts", [&](LawResult& r) {
    bool ok = true;
    for (int m = 0; m <= max_dilate && ok; ++m)
      for (std::size_t i = 0; i < group->order() && ok; ++i)
        ok = count_points(lp, m, group->element(i)) == count_points_bruteforce(lp, m, group->element(i));
    r.holds = ok;
    r.detail = "m = 0.." + std::to_string(max_dilate) + ", all " + std::to_string(group->order()) + " elements";
  });
}

std::vector<LawResult> verify_laws(const LabeledPoset& lp, const GroupPtr& group, const LawOptions& options) {
  if (!lp.is_consistent()) throw Error(ErrorCode::NotConsistent, "laws need an eps-consistent poset");
  std::vector<LawResult> out{
      law_evaluation(lp, group, options), law_main_theorem(lp, group),   law_parity_shift(lp, group),
      law_ordinal_sum(lp, group),         law_palindromic(lp, group),    law_saturation_bijection(lp, group),
      law_gamma(lp, group),
  };
  if (options.oracle) out.push_back(law_oracle_counts(lp, group, options.oracle_max_dilate));
  return out;
}

}  // namespace eqgamma
