#include "eqgamma/ehrhart.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "eqgamma/error.hpp"
#include "eqgamma/saturation.hpp"

namespace eqgamma {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

std::vector<int> cycle_index(const std::optional<Permutation>& fix, int n, int& count) {
  std::vector<int> owner(static_cast<std::size_t>(n));
  if (!fix) {
    for (int p = 0; p < n; ++p) owner[p] = p;
    count = n;
    return owner;
  }
  const auto cycles = fix->cycles();
  count = static_cast<int>(cycles.size());
  for (int c = 0; c < count; ++c)
    for (int p : cycles[c]) owner[p] = c;
  return owner;
}

void check_fix(const LabeledPoset& lp, const std::optional<Permutation>& fix) {
  if (fix && !is_automorphism(lp, *fix))
    throw Error(ErrorCode::NotAnAutomorphism, "fixing permutation is not a label-preserving automorphism");
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (1 - t) prod_j (1 - t^mu_j), the factor turning a fixed-point count series
// into the evaluation of the equivariant h*.
IntPolynomial det_factor(const Permutation& u) {
  IntPolynomial f{1, -1};
  for (int mu : u.cycle_type()) {
    IntPolynomial g(static_cast<std::size_t>(mu) + 1, 0);
    g[0] = 1;
    g[mu] = -1;
    f = f * g;
  }
  return f;
}

// Multiplies the truncated series `counts` by `factor`, keeping degrees up to
// the window; coefficients past `degree_bound` must vanish.
IntPolynomial truncated_numerator(const std::vector<std::int64_t>& counts, const IntPolynomial& factor,
                                  int degree_bound) {
  const int window = static_cast<int>(counts.size()) - 1;
  IntPolynomial out(static_cast<std::size_t>(window) + 1, 0);
  for (int i = 0; i <= window; ++i)
    for (std::size_t j = 0; j < factor.size() && i + static_cast<int>(j) <= window; ++j)
      out[i + j] += counts[i] * factor[j];
  for (int i = degree_bound + 1; i <= window; ++i)
    if (out[i] != 0)
      throw Error(ErrorCode::TruncationUnstable,
                  "coefficient of t^" + std::to_string(i) + " is nonzero inside the trusted window");
  out.resize(static_cast<std::size_t>(std::min(window, degree_bound)) + 1);
  return trimmed(std::move(out));
}

void check_subgroup_of_aut(const LabeledPoset& lp, const PermGroup& group) {
  if (group.degree() != lp.size())
    throw Error(ErrorCode::NotASubgroupOfAut, "group acts on a different number of points");
  for (const auto& s : group.generators())
    if (!is_automorphism(lp, s))
      throw Error(ErrorCode::NotASubgroupOfAut,
                  s.to_cycle_string(lp.poset().names()) + " is not a label-preserving automorphism");
}

}  // namespace

std::int64_t count_points(const LabeledPoset& lp, int m, const std::optional<Permutation>& fix) {
  if (!lp.is_consistent()) throw Error(ErrorCode::NotConsistent, "order polytope needs an eps-consistent poset");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "dilation factor must be nonnegative");
  check_fix(lp, fix);
  const int n = lp.size();
  int k = 0;
  const auto owner = cycle_index(fix, n, k);

  // Constraint u -> v: f(u) >= f(v), strict when flagged. Covers suffice, as
  // nonascending pairs are chains of cover constraints with a strict step.
  std::map<std::pair<int, int>, bool> edges;
  const auto& covers = lp.poset().covers();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const int u = owner[covers[i].first], v = owner[covers[i].second];
    if (u == v) throw Error(ErrorCode::InternalError, "a cover joins two points of one cycle");
    edges[{u, v}] = edges[{u, v}] || lp.sign_of_cover(i) == -1;
  }
  std::vector<std::vector<std::pair<int, bool>>> preds(static_cast<std::size_t>(k));
  std::vector<int> out_degree(static_cast<std::size_t>(k), 0), in_degree(static_cast<std::size_t>(k), 0);
  for (const auto& [e, strict] : edges) {
    preds[e.second].emplace_back(e.first, strict);
    ++out_degree[e.first];
    ++in_degree[e.second];
  }
  std::vector<int> order;
  {
    std::set<int> ready;
    auto indeg = in_degree;
    for (int v = 0; v < k; ++v)
      if (indeg[v] == 0) ready.insert(v);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(k));
    for (const auto& [e, strict] : edges) succ[e.first].push_back(e.second);
    while (!ready.empty()) {
      const int v = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(v);
      for (int w : succ[v])
        if (--indeg[w] == 0) ready.insert(w);
    }
    if (static_cast<int>(order.size()) != k) throw Error(ErrorCode::InternalError, "constraint graph has a cycle");
  }

  std::vector<int> frontier;
  std::unordered_map<std::vector<int>, std::int64_t, VectorHash> states{{{}, 1}};
  auto remaining = out_degree;
  for (int v : order) {
    std::vector<std::pair<std::size_t, bool>> bounds;
    for (const auto& [u, strict] : preds[v]) {
      auto it = std::find(frontier.begin(), frontier.end(), u);
      bounds.emplace_back(static_cast<std::size_t>(it - frontier.begin()), strict);
    }
    for (const auto& [u, strict] : preds[v]) --remaining[u];
    std::vector<int> next_frontier;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      if (remaining[frontier[i]] > 0) {
        next_frontier.push_back(frontier[i]);
        keep.push_back(i);
      }
    const bool add_v = remaining[v] > 0;
    if (add_v) next_frontier.push_back(v);

    std::unordered_map<std::vector<int>, std::int64_t, VectorHash> next;
    for (const auto& [key, count] : states) {
      int upper = m;
      for (const auto& [pos, strict] : bounds) upper = std::min(upper, key[pos] - (strict ? 1 : 0));
      if (upper < 0) continue;
      std::vector<int> base;
      base.reserve(next_frontier.size());
      for (auto i : keep) base.push_back(key[i]);
      if (!add_v) {
        next[base] += count * (upper + 1);
        continue;
      }
      base.push_back(0);
      for (int value = 0; value <= upper; ++value) {
        base.back() = value;
        next[base] += count;
      }
    }
    states = std::move(next);
    frontier = std::move(next_frontier);
  }
  std::int64_t total = 0;
  for (const auto& [key, count] : states) total += count;
  return total;
}

std::int64_t count_points_bruteforce(const LabeledPoset& lp, int m, const std::optional<Permutation>& fix) {
  if (!lp.is_consistent()) throw Error(ErrorCode::NotConsistent, "order polytope needs an eps-consistent poset");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "dilation factor must be nonnegative");
  check_fix(lp, fix);
  const int n = lp.size();
  double total_maps = 1;
  for (int i = 0; i < n; ++i) total_maps *= m + 1;
  if (total_maps > 1e8) throw Error(ErrorCode::GuardExceeded, "too many maps for brute-force enumeration");

  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> strict;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (lp.poset().less(p, q)) {
        pairs.emplace_back(p, q);
        strict.push_back(lp.nonascending(p, q));
      }
  std::vector<int> inv;
  if (fix) {
    const Permutation g_inv = fix->inverse();
    inv.assign(g_inv.images().begin(), g_inv.images().end());
  }

  std::vector<int> f(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < pairs.size() && ok; ++i) {
      const int a = f[pairs[i].first], b = f[pairs[i].second];
      ok = strict[i] ? a > b : a >= b;
    }
    if (ok && fix)
      for (int p = 0; p < n && ok; ++p) ok = f[inv[p]] == f[p];
    if (ok) ++count;
    int pos = 0;
    while (pos < n && f[pos] == m) f[pos++] = 0;
    if (pos == n) break;
    ++f[pos];
  }
  return count;
}

IntPolynomial hstar(const LabeledPoset& lp) {
  const int n = lp.size();
  std::vector<std::int64_t> counts;
  for (int m = 0; m <= n + 1; ++m) counts.push_back(count_points(lp, m));
  // h*_j = sum_i (-1)^(j-i) C(n+1, j-i) c_i; the extra count c_{n+1} checks
  // that the numerator indeed stops at degree n.
  IntPolynomial h(static_cast<std::size_t>(n) + 2, 0);
  for (int j = 0; j <= n + 1; ++j)
    for (int i = 0; i <= j; ++i) {
      const std::int64_t b = binomial(n + 1, j - i);
      h[j] += ((j - i) % 2 == 0 ? b : -b) * counts[i];
    }
  if (h[n + 1] != 0) throw Error(ErrorCode::InternalError, "h* numerator exceeds degree |P|");
  h.pop_back();
  return trimmed(std::move(h));
}

IntPolynomial hstar_linear_extensions(const LabeledPoset& lp) {
  const auto omega = derive_vertex_labeling(lp);
  const auto& poset = lp.poset();
  const int n = lp.size();
  std::vector<int> indeg(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) indeg[p] = static_cast<int>(poset.lower_covers(p).size());
  IntPolynomial h(static_cast<std::size_t>(n), 0);
  std::int64_t visited = 0;
  auto recurse = [&](auto&& self, int placed, int last, int des) -> void {
    if (placed == n) {
      ++h[des];
      if (++visited > 50'000'000) throw Error(ErrorCode::GuardExceeded, "too many linear extensions");
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (indeg[p] != 0) continue;
      indeg[p] = -1;
      for (int q : poset.upper_covers(p)) --indeg[q];
      self(self, placed + 1, p, des + (last >= 0 && omega[last] > omega[p] ? 1 : 0));
      for (int q : poset.upper_covers(p)) ++indeg[q];
      indeg[p] = 0;
    }
  };
  recurse(recurse, 0, -1, 0);
  return trimmed(std::move(h));
}

CharPolynomial equivariant_hstar(const LabeledPoset& lp, const GroupPtr& group) {
  if (!lp.is_consistent()) throw Error(ErrorCode::NotConsistent, "order polytope needs an eps-consistent poset");
  check_subgroup_of_aut(lp, *group);
  std::vector<IntPolynomial> values;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    const Permutation& u = group->class_representative(c);
    IntPolynomial v = hstar(quotient(lp, cyclic_subgroup(u)));
    for (int mu : u.cycle_type()) v = v * geometric_sum(mu);
    values.push_back(std::move(v));
  }
  return CharPolynomial::from_class_evaluations(group, values);
}

int default_max_dilate(const LabeledPoset& lp, const PermGroup& group) {
  int longest = 1;
  for (std::size_t c = 0; c < group.class_count(); ++c)
    longest = std::max(longest, group.class_representative(c).cycle_type().front());
  return lp.size() + longest + 1;
}

CharPolynomial equivariant_hstar_bruteforce(const LabeledPoset& lp, const GroupPtr& group, int max_dilate) {
  if (!lp.is_consistent()) throw Error(ErrorCode::NotConsistent, "order polytope needs an eps-consistent poset");
  check_subgroup_of_aut(lp, *group);
  if (max_dilate < default_max_dilate(lp, *group))
    throw Error(ErrorCode::InvalidArgument, "max_dilate must be at least |P| + longest cycle + 1");
  std::vector<IntPolynomial> values;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    const Permutation& u = group->class_representative(c);
    std::vector<std::int64_t> counts;
    for (int m = 0; m <= max_dilate; ++m) counts.push_back(count_points(lp, m, u));
    values.push_back(truncated_numerator(counts, det_factor(u), lp.size()));
  }
  return CharPolynomial::from_class_evaluations(group, values);
}

CharPolynomial hstar_via_saturations(const LabeledPoset& lp, const GroupPtr& group) {
  if (!lp.is_parity())
    throw Error(ErrorCode::RankOutOfParityRange, "saturation formula needs ranks in {0, 1}");
  CharPolynomial total = CharPolynomial::zero(group);
  for (const auto& orbit : saturation_orbits(lp, *group)) {
    const LabeledPoset q = saturated_poset(lp, orbit.representative);
    const GroupPtr aut = make_group(saturation_automorphisms(lp.size(), orbit.representative));
    const CharPolynomial hq = equivariant_hstar(q, aut);
    total += induce(orbit.stabilizer, group, restrict(aut, orbit.stabilizer, hq));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Explicit polytopes

namespace {

struct RowQ {
  std::vector<Rational> a;
  Rational b;
};

bool contains(const LatticePolytopeHRep& poly, const std::vector<std::int64_t>& x, int m) {
  for (const auto& ineq : poly.inequalities) {
    std::int64_t s = 0;
    for (int i = 0; i < poly.dimension; ++i) s += ineq.normal[i] * x[i];
    const std::int64_t rhs = ineq.offset * m;
    if (ineq.strict ? s >= rhs : s > rhs) return false;
  }
  return true;
}

std::int64_t floor_q(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_q(const Rational& r) { return -floor_q(-r); }

template <class F>
void for_each_point(const LatticePolytopeHRep& poly, int m, F&& visit) {
  const auto box = bounding_box(poly);
  std::vector<std::int64_t> lo, hi;
  for (const auto& [l, h] : box) {
    lo.push_back(ceil_q(l * Rational(m)));
    hi.push_back(floor_q(h * Rational(m)));
    if (lo.back() > hi.back()) return;
  }
  const int d = poly.dimension;
  std::vector<std::int64_t> x = lo;
  while (true) {
    if (contains(poly, x, m)) visit(x);
    int pos = 0;
    while (pos < d && x[pos] == hi[pos]) {
      x[pos] = lo[pos];
      ++pos;
    }
    if (pos == d) break;
    ++x[pos];
  }
}

void validate(const LatticePolytopeHRep& poly) {
  if (poly.dimension < 1) throw Error(ErrorCode::InvalidArgument, "polytope dimension must be positive");
  for (const auto& ineq : poly.inequalities)
    if (static_cast<int>(ineq.normal.size()) != poly.dimension)
      throw Error(ErrorCode::SizeMismatch, "inequality normal has the wrong length");
}

}  // namespace

std::vector<std::pair<Rational, Rational>> bounding_box(const LatticePolytopeHRep& poly) {
  validate(poly);
  const int d = poly.dimension;
  std::vector<std::pair<Rational, Rational>> box;
  for (int target = 0; target < d; ++target) {
    std::vector<RowQ> rows;
    for (const auto& ineq : poly.inequalities) {
      RowQ r;
      for (auto c : ineq.normal) r.a.emplace_back(c);
      r.b = ineq.offset;
      rows.push_back(std::move(r));
    }
    for (int j = 0; j < d; ++j) {
      if (j == target) continue;
      std::vector<RowQ> pos, neg, next;
      for (auto& r : rows) {
        if (r.a[j].numerator() > 0)
          pos.push_back(r);
        else if (r.a[j].numerator() < 0)
          neg.push_back(r);
        else
          next.push_back(r);
      }
      for (const auto& p : pos)
        for (const auto& q : neg) {
          const Rational sp = -q.a[j], sq = p.a[j];
          RowQ r;
          for (int i = 0; i < d; ++i) r.a.push_back(p.a[i] * sp + q.a[i] * sq);
          r.b = p.b * sp + q.b * sq;
          next.push_back(std::move(r));
        }
      rows = std::move(next);
    }
    std::optional<Rational> lo, hi;
    for (const auto& r : rows) {
      const Rational a = r.a[target];
      if (a.numerator() > 0) {
        const Rational v = r.b / a;
        if (!hi || v < *hi) hi = v;
      } else if (a.numerator() < 0) {
        const Rational v = r.b / a;
        if (!lo || v > *lo) lo = v;
      }
    }
    if (!lo || !hi) throw Error(ErrorCode::Unbounded, "polytope is unbounded in coordinate " + std::to_string(target + 1));
    box.emplace_back(*lo, *hi);
  }
  return box;
}

std::int64_t count_lattice_points(const LatticePolytopeHRep& poly, int m, const std::optional<Permutation>& fix) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "dilation factor must be nonnegative");
  std::int64_t count = 0;
  for_each_point(poly, m, [&](const std::vector<std::int64_t>& x) {
    if (fix)
      for (int i = 0; i < poly.dimension; ++i)
        if (x[(*fix)(i)] != x[i]) return;
    ++count;
  });
  return count;
}

CharPolynomial generic_equivariant_hstar(const LatticePolytopeHRep& poly, const GroupPtr& group,
                                         std::optional<int> max_dilate) {
  validate(poly);
  if (group->degree() != poly.dimension)
    throw Error(ErrorCode::SizeMismatch, "group must permute the coordinates");
  for (int m = 1; m <= 2; ++m) {
    std::set<std::vector<std::int64_t>> points;
    for_each_point(poly, m, [&](const std::vector<std::int64_t>& x) { points.insert(x); });
    for (const auto& g : group->generators())
      for (const auto& x : points) {
        std::vector<std::int64_t> y(x.size());
        for (int i = 0; i < poly.dimension; ++i) y[g(i)] = x[i];
        if (!points.contains(y))
          throw Error(ErrorCode::GroupDoesNotPreserve, g.to_cycle_string() + " does not preserve the polytope");
      }
  }
  const int window = max_dilate.value_or(poly.dimension + 8);
  if (window < poly.dimension + 1) throw Error(ErrorCode::InvalidArgument, "max_dilate is below the dimension");
  std::vector<IntPolynomial> values;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    const Permutation& u = group->class_representative(c);
    std::vector<std::int64_t> counts;
    for (int m = 0; m <= window; ++m) counts.push_back(count_lattice_points(poly, m, u));
    values.push_back(truncated_numerator(counts, det_factor(u), poly.dimension));
  }
  return CharPolynomial::from_class_evaluations(group, values);
}

}  // namespace eqgamma
