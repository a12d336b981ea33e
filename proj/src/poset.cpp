#include "eqgamma/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

#include "eqgamma/error.hpp"

namespace eqgamma {

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<std::pair<int, int>> covers)
    : names_(std::move(names)), covers_(std::move(covers)) {
  const int n = size();
  if (n == 0) throw Error(ErrorCode::EmptyPoset, "poset has no elements");
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : names_)
      if (!seen.insert(name).second) throw Error(ErrorCode::DuplicateElement, "duplicate element " + name);
  }
  for (const auto& [a, b] : covers_) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorCode::UnknownElement, "cover refers to an element out of range");
    if (a == b) throw Error(ErrorCode::InvalidCovers, "self-loop at " + names_[a]);
  }
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
    throw Error(ErrorCode::InvalidCovers, "repeated cover pair");

  up_.assign(static_cast<std::size_t>(n), {});
  down_.assign(static_cast<std::size_t>(n), {});
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : covers_) {
    up_[a].push_back(b);
    down_[b].push_back(a);
    ++indeg[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int p = 0; p < n; ++p)
    if (indeg[p] == 0) ready.push(p);
  while (!ready.empty()) {
    const int p = ready.top();
    ready.pop();
    topo_.push_back(p);
    for (int q : up_[p])
      if (--indeg[q] == 0) ready.push(q);
  }
  if (static_cast<int>(topo_.size()) != n) throw Error(ErrorCode::InvalidCovers, "covers contain a cycle");

  less_.assign(static_cast<std::size_t>(n * n), false);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const int p = *it;
    for (int q : up_[p]) {
      less_[static_cast<std::size_t>(p * n + q)] = true;
      for (int r = 0; r < n; ++r)
        if (less_[static_cast<std::size_t>(q * n + r)]) less_[static_cast<std::size_t>(p * n + r)] = true;
    }
  }
  for (const auto& [a, b] : covers_)
    for (int c = 0; c < n; ++c)
      if (less(a, c) && less(c, b))
        throw Error(ErrorCode::InvalidCovers,
                    names_[a] + " < " + names_[b] + " is not a cover (" + names_[c] + " lies between)");
}

std::optional<int> FinitePoset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::optional<std::size_t> FinitePoset::cover_index(int a, int b) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::make_pair(a, b));
  if (it == covers_.end() || *it != std::make_pair(a, b)) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int p = 0; p < size(); ++p)
    if (down_[p].empty()) out.push_back(p);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int p = 0; p < size(); ++p)
    if (up_[p].empty()) out.push_back(p);
  return out;
}

bool FinitePoset::is_connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(size()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    for (const auto* nbrs : {&up_[p], &down_[p]})
      for (int q : *nbrs)
        if (!seen[q]) {
          seen[q] = true;
          ++count;
          stack.push_back(q);
        }
  }
  return count == size();
}

EdgeLabeling constant_labeling(const FinitePoset& poset, int sign) {
  return EdgeLabeling{std::vector<int>(poset.covers().size(), sign)};
}

// ---------------------------------------------------------------------------
// LabeledPoset

LabeledPoset::LabeledPoset(FinitePoset poset, EdgeLabeling labeling)
    : poset_(std::move(poset)), labeling_(std::move(labeling)) {
  const int n = poset_.size();
  const auto& covers = poset_.covers();
  if (labeling_.signs.size() != covers.size())
    throw Error(ErrorCode::InvalidLabeling, "labeling must assign a sign to every cover");
  for (int s : labeling_.signs) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidLabeling, "labels must be +1 or -1");
    if (s == -1) all_positive_ = false;
  }

  // Set of eps-sums of maximal chains of each principal ideal.
  std::vector<std::set<int>> sums(static_cast<std::size_t>(n));
  bool consistent = true;
  for (int p : poset_.linear_extension()) {
    if (poset_.lower_covers(p).empty()) sums[p].insert(0);
    for (int x : poset_.lower_covers(p)) {
      const int s = sign(x, p);
      for (int v : sums[x]) sums[p].insert(v + s);
    }
    if (sums[p].size() != 1) consistent = false;
  }
  if (consistent) {
    rank_.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) rank_[p] = *sums[p].begin();
    consistency_ = Consistency::Consistent;
    std::set<int> top;
    for (int p : poset_.maximal_elements()) top.insert(rank_[p]);
    if (top.size() == 1) {
      consistency_ = Consistency::Graded;
      grade_ = *top.begin();
    }
    parity_ = std::all_of(rank_.begin(), rank_.end(), [](int r) { return r == 0 || r == 1; });
  }

  nonascending_.assign(static_cast<std::size_t>(n * n), false);
  const auto& topo = poset_.linear_extension();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int p = *it;
    for (int x : poset_.upper_covers(p)) {
      const bool negative = sign(p, x) == -1;
      for (int q = 0; q < n; ++q) {
        if (!poset_.leq(x, q)) continue;
        if (negative || (x != q && nonascending(x, q)))
          nonascending_[static_cast<std::size_t>(p * n + q)] = true;
      }
    }
  }
}

int LabeledPoset::sign(int a, int b) const {
  auto i = poset_.cover_index(a, b);
  if (!i) throw Error(ErrorCode::InvalidArgument, "not a cover: " + poset_.name(a) + " < " + poset_.name(b));
  return labeling_.signs[*i];
}

int LabeledPoset::rank(int p) const { return ranks()[static_cast<std::size_t>(p)]; }

const std::vector<int>& LabeledPoset::ranks() const {
  if (!is_consistent()) throw Error(ErrorCode::NotConsistent, "labeled poset has no rank function");
  return rank_;
}

int LabeledPoset::grade_value() const {
  if (!grade_) throw Error(ErrorCode::NotConsistent, "labeled poset is not graded");
  return *grade_;
}

LabeledPoset analyze(const FinitePoset& poset, const EdgeLabeling& labeling) {
  return LabeledPoset(poset, labeling);
}

LabeledPoset labeled_poset(std::vector<std::string> names, const std::vector<SignedCover>& covers) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : covers) pairs.emplace_back(c.lower, c.upper);
  FinitePoset poset(std::move(names), pairs);
  EdgeLabeling labeling{std::vector<int>(poset.covers().size(), 1)};
  for (const auto& c : covers) labeling.signs[*poset.cover_index(c.lower, c.upper)] = c.sign;
  return LabeledPoset(std::move(poset), std::move(labeling));
}

EdgeLabeling parity_labeling(const FinitePoset& poset) {
  // Parities of chain lengths from a minimal element, as a bitmask {even, odd}.
  std::vector<int> parity(static_cast<std::size_t>(poset.size()), 0);
  for (int p : poset.linear_extension()) {
    if (poset.lower_covers(p).empty()) parity[p] = 1;
    for (int x : poset.lower_covers(p)) parity[p] |= ((parity[x] & 1) << 1) | ((parity[x] & 2) >> 1);
    if (parity[p] == 3)
      throw Error(ErrorCode::NotParityConsistent,
                  "maximal chains below " + poset.name(p) + " disagree in length parity");
  }
  EdgeLabeling labeling;
  for (const auto& [a, b] : poset.covers()) labeling.signs.push_back(parity[a] == 1 ? 1 : -1);
  return labeling;
}

std::vector<int> derive_vertex_labeling(const LabeledPoset& lp) {
  const auto& rank = lp.ranks();
  std::vector<int> order(static_cast<std::size_t>(lp.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
  std::vector<int> omega(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) omega[order[i]] = static_cast<int>(i) + 1;
  return omega;
}

LabeledPoset ordinal_sum(const LabeledPoset& lhs, const LabeledPoset& rhs, int joining_sign) {
  if (joining_sign != 1 && joining_sign != -1)
    throw Error(ErrorCode::InvalidLabeling, "joining sign must be +1 or -1");
  std::vector<std::string> names = lhs.poset().names();
  {
    std::unordered_set<std::string> left(names.begin(), names.end());
    for (const auto& name : rhs.poset().names())
      if (left.contains(name)) throw Error(ErrorCode::IdentifierClash, "element " + name + " occurs in both summands");
  }
  const int shift = lhs.size();
  names.insert(names.end(), rhs.poset().names().begin(), rhs.poset().names().end());
  std::vector<SignedCover> covers;
  for (std::size_t i = 0; i < lhs.poset().covers().size(); ++i) {
    const auto& [a, b] = lhs.poset().covers()[i];
    covers.push_back({a, b, lhs.sign_of_cover(i)});
  }
  for (std::size_t i = 0; i < rhs.poset().covers().size(); ++i) {
    const auto& [a, b] = rhs.poset().covers()[i];
    covers.push_back({a + shift, b + shift, rhs.sign_of_cover(i)});
  }
  for (int a : lhs.poset().maximal_elements())
    for (int b : rhs.poset().minimal_elements()) covers.push_back({a, b + shift, joining_sign});
  return labeled_poset(std::move(names), covers);
}

LabeledPoset antichain(const std::vector<std::string>& names) { return labeled_poset(names, {}); }

LabeledPoset chain(const std::vector<std::string>& names, int sign) {
  std::vector<SignedCover> covers;
  for (int i = 0; i + 1 < static_cast<int>(names.size()); ++i) covers.push_back({i, i + 1, sign});
  return labeled_poset(names, covers);
}

// ---------------------------------------------------------------------------
// Automorphisms

bool is_automorphism(const LabeledPoset& lp, const Permutation& g) {
  if (g.degree() != lp.size()) return false;
  const auto& poset = lp.poset();
  for (std::size_t i = 0; i < poset.covers().size(); ++i) {
    const auto& [a, b] = poset.covers()[i];
    auto j = poset.cover_index(g(a), g(b));
    if (!j || lp.sign_of_cover(*j) != lp.sign_of_cover(i)) return false;
  }
  // g maps covers injectively into covers of a finite set, hence onto them.
  return true;
}

PermGroup automorphism_group(const LabeledPoset& lp) {
  const auto& poset = lp.poset();
  const int n = lp.size();
  struct Signature {
    int rank, in, out;
    bool operator==(const Signature&) const = default;
  };
  std::vector<Signature> sig;
  for (int p = 0; p < n; ++p)
    sig.push_back({lp.is_consistent() ? lp.rank(p) : 0, static_cast<int>(poset.lower_covers(p).size()),
                   static_cast<int>(poset.upper_covers(p).size())});

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Permutation> found;

  auto compatible = [&](int p, int q) {
    if (!(sig[p] == sig[q])) return false;
    for (int x = 0; x < p; ++x) {
      const int y = image[x];
      if (poset.less(x, p) != poset.less(y, q) || poset.less(p, x) != poset.less(q, y)) return false;
      if (poset.is_cover(x, p) != poset.is_cover(y, q) || poset.is_cover(p, x) != poset.is_cover(q, y)) return false;
      if (poset.is_cover(x, p) && lp.sign(x, p) != lp.sign(y, q)) return false;
      if (poset.is_cover(p, x) && lp.sign(p, x) != lp.sign(q, y)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int p) -> void {
    if (p == n) {
      if (found.size() >= kMaxGroupOrder)
        throw Error(ErrorCode::GroupTooLarge, "automorphism group exceeds the order guard");
      found.emplace_back(image);
      return;
    }
    for (int q = 0; q < n; ++q) {
      if (used[q] || !compatible(p, q)) continue;
      used[q] = true;
      image[p] = q;
      self(self, p + 1);
      used[q] = false;
      image[p] = -1;
    }
  };
  search(search, 0);
  return PermGroup::from_elements(n, std::move(found));
}

std::vector<std::vector<int>> orbits(const PermGroup& group) {
  const int n = group.degree();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int p = 0; p < n; ++p) {
    if (owner[p] != -1) continue;
    std::vector<int> orbit{p};
    owner[p] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : group.generators()) {
        const int q = s(orbit[k]);
        if (owner[q] == -1) {
          owner[q] = owner[p];
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

LabeledPoset quotient(const LabeledPoset& lp, const PermGroup& group) {
  if (!lp.is_consistent()) throw Error(ErrorCode::NotConsistent, "quotient needs an eps-consistent poset");
  if (group.degree() != lp.size())
    throw Error(ErrorCode::NotASubgroupOfAut, "group acts on a different number of points");
  for (const auto& s : group.generators())
    if (!is_automorphism(lp, s))
      throw Error(ErrorCode::NotASubgroupOfAut, s.to_cycle_string(lp.poset().names()) +
                                                    " is not a label-preserving automorphism");
  const auto& poset = lp.poset();
  const auto orbit_list = orbits(group);
  const int k = static_cast<int>(orbit_list.size());
  std::vector<int> orbit_of(static_cast<std::size_t>(lp.size()));
  for (int o = 0; o < k; ++o)
    for (int p : orbit_list[o]) orbit_of[p] = o;

  // rel[o][o2]: some p in o and p2 in o2 with p < p2.
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
  for (int p = 0; p < lp.size(); ++p)
    for (int q = 0; q < lp.size(); ++q)
      if (poset.less(p, q)) rel[orbit_of[p]][orbit_of[q]] = true;
  for (int o = 0; o < k; ++o)
    for (int o2 = 0; o2 < k; ++o2)
      if (rel[o][o2] && (o == o2 || rel[o2][o]))
        throw Error(ErrorCode::QuotientNotPartialOrder, "orbit relation is not antisymmetric");

  std::vector<std::string> names;
  for (const auto& orbit : orbit_list) {
    std::string name;
    for (int p : orbit) name += (name.empty() ? "" : "|") + poset.name(p);
    names.push_back(std::move(name));
  }
  std::vector<SignedCover> covers;
  for (int o = 0; o < k; ++o)
    for (int o2 = 0; o2 < k; ++o2) {
      if (!rel[o][o2]) continue;
      bool between = false;
      for (int m = 0; m < k && !between; ++m) between = rel[o][m] && rel[m][o2];
      if (between) continue;
      std::optional<int> sign;
      for (int p : orbit_list[o])
        for (int q : poset.upper_covers(p)) {
          if (orbit_of[q] != o2) continue;
          const int s = lp.sign(p, q);
          if (sign && *sign != s)
            throw Error(ErrorCode::InternalError, "induced label on " + names[o] + " < " + names[o2] + " is ambiguous");
          sign = s;
        }
      if (!sign)
        throw Error(ErrorCode::InternalError,
                    "quotient cover " + names[o] + " < " + names[o2] + " lifts to no cover");
      covers.push_back({o, o2, *sign});
    }
  LabeledPoset result = labeled_poset(std::move(names), covers);
  if (!result.is_consistent())
    throw Error(ErrorCode::InternalError, "quotient poset is not consistent");
  for (int p = 0; p < lp.size(); ++p)
    if (result.rank(orbit_of[p]) != lp.rank(p))
      throw Error(ErrorCode::InternalError, "quotient rank differs from representative rank");
  return result;
}

}  // namespace eqgamma
