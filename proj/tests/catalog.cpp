#include "catalog.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <set>

using namespace eqgamma;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

// Level compositions of n with every part positive.
void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, cur, out);
    cur.pop_back();
  }
}

// Canonical form: least sorted cover list over all level-preserving relabelings.
std::vector<std::pair<int, int>> canonical(const std::vector<int>& levels,
                                           const std::vector<std::pair<int, int>>& covers) {
  const int n = std::accumulate(levels.begin(), levels.end(), 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> starts;
  for (int s = 0, i = 0; i < static_cast<int>(levels.size()); s += levels[i++]) starts.push_back(s);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  // Odometer over the product of per-level permutations.
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == levels.size()) {
      std::vector<std::pair<int, int>> c;
      for (const auto& [a, b] : covers) c.emplace_back(perm[a], perm[b]);
      std::sort(c.begin(), c.end());
      if (first || c < best) {
        best = std::move(c);
        first = false;
      }
      return;
    }
    auto begin = perm.begin() + starts[level];
    auto end = begin + levels[level];
    std::sort(begin, end);
    do {
      self(self, level + 1);
    } while (std::next_permutation(begin, end));
  };
  recurse(recurse, 0);
  return best;
}

bool connected(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : covers) parent[find(a)] = find(b);
  for (int i = 0; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace

std::vector<LabeledPoset> connected_graded_posets(int n) {
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(n, cur, comps);
  std::vector<LabeledPoset> out;
  for (const auto& levels : comps) {
    std::vector<int> starts;
    for (int s = 0, i = 0; i < static_cast<int>(levels.size()); s += levels[i++]) starts.push_back(s);
    std::vector<std::pair<int, int>> slots;
    for (std::size_t l = 0; l + 1 < levels.size(); ++l)
      for (int a = 0; a < levels[l]; ++a)
        for (int b = 0; b < levels[l + 1]; ++b) slots.emplace_back(starts[l] + a, starts[l + 1] + b);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> covers;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) covers.push_back(slots[i]);
      std::vector<int> up(static_cast<std::size_t>(n), 0), down(static_cast<std::size_t>(n), 0);
      for (const auto& [a, b] : covers) {
        ++up[a];
        ++down[b];
      }
      bool ok = true;
      for (std::size_t l = 0; l < levels.size() && ok; ++l)
        for (int a = starts[l]; a < starts[l] + levels[l] && ok; ++a) {
          if (l > 0 && down[a] == 0) ok = false;
          if (l + 1 < levels.size() && up[a] == 0) ok = false;
        }
      if (!ok || !connected(n, covers)) continue;
      auto c = canonical(levels, covers);
      if (!seen.insert(c).second) continue;
      FinitePoset p(names(n), c);
      out.emplace_back(p, constant_labeling(p));
    }
  }
  return out;
}

std::optional<EdgeLabeling> random_consistent_labeling(std::mt19937& rng, const FinitePoset& p) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> rank(static_cast<std::size_t>(p.size()), 0);
  for (int v : p.linear_extension()) {
    const auto& below = p.lower_covers(v);
    if (below.empty()) continue;
    std::vector<int> options;
    for (int cand : {rank[below[0]] - 1, rank[below[0]] + 1}) {
      bool fits = true;
      for (int x : below) fits = fits && std::abs(cand - rank[x]) == 1;
      if (fits) options.push_back(cand);
    }
    if (options.empty()) return std::nullopt;
    rank[v] = options.size() == 1 ? options[0] : options[coin(rng)];
  }
  EdgeLabeling lab;
  for (const auto& [a, b] : p.covers()) lab.signs.push_back(rank[b] - rank[a]);
  return lab;
}

std::vector<FinitePoset> all_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::vector<std::pair<int, int>>> classes;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> lt(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) lt[pairs[k].first][pairs[k].second] = true;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = a + 1; b < n && transitive; ++b)
        for (int c = b + 1; c < n && transitive; ++c)
          if (lt[a][b] && lt[b][c] && !lt[a][c]) transitive = false;
    if (!transitive) continue;
    std::vector<std::pair<int, int>> covers;
    for (const auto& [a, b] : pairs) {
      if (!lt[a][b]) continue;
      bool cover = true;
      for (int c = a + 1; c < b && cover; ++c) cover = !(lt[a][c] && lt[c][b]);
      if (cover) covers.emplace_back(a, b);
    }
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool first = true;
    do {
      std::vector<std::pair<int, int>> c;
      for (const auto& [a, b] : covers) c.emplace_back(perm[a], perm[b]);
      std::sort(c.begin(), c.end());
      if (first || c < best) {
        best = std::move(c);
        first = false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  std::vector<FinitePoset> out;
  for (const auto& c : classes) out.emplace_back(names(n), c);
  return out;
}

LabeledPoset random_eps_graded(std::mt19937& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(2, max_size);
  while (true) {
    const int n = size_dist(rng);
    // Random DAG on 0..n-1 with edges i -> j (i < j), then transitive reduction.
    std::vector<std::vector<bool>> less(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    std::bernoulli_distribution edge(0.45);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) less[i][j] = edge(rng);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (less[i][k] && less[k][j]) less[i][j] = true;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!less[i][j]) continue;
        bool cover = true;
        for (int k = 0; k < n && cover; ++k) cover = !(less[i][k] && less[k][j]);
        if (cover) covers.emplace_back(i, j);
      }
    if (!connected(n, covers)) continue;
    FinitePoset p(names(n), covers);
    auto lab = random_consistent_labeling(rng, p);
    if (!lab) continue;
    LabeledPoset lp(p, *lab);
    if (lp.is_graded()) return lp;
  }
}
