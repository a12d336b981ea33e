#include "eqgamma/symmetric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eqgamma/error.hpp"

namespace eqgamma {

namespace {

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Beta-set (first-column hook lengths) of lambda, as an occupancy bitmap.
using Beads = std::vector<bool>;

std::int64_t mn_rec(const Beads& beads, const Partition& mu, std::size_t next,
                    std::map<std::pair<Beads, std::size_t>, std::int64_t>& memo) {
  if (next == mu.size()) return 1;
  auto key = std::make_pair(beads, next);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int len = mu[next];
  std::int64_t total = 0;
  for (std::size_t b = static_cast<std::size_t>(len); b < beads.size(); ++b) {
    if (!beads[b] || beads[b - len]) continue;
    // Removing a rim hook of length len moves a bead from b to b - len; the
    // leg length is the number of beads jumped over.
    int between = 0;
    for (std::size_t x = b - len + 1; x < b; ++x) between += beads[x] ? 1 : 0;
    Beads moved = beads;
    moved[b] = false;
    moved[b - len] = true;
    const std::int64_t sub = mn_rec(moved, mu, next + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

int sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

void check_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1])
      throw Error(ErrorCode::InvalidArgument, "partition parts must be nonincreasing");
  }
}

}  // namespace

std::vector<Partition> partitions(int d) {
  std::vector<Partition> out;
  Partition current;
  if (d == 0) return {Partition{}};
  partitions_rec(d, d, current, out);
  return out;
}

std::string partition_label(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

std::int64_t symmetric_character(const Partition& lambda, const Partition& mu) {
  check_partition(lambda);
  Partition m = mu;
  std::sort(m.begin(), m.end(), std::greater<>());
  check_partition(m);
  if (sum(lambda) != sum(m))
    throw Error(ErrorCode::SizeMismatch, "partitions " + partition_label(lambda) + " and " +
                                             partition_label(m) + " have different sizes");
  const std::size_t rows = lambda.size();
  Beads beads(rows == 0 ? 1 : static_cast<std::size_t>(lambda.front()) + rows, false);
  for (std::size_t i = 0; i < rows; ++i) beads[static_cast<std::size_t>(lambda[i]) + rows - 1 - i] = true;
  std::map<std::pair<Beads, std::size_t>, std::int64_t> memo;
  return mn_rec(beads, m, 0, memo);
}

TablePtr symmetric_group_table(const GroupPtr& group) {
  const int d = group->degree();
  std::uint64_t factorial = 1;
  for (int i = 2; i <= d; ++i) factorial *= static_cast<std::uint64_t>(i);
  if (group->order() != factorial)
    throw Error(ErrorCode::InvalidArgument, "group is not the full symmetric group on its points");
  std::vector<ClassFunction> irreducibles;
  std::vector<std::string> names;
  for (const auto& lambda : partitions(d)) {
    irreducibles.push_back(ClassFunction::from_function(group, [&](const Permutation& g) {
      return Cyclotomic(symmetric_character(lambda, g.cycle_type()));
    }));
    names.push_back(partition_label(lambda));
  }
  return std::make_shared<const CharacterTable>(group, std::move(irreducibles), std::move(names));
}

}  // namespace eqgamma
