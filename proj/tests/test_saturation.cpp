#include <doctest.h>

#include <algorithm>
#include <set>

#include "eqgamma/demo.hpp"
#include "eqgamma/saturation.hpp"
#include "support.hpp"

using namespace eqgamma;

namespace {

// Saturations of a parity-form poset as level maps: levels 0..k all used,
// level parity equals rank, and p < q forces level(p) < level(q).
std::set<std::vector<std::vector<int>>> brute_saturations(const LabeledPoset& lp) {
  const int n = lp.size();
  std::set<std::vector<std::vector<int>>> out;
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) ok = level[p] % 2 == lp.rank(p);
    for (int p = 0; p < n && ok; ++p)
      for (int q = 0; q < n && ok; ++q)
        if (lp.poset().less(p, q)) ok = level[p] < level[q];
    const int top = *std::max_element(level.begin(), level.end());
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p < n; ++p) blocks[level[p]].push_back(p);
    for (const auto& b : blocks) ok = ok && !b.empty();
    if (ok) out.insert(blocks);
    int pos = 0;
    while (pos < n && level[pos] == n - 1) level[pos++] = 0;
    if (pos == n) break;
    ++level[pos];
  }
  return out;
}

std::vector<int> to_indices(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int p : one_based) out.push_back(p - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("saturations of the example poset") {
  auto lp = d4_example_poset();
  auto sats = enumerate_saturations(lp);
  CHECK(sats.size() == 25);
  std::set<std::vector<std::vector<int>>> ours;
  for (const auto& s : sats) {
    ours.insert(s.blocks);
    CHECK(is_saturation(lp, s));
    for (std::size_t i = 0; i < s.block_signs.size(); ++i) CHECK(s.block_signs[i] == (i % 2 == 0 ? 1 : -1));
  }
  CHECK(ours == brute_saturations(lp));
}

TEST_CASE("saturation clauses reject non-saturations") {
  auto lp = d4_example_poset();
  // Reversed order between p1 and p5.
  Saturation bad{{to_indices({2, 3, 4, 5}), to_indices({6, 7, 8}), to_indices({1})}, {1, -1}};
  CHECK_FALSE(is_saturation(lp, bad));
  // Wrong rank: rank-1 element in the bottom block.
  Saturation bad_rank{{to_indices({1, 2, 3, 4, 5}), to_indices({6, 7, 8})}, {1}};
  CHECK_FALSE(is_saturation(lp, bad_rank));
  // Wrong block sign.
  Saturation bad_sign{{to_indices({1, 2, 3, 4}), to_indices({5, 6, 7, 8})}, {-1}};
  CHECK_FALSE(is_saturation(lp, bad_sign));
  Saturation good{{to_indices({1, 2, 3, 4}), to_indices({5, 6, 7, 8})}, {1}};
  CHECK(is_saturation(lp, good));
  auto sp = saturated_poset(lp, good);
  CHECK(sp.poset().covers().size() == 16);
  CHECK(sp.grade_value() == 1);
}

TEST_CASE("saturation orbits under D4") {
  auto lp = d4_example_poset();
  auto g = d4_group();
  auto orbits = saturation_orbits(lp, *g);
  REQUIRE(orbits.size() == 5);
  const std::vector<std::size_t> sizes{1, 8, 4, 4, 8}, stabs{8, 1, 2, 2, 1};
  const std::vector<std::size_t> blocks{2, 4, 4, 4, 6};
  std::size_t total = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(orbits[i].members.size() == sizes[i]);
    CHECK(orbits[i].stabilizer->order() == stabs[i]);
    CHECK(orbits[i].representative.blocks.size() == blocks[i]);
    total += orbits[i].members.size();
    // Independent check: members are exactly the images of the representative.
    std::set<Saturation> images;
    for (const auto& x : g->elements()) images.insert(act(x, orbits[i].representative));
    CHECK(std::set<Saturation>(orbits[i].members.begin(), orbits[i].members.end()) == images);
    for (const auto& x : orbits[i].stabilizer->elements())
      CHECK(act(x, orbits[i].representative) == orbits[i].representative);
  }
  CHECK(total == 25);

  // The orbit of Q2: bottom triple, one rank-1 element, one rank-0 element, top triple.
  const std::vector<std::vector<int>> q2 = {
      {2, 3, 4, 7, 1, 5, 6, 8}, {2, 3, 4, 8, 1, 5, 6, 7}, {1, 3, 4, 5, 2, 6, 7, 8}, {1, 3, 4, 8, 2, 5, 6, 7},
      {1, 2, 4, 5, 3, 6, 7, 8}, {1, 2, 4, 6, 3, 5, 7, 8}, {1, 2, 3, 6, 4, 5, 7, 8}, {1, 2, 3, 7, 4, 5, 6, 8},
  };
  std::set<Saturation> expected;
  for (const auto& r : q2)
    expected.insert(Saturation{{to_indices({r[0], r[1], r[2]}), to_indices({r[3]}), to_indices({r[4]}),
                                to_indices({r[5], r[6], r[7]})},
                               {1, -1, 1}});
  CHECK(std::set<Saturation>(orbits[1].members.begin(), orbits[1].members.end()) == expected);
}

TEST_CASE("orbit-stabilizer over all subgroups of Aut") {
  auto lp = d4_example_poset();
  for (const auto& h : all_subgroups(*d4_group())) {
    auto orbits = saturation_orbits(lp, h);
    std::size_t total = 0;
    for (const auto& o : orbits) {
      CHECK(o.members.size() * o.stabilizer->order() == h.order());
      total += o.members.size();
    }
    CHECK(total == 25);
  }
}

TEST_CASE("saturation guards") {
  auto c = chain({"a", "b", "c"}, 1);
  CHECK(error_of([&] { enumerate_saturations(c); }) == ErrorCode::RankOutOfParityRange);
  auto lp = d4_example_poset();
  auto bad = PermGroup::generate(8, {Permutation({1, 0, 2, 3, 4, 5, 6, 7})});
  CHECK(error_of([&] { saturation_orbits(lp, bad); }) == ErrorCode::NotASubgroupOfAut);
  auto single = enumerate_saturations(antichain({"a", "b"}));
  CHECK(single.size() == 1);
  CHECK(single[0].block_signs.empty());
}
