#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "eqgamma/demo.hpp"
#include "eqgamma/poset.hpp"
#include "support.hpp"

using namespace eqgamma;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// Order ideal count by brute force over all maps: p -> q, p < q.
bool brute_less(const FinitePoset& p, int a, int b) {
  std::vector<int> stack{a};
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : p.upper_covers(x))
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return seen[b];
}

}  // namespace

TEST_CASE("poset construction rejects malformed input") {
  CHECK(error_of([] { FinitePoset({}, {}); }) == ErrorCode::EmptyPoset);
  CHECK(error_of([] { FinitePoset({"a", "a"}, {}); }) == ErrorCode::DuplicateElement);
  CHECK(error_of([] { FinitePoset(names(2), {{0, 2}}); }) == ErrorCode::UnknownElement);
  CHECK(error_of([] { FinitePoset(names(2), {{0, 0}}); }) == ErrorCode::InvalidCovers);
  CHECK(error_of([] { FinitePoset(names(2), {{0, 1}, {0, 1}}); }) == ErrorCode::InvalidCovers);
  CHECK(error_of([] { FinitePoset(names(3), {{0, 1}, {1, 2}, {2, 0}}); }) == ErrorCode::InvalidCovers);
  CHECK(error_of([] { FinitePoset(names(3), {{0, 1}, {1, 2}, {0, 2}}); }) == ErrorCode::InvalidCovers);
  FinitePoset ok(names(2), {{0, 1}});
  CHECK(error_of([&] { LabeledPoset(ok, EdgeLabeling{{}}); }) == ErrorCode::InvalidLabeling);
  CHECK(error_of([&] { LabeledPoset(ok, EdgeLabeling{{2}}); }) == ErrorCode::InvalidLabeling);
}

TEST_CASE("order relation matches reachability") {
  FinitePoset p(names(6), {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(p.less(a, b) == brute_less(p, a, b));
  CHECK(p.minimal_elements() == std::vector<int>{0, 1});
  CHECK(p.maximal_elements() == std::vector<int>{3, 5});
  CHECK(p.is_connected());
  CHECK_FALSE(FinitePoset(names(3), {{0, 1}}).is_connected());
  const auto& ext = p.linear_extension();
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j) CHECK_FALSE(p.less(ext[j], ext[i]));
}

TEST_CASE("consistency, rank and grade value") {
  // Chain of three with labels +1, -1: ranks 0, 1, 0.
  auto c = labeled_poset(names(3), {{0, 1, 1}, {1, 2, -1}});
  CHECK(c.is_graded());
  CHECK(c.ranks() == std::vector<int>{0, 1, 0});
  CHECK(c.grade_value() == 0);
  CHECK(c.is_parity());
  CHECK(c.nonascending(1, 2));
  CHECK(c.nonascending(0, 2));
  CHECK_FALSE(c.nonascending(0, 1));

  // Diamond with inconsistent sums.
  auto d = labeled_poset(names(4), {{0, 1, 1}, {0, 2, -1}, {1, 3, 1}, {2, 3, 1}});
  CHECK_FALSE(d.is_consistent());
  CHECK(error_of([&] { d.ranks(); }) == ErrorCode::NotConsistent);

  // Consistent but not graded: maximal elements at ranks 1 and 2.
  auto v = labeled_poset(names(4), {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}});
  CHECK(v.consistency() == Consistency::Consistent);
  CHECK(error_of([&] { v.grade_value(); }) == ErrorCode::NotConsistent);
  CHECK_FALSE(v.is_parity());
}

TEST_CASE("parity labeling") {
  FinitePoset chain4(names(4), {{0, 1}, {1, 2}, {2, 3}});
  auto lab = parity_labeling(chain4);
  CHECK(lab.signs == std::vector<int>{1, -1, 1});
  LabeledPoset lp(chain4, lab);
  CHECK(lp.ranks() == std::vector<int>{0, 1, 0, 1});
  CHECK(lp.is_parity());
  // Chains of lengths 1 and 2 into the same top element.
  FinitePoset bad(names(4), {{0, 3}, {1, 2}, {2, 3}});
  CHECK(error_of([&] { parity_labeling(bad); }) == ErrorCode::NotParityConsistent);
}

TEST_CASE("ordinal sums, chains and antichains") {
  auto a = antichain({"a", "b"});
  auto b = chain({"c", "d"}, -1);
  auto s = ordinal_sum(a, b, 1);
  CHECK(s.size() == 4);
  CHECK(s.poset().covers().size() == 3);
  CHECK(s.ranks() == std::vector<int>{0, 0, 1, 0});
  CHECK(s.poset().less(0, 3));
  CHECK(error_of([&] { ordinal_sum(a, antichain({"a"}), 1); }) == ErrorCode::IdentifierClash);
  auto omega = derive_vertex_labeling(s);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (s.rank(p) < s.rank(q)) CHECK(omega[p] < omega[q]);
}

TEST_CASE("automorphisms of the example poset") {
  auto lp = d4_example_poset();
  CHECK(lp.is_graded());
  CHECK(lp.grade_value() == 1);
  CHECK(is_automorphism(lp, d4_sigma()));
  CHECK(is_automorphism(lp, d4_tau()));
  CHECK_FALSE(is_automorphism(lp, Permutation({1, 0, 2, 3, 4, 5, 6, 7})));
  auto aut = automorphism_group(lp);
  CHECK(aut.order() == 8);
  CHECK(d4_group()->is_subgroup_of(aut));
  // Antichain automorphisms: the full symmetric group; chains: trivial.
  CHECK(automorphism_group(antichain({"a", "b", "c", "d"})).order() == 24);
  CHECK(automorphism_group(chain({"a", "b", "c"})).order() == 1);
  // Labels distinguish otherwise symmetric covers.
  auto v = labeled_poset(names(3), {{0, 1, 1}, {0, 2, -1}});
  CHECK(automorphism_group(v).order() == 1);
  CHECK(automorphism_group(labeled_poset(names(3), {{0, 1, 1}, {0, 2, 1}})).order() == 2);
}

TEST_CASE("automorphism search agrees with exhaustive search") {
  // 2 x 3 grid poset and a zigzag.
  std::vector<LabeledPoset> posets{
      labeled_poset(names(6), {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}, {4, 5, 1}, {0, 3, 1}, {1, 4, 1}, {2, 5, 1}}),
      labeled_poset(names(5), {{0, 1, 1}, {2, 1, 1}, {2, 3, 1}, {4, 3, 1}}),
      labeled_poset(names(5), {{0, 1, 1}, {2, 1, -1}, {2, 3, -1}, {4, 3, 1}}),
  };
  for (const auto& lp : posets) {
    std::vector<int> images(static_cast<std::size_t>(lp.size()));
    std::iota(images.begin(), images.end(), 0);
    std::size_t count = 0;
    do {
      if (is_automorphism(lp, Permutation(images))) ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    CHECK(automorphism_group(lp).order() == count);
  }
}

TEST_CASE("quotients by subgroups") {
  auto lp = d4_example_poset();
  auto q = quotient(lp, *d4_group());
  CHECK(q.size() == 2);
  CHECK(q.poset().covers().size() == 1);
  CHECK(q.poset().name(0) == "p1|p2|p3|p4");

  auto qs = quotient(lp, cyclic_subgroup(d4_sigma() * d4_sigma()));
  CHECK(qs.size() == 4);
  CHECK(qs.is_graded());
  CHECK(qs.ranks() == std::vector<int>{0, 0, 1, 1});

  // A reflection fixing p1, p3: orbits {p1},{p2,p4},{p3},{p5,p6},{p7,p8}.
  auto qt = quotient(lp, cyclic_subgroup(d4_tau()));
  CHECK(qt.size() == 5);
  for (int p = 0; p < qt.size(); ++p)
    CHECK(qt.rank(p) == (qt.poset().name(p)[1] <= '4' ? 0 : 1));

  // Non-automorphisms are rejected.
  CHECK(error_of([&] { quotient(lp, cyclic_subgroup(Permutation({1, 0, 2, 3, 4, 5, 6, 7}))); }) ==
        ErrorCode::NotASubgroupOfAut);
  // Labels descend: quotient of a -1 labeled antichain-over-point.
  auto v = labeled_poset(names(3), {{0, 1, -1}, {0, 2, -1}});
  auto qv = quotient(v, cyclic_subgroup(Permutation({0, 2, 1})));
  CHECK(qv.size() == 2);
  CHECK(qv.sign_of_cover(0) == -1);
}
