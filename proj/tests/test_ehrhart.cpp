#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eqgamma/demo.hpp"
#include "eqgamma/ehrhart.hpp"
#include "eqgamma/saturation.hpp"
#include "eqgamma/symmetric.hpp"
#include "support.hpp"

using namespace eqgamma;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// Eulerian polynomial by counting descents over all permutations.
IntPolynomial eulerian(int d) {
  std::vector<int> w(static_cast<std::size_t>(d));
  std::iota(w.begin(), w.end(), 0);
  IntPolynomial a(static_cast<std::size_t>(d), 0);
  do {
    int des = 0;
    for (int i = 0; i + 1 < d; ++i) des += w[i] > w[i + 1];
    ++a[des];
  } while (std::next_permutation(w.begin(), w.end()));
  return trimmed(a);
}

std::vector<LabeledPoset> sample_posets() {
  return {
      d4_example_poset(),
      chain(names(4), 1),
      chain(names(4), -1),
      antichain(names(4)),
      labeled_poset(names(3), {{0, 1, 1}, {1, 2, -1}}),
      labeled_poset(names(5), {{0, 2, 1}, {1, 2, 1}, {2, 3, -1}, {2, 4, -1}}),
      labeled_poset(names(5), {{0, 1, -1}, {2, 1, -1}, {2, 3, 1}, {4, 3, 1}}),
      labeled_poset(names(6), {{0, 1, 1}, {1, 2, -1}, {3, 4, 1}, {4, 5, -1}, {0, 4, 1}, {3, 1, 1}}),
  };
}

}  // namespace

TEST_CASE("dynamic programming count equals brute force") {
  for (const auto& lp : sample_posets()) {
    const auto aut = automorphism_group(lp);
    const int max_m = lp.size() <= 6 ? 4 : 2;
    for (int m = 0; m <= max_m; ++m) {
      CHECK(count_points(lp, m) == count_points_bruteforce(lp, m));
      for (const auto& g : aut.elements()) CHECK(count_points(lp, m, g) == count_points_bruteforce(lp, m, g));
    }
  }
}

TEST_CASE("closed forms for chains and antichains") {
  // Chain of n with +1 labels: C(m + n, n) points; h* = 1.
  auto c = chain(names(5), 1);
  CHECK(count_points(c, 3) == 56);
  CHECK(hstar(c) == IntPolynomial{1});
  // All -1 labels: strict chains, C(m + 1, n).
  auto s = chain(names(3), -1);
  CHECK(count_points(s, 4) == 10);
  CHECK(hstar(s) == IntPolynomial{0, 0, 1});
  for (int d = 1; d <= 6; ++d) {
    auto a = antichain(names(d));
    CHECK(count_points(a, 2) == static_cast<std::int64_t>(std::pow(3, d)));
    CHECK(hstar(a) == eulerian(d));
  }
}

TEST_CASE("h* agrees with the linear extension formula") {
  for (const auto& lp : sample_posets()) {
    CHECK(hstar(lp) == hstar_linear_extensions(lp));
    if (lp.is_graded() && lp.all_positive())
      CHECK(is_palindromic(hstar(lp), lp.size() - lp.grade_value() - 1));
  }
}

TEST_CASE("equivariant h* via quotients equals the fixed-point series") {
  auto lp = d4_example_poset();
  auto g = d4_group();
  auto h = equivariant_hstar(lp, g);
  CHECK(h == equivariant_hstar_bruteforce(lp, g, default_max_dilate(lp, *g)));
  CHECK(h.at(Permutation::identity(8)) == hstar(lp));
  for (const auto& lp2 : sample_posets()) {
    auto aut = make_group(automorphism_group(lp2));
    CHECK(equivariant_hstar(lp2, aut) == equivariant_hstar_bruteforce(lp2, aut, default_max_dilate(lp2, *aut)));
  }
  CHECK(error_of([&] { equivariant_hstar_bruteforce(lp, g, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("saturation formula reproduces the equivariant h*") {
  auto lp = d4_example_poset();
  auto g = d4_group();
  CHECK(hstar_via_saturations(lp, g) == equivariant_hstar(lp, g));
  for (const auto& h : all_subgroups(*g)) {
    auto hp = make_group(h);
    CHECK(hstar_via_saturations(lp, hp) == equivariant_hstar(lp, hp));
  }
}

TEST_CASE("antichain of three under S3") {
  auto lp = antichain({"a", "b", "c"});
  auto g = make_group(symmetric_group(3));
  auto table = symmetric_group_table(g);
  auto coeffs = decompose(table, equivariant_hstar(lp, g));
  REQUIRE(coeffs.size() == 3);
  auto std_rep = VirtualCharacter::irreducible(table, *table->find("(2,1)"));
  auto one = VirtualCharacter::irreducible(table, *table->find("(3)"));
  CHECK(coeffs[0] == one);
  auto mid = one;
  mid *= 2;
  mid += std_rep;
  CHECK(coeffs[1] == mid);
  CHECK(coeffs[2] == one);
}

TEST_CASE("input guards") {
  auto lp = d4_example_poset();
  auto bad = Permutation({1, 0, 2, 3, 4, 5, 6, 7});
  CHECK(error_of([&] { count_points(lp, 2, bad); }) == ErrorCode::NotAnAutomorphism);
  CHECK(error_of([&] { count_points(lp, -1); }) == ErrorCode::InvalidArgument);
  auto d = labeled_poset(names(4), {{0, 1, 1}, {0, 2, -1}, {1, 3, 1}, {2, 3, 1}});
  CHECK(error_of([&] { count_points(d, 2); }) == ErrorCode::NotConsistent);
  CHECK(error_of([&] { count_points_bruteforce(antichain(names(9)), 9); }) == ErrorCode::GuardExceeded);
  auto not_aut = make_group(PermGroup::generate(8, {bad}));
  CHECK(error_of([&] { equivariant_hstar(lp, not_aut); }) == ErrorCode::NotASubgroupOfAut);
  CHECK(error_of([&] { hstar_via_saturations(chain(names(3)), make_group(PermGroup::trivial(3))); }) ==
        ErrorCode::RankOutOfParityRange);
}

TEST_CASE("explicit polytopes") {
  auto oct = cross_polytope_3();
  auto box = bounding_box(oct);
  for (const auto& [lo, hi] : box) {
    CHECK(lo == Rational(-1));
    CHECK(hi == Rational(1));
  }
  CHECK(count_lattice_points(oct, 1) == 7);
  CHECK(count_lattice_points(oct, 2) == 25);
  auto g = make_group(symmetric_group(3));
  auto h = generic_equivariant_hstar(oct, g);
  CHECK(h.at(Permutation::identity(3)) == one_plus_t_power(3));
  auto table = symmetric_group_table(g);
  auto coeffs = decompose(table, h);
  REQUIRE(coeffs.size() == 4);
  auto one = VirtualCharacter::irreducible(table, *table->find("(3)"));
  auto mid = one;
  mid += VirtualCharacter::irreducible(table, *table->find("(2,1)"));
  CHECK(coeffs[0] == one);
  CHECK(coeffs[1] == mid);
  CHECK(coeffs[2] == mid);
  CHECK(coeffs[3] == one);

  // The unit cube as an H-polytope matches the antichain order polytope.
  LatticePolytopeHRep cube{3, {}};
  for (int i = 0; i < 3; ++i) {
    Inequality up{{0, 0, 0}, 1, false}, down{{0, 0, 0}, 0, false};
    up.normal[i] = 1;
    down.normal[i] = -1;
    cube.inequalities.push_back(up);
    cube.inequalities.push_back(down);
  }
  CHECK(generic_equivariant_hstar(cube, g) == equivariant_hstar(antichain({"a", "b", "c"}), g));

  LatticePolytopeHRep half_line{1, {{{1}, 1, false}}};
  CHECK(error_of([&] { bounding_box(half_line); }) == ErrorCode::Unbounded);
  LatticePolytopeHRep skew{2, {{{1, 0}, 1, false}, {{-1, 0}, 0, false}, {{0, 1}, 2, false}, {{0, -1}, 0, false}}};
  CHECK(error_of([&] { generic_equivariant_hstar(skew, make_group(symmetric_group(2))); }) ==
        ErrorCode::GroupDoesNotPreserve);
  LatticePolytopeHRep half{1, {{{2}, 1, false}, {{-1}, 0, false}}};
  CHECK(error_of([&] { generic_equivariant_hstar(half, make_group(PermGroup::trivial(1))); }) ==
        ErrorCode::TruncationUnstable);
}
