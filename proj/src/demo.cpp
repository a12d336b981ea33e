#include "eqgamma/demo.hpp"

#include "eqgamma/error.hpp"

namespace eqgamma {

LabeledPoset d4_example_poset() {
  std::vector<std::string> names;
  for (int i = 1; i <= 8; ++i) names.push_back("p" + std::to_string(i));
  std::vector<SignedCover> covers;
  for (int i = 0; i < 4; ++i) {
    covers.push_back({i, i + 4, 1});
    covers.push_back({i, (i + 1) % 4 + 4, 1});
  }
  return labeled_poset(std::move(names), covers);
}

Permutation d4_sigma() { return Permutation({1, 2, 3, 0, 5, 6, 7, 4}); }

Permutation d4_tau() { return Permutation({0, 3, 2, 1, 5, 4, 7, 6}); }

GroupPtr d4_group() { return make_group(PermGroup::generate(8, {d4_sigma(), d4_tau()})); }

TablePtr d4_named_table() {
  const GroupPtr g = d4_group();
  const TablePtr dixon = character_table(g);
  // Rows on the classes of e, sigma, sigma^2, tau, tau sigma.
  const std::vector<std::vector<int>> rows = {
      {1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, -1, 1, 1, -1}, {1, -1, 1, -1, 1}, {2, 0, -2, 0, 0}};
  const Permutation s = d4_sigma(), t = d4_tau();
  const std::vector<Permutation> reps = {Permutation::identity(8), s, s * s, t, t * s};
  std::vector<std::vector<Cyclotomic>> reference;
  for (const auto& row : rows) {
    std::vector<Cyclotomic> values(g->class_count());
    for (std::size_t i = 0; i < reps.size(); ++i) values[g->class_of(reps[i])] = row[i];
    reference.push_back(std::move(values));
  }
  const auto matching = align_irreducibles(*dixon, reference);
  if (!matching) throw Error(ErrorCode::InternalError, "D4 table does not match the named rows");
  std::vector<ClassFunction> irreducibles;
  for (auto i : *matching) irreducibles.push_back(dixon->irreducible(i));
  return std::make_shared<const CharacterTable>(g, std::move(irreducibles),
                                                std::vector<std::string>{"1", "chi_1", "chi_2", "chi_3", "chi_4"});
}

LatticePolytopeHRep cross_polytope(int d) {
  if (d < 1 || d > 12) throw Error(ErrorCode::InvalidArgument, "cross-polytope dimension must be in 1..12");
  LatticePolytopeHRep poly;
  poly.dimension = d;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Inequality ineq;
    for (int i = 0; i < d; ++i) ineq.normal.push_back((mask >> i) & 1 ? -1 : 1);
    ineq.offset = 1;
    poly.inequalities.push_back(std::move(ineq));
  }
  return poly;
}

LatticePolytopeHRep cross_polytope_3() { return cross_polytope(3); }

}  // namespace eqgamma
