#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqgamma/perm_group.hpp"

namespace eqgamma {

/// Finite poset on elements 0..n-1 given by its covering relations.
class FinitePoset {
public:
  /// Throws EmptyPoset, DuplicateElement, or InvalidCovers (cycle, self-loop,
  /// repeated pair, or a pair with an intermediate element).
  FinitePoset(std::vector<std::string> names, std::vector<std::pair<int, int>> covers);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& name(int p) const { return names_[static_cast<std::size_t>(p)]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  /// Cover pairs sorted lexicographically; labelings are aligned to this order.
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }
  std::optional<std::size_t> cover_index(int a, int b) const;
  bool is_cover(int a, int b) const { return cover_index(a, b).has_value(); }
  const std::vector<int>& upper_covers(int p) const { return up_[static_cast<std::size_t>(p)]; }
  const std::vector<int>& lower_covers(int p) const { return down_[static_cast<std::size_t>(p)]; }

  /// Strict order p < q.
  bool less(int p, int q) const { return less_[static_cast<std::size_t>(p * size() + q)]; }
  bool leq(int p, int q) const { return p == q || less(p, q); }
  bool comparable(int p, int q) const { return leq(p, q) || leq(q, p); }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Elements in a fixed linear extension (smallest available index first).
  const std::vector<int>& linear_extension() const noexcept { return topo_; }
  bool is_connected() const;

private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<bool> less_;
  std::vector<int> topo_;
};

/// Signs +1/-1 aligned with FinitePoset::covers().
struct EdgeLabeling {
  std::vector<int> signs;
};

EdgeLabeling constant_labeling(const FinitePoset& poset, int sign = 1);

enum class Consistency { NotConsistent, Consistent, Graded };

/// A poset with an edge labeling, classified once on construction.
class LabeledPoset {
public:
  LabeledPoset(FinitePoset poset, EdgeLabeling labeling);

  const FinitePoset& poset() const noexcept { return poset_; }
  int size() const noexcept { return poset_.size(); }
  const EdgeLabeling& labeling() const noexcept { return labeling_; }
  int sign(int a, int b) const;
  int sign_of_cover(std::size_t i) const { return labeling_.signs[i]; }

  Consistency consistency() const noexcept { return consistency_; }
  bool is_consistent() const noexcept { return consistency_ != Consistency::NotConsistent; }
  bool is_graded() const noexcept { return consistency_ == Consistency::Graded; }
  /// Throws NotConsistent when no rank function exists.
  int rank(int p) const;
  const std::vector<int>& ranks() const;
  /// r_P(eps); throws NotConsistent unless graded.
  int grade_value() const;
  bool is_parity() const noexcept { return parity_; }
  bool all_positive() const noexcept { return all_positive_; }

  /// p < q and some saturated chain from p to q carries a -1 label.
  bool nonascending(int p, int q) const {
    return nonascending_[static_cast<std::size_t>(p * size() + q)];
  }

private:
  FinitePoset poset_;
  EdgeLabeling labeling_;
  Consistency consistency_ = Consistency::NotConsistent;
  std::vector<int> rank_;
  std::optional<int> grade_;
  bool parity_ = false;
  bool all_positive_ = true;
  std::vector<bool> nonascending_;
};

LabeledPoset analyze(const FinitePoset& poset, const EdgeLabeling& labeling);

struct SignedCover {
  int lower;
  int upper;
  int sign;
};
/// Convenience constructor from covers carrying their own signs.
LabeledPoset labeled_poset(std::vector<std::string> names, const std::vector<SignedCover>& covers);

/// eps_par(p < q) = (-1)^l(p). Throws NotParityConsistent.
EdgeLabeling parity_labeling(const FinitePoset& poset);

/// omega with rank(p) < rank(q) => omega(p) < omega(q), values 1..n; ties
/// broken by element index.
std::vector<int> derive_vertex_labeling(const LabeledPoset& lp);

/// lhs (+)_sign rhs. Throws IdentifierClash on shared names.
LabeledPoset ordinal_sum(const LabeledPoset& lhs, const LabeledPoset& rhs, int joining_sign);

/// Antichain with the given names.
LabeledPoset antichain(const std::vector<std::string>& names);
/// Chain a_0 < ... < a_{n-1} with all labels `sign`.
LabeledPoset chain(const std::vector<std::string>& names, int sign = 1);

bool is_automorphism(const LabeledPoset& lp, const Permutation& g);
/// Full group of label-preserving automorphisms, by backtracking over
/// bijections that respect (rank, in-degree, out-degree) signatures.
PermGroup automorphism_group(const LabeledPoset& lp);

/// Orbits of a group on 0..degree-1, each sorted, ordered by least element.
std::vector<std::vector<int>> orbits(const PermGroup& group);

/// P/G with order "some representatives compare". Orbit names are the member
/// names joined by '|'. Throws NotASubgroupOfAut, NotConsistent,
/// QuotientNotPartialOrder.
LabeledPoset quotient(const LabeledPoset& lp, const PermGroup& group);

}  // namespace eqgamma
