#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqgamma/cyclotomic.hpp"
#include "eqgamma/perm_group.hpp"

namespace eqgamma {

/// Complex class function on a PermGroup, one exact value per conjugacy class.
class ClassFunction {
public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction zero(GroupPtr group);
  static ClassFunction constant(GroupPtr group, const Cyclotomic& value);
  /// Evaluates `f` on each class representative.
  static ClassFunction from_function(GroupPtr group,
                                     const std::function<Cyclotomic(const Permutation&)>& f);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& at_class(std::size_t c) const { return values_[c]; }
  const Cyclotomic& at(const Permutation& g) const { return values_[group_->class_of(g)]; }

  bool is_zero() const;
  bool is_integer_valued() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const ClassFunction& other);
  ClassFunction& operator*=(const Cyclotomic& scalar);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

private:
  void check_same_group(const ClassFunction& other) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// <f, h> = (1/|G|) sum_g f(g) conj(h(g)).
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

/// Irreducible characters of a group. Row 0 is the trivial character; the
/// rest are ordered by degree, then lexicographically by value vector.
class CharacterTable {
public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles,
                 std::vector<std::string> names = {});

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return irreducibles_.size(); }
  const ClassFunction& irreducible(std::size_t i) const { return irreducibles_[i]; }
  const std::vector<ClassFunction>& irreducibles() const noexcept { return irreducibles_; }
  std::int64_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Exact check of both orthogonality relations and sum of squared degrees.
  bool verify_orthogonality() const;

private:
  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::int64_t> degrees_;
  std::vector<std::string> names_;
};

/// Integer combination of a table's irreducibles.
class VirtualCharacter {
public:
  VirtualCharacter() = default;
  VirtualCharacter(TablePtr table, std::vector<std::int64_t> multiplicities);
  static VirtualCharacter zero(TablePtr table);
  static VirtualCharacter irreducible(TablePtr table, std::size_t i);

  const TablePtr& table() const noexcept { return table_; }
  const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }
  std::int64_t operator[](std::size_t i) const { return mult_[i]; }

  ClassFunction class_function() const;
  std::int64_t degree() const;
  bool is_zero() const;

  VirtualCharacter& operator+=(const VirtualCharacter& other);
  VirtualCharacter& operator-=(const VirtualCharacter& other);
  VirtualCharacter& operator*=(std::int64_t scalar);
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(VirtualCharacter a, std::int64_t s) { return a *= s; }
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.mult_ == b.mult_;
  }

  /// e.g. "5 + X.2 + 3*X.4" using the table's names; "0" when zero.
  std::string to_string() const;

private:
  TablePtr table_;
  std::vector<std::int64_t> mult_;
};

/// Exact irreducible characters by the Dixon-Burnside method: class sums are
/// diagonalised modulo a prime p = 1 (mod exponent), p > 2 sqrt|G|, and each
/// value is lifted to Q(zeta_N) through its eigenvalue multiplicities.
TablePtr character_table(const GroupPtr& group);

/// Multiplicities <f, chi_i>. Throws NotVirtual on a non-integral result.
VirtualCharacter decompose(const TablePtr& table, const ClassFunction& f);
bool is_effective(const VirtualCharacter& v);

/// Left-coset transversal of `sub` in `parent`, lexicographically least
/// representatives in order of first appearance.
std::vector<Permutation> left_transversal(const PermGroup& parent, const PermGroup& sub);

/// Induced class function via the coset-sum formula. When `transversal` is
/// given it must be a left transversal of `sub` in `parent`.
ClassFunction induce(const GroupPtr& sub, const GroupPtr& parent, const ClassFunction& f,
                     const std::vector<Permutation>* transversal = nullptr);
ClassFunction restrict(const GroupPtr& parent, const GroupPtr& sub, const ClassFunction& f);

/// Finds the permutation `perm` with ours.irreducible(perm[i]) == reference[i]
/// (value vectors over our class order). Empty when no such matching exists.
std::optional<std::vector<std::size_t>> align_irreducibles(
    const CharacterTable& ours, const std::vector<std::vector<Cyclotomic>>& reference);

}  // namespace eqgamma
