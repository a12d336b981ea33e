#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqgamma/character.hpp"
#include "eqgamma/ehrhart.hpp"
#include "eqgamma/gamma.hpp"
#include "eqgamma/poset.hpp"

namespace eqgamma {

using Json = nlohmann::ordered_json;

/// Largest poset accepted from input files.
inline constexpr int kMaxInputPosetSize = 24;

struct PosetInput {
  LabeledPoset poset;
  /// Generators given in the file, if any.
  std::optional<std::vector<Permutation>> generators;
};

/// Throws ParseError, UnknownElement, GuardExceeded and the poset
/// construction errors.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

PosetInput poset_from_json(const Json& j);
Json poset_to_json(const LabeledPoset& lp, const std::vector<Permutation>& generators = {});

/// Element map {name: name, ...}; unlisted elements are fixed.
Permutation permutation_from_json(const FinitePoset& poset, const Json& j);
Json permutation_to_json(const FinitePoset& poset, const Permutation& g);
/// Cycle notation over element names, e.g. "(p1 p2 p3)(p5 p6)".
Permutation permutation_from_cycles(const FinitePoset& poset, const std::string& text);

LatticePolytopeHRep hrep_from_json(const Json& j);
Json hrep_to_json(const LatticePolytopeHRep& poly);

Json polynomial_to_json(const IntPolynomial& p);
Json cyclotomic_to_json(const Cyclotomic& z);
/// Classes with representative and size, irreducible names, degrees and values.
Json character_table_to_json(const TablePtr& table, const std::vector<std::string>& point_names = {});
/// {"group": {"order", "irreducibles"}, "coefficients": [[multiplicities]...]}.
Json char_polynomial_to_json(const TablePtr& table, const CharPolynomial& p);
Json multiplicities_to_json(const std::vector<VirtualCharacter>& coefficients);
Json gamma_report_to_json(const LabeledPoset& lp, const GammaReport& report);

}  // namespace eqgamma
