#include "eqgamma/io.hpp"

#include <fstream>
#include <sstream>

#include "eqgamma/error.hpp"

namespace eqgamma {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) parse_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int element(const FinitePoset& poset, const Json& j) {
  const auto name = as_string(j, "element");
  const auto i = poset.index_of(name);
  if (!i) parse_error("unknown element \"" + name + "\"");
  return *i;
}

Json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

Json class_function_values(const ClassFunction& f) {
  Json out = Json::array();
  for (const auto& v : f.values()) out.push_back(cyclotomic_to_json(v));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

PosetInput poset_from_json(const Json& j) {
  if (!j.is_object()) parse_error("poset must be a JSON object");
  const auto& elements = member(j, "elements");
  if (!elements.is_array()) parse_error("\"elements\" must be an array");
  if (elements.size() > static_cast<std::size_t>(kMaxInputPosetSize))
    throw Error(ErrorCode::GuardExceeded,
                "poset has " + std::to_string(elements.size()) + " elements; limit is " +
                    std::to_string(kMaxInputPosetSize));
  std::vector<std::string> names;
  for (const auto& e : elements) names.push_back(as_string(e, "element"));

  auto lookup = [&](const Json& e) {
    const auto name = as_string(e, "element");
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    parse_error("unknown element \"" + name + "\"");
  };
  auto pair_of = [&](const Json& c) {
    if (!c.is_array() || c.size() != 2) parse_error("a cover must be a pair [lower, upper]");
    return std::pair<int, int>{lookup(c[0]), lookup(c[1])};
  };

  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    const auto& cs = j.at("covers");
    if (!cs.is_array()) parse_error("\"covers\" must be an array");
    for (const auto& c : cs) covers.push_back(pair_of(c));
  }
  FinitePoset poset(names, covers);

  EdgeLabeling labeling = constant_labeling(poset);
  if (j.contains("labels")) {
    const auto& ls = j.at("labels");
    if (!ls.is_array()) parse_error("\"labels\" must be an array");
    std::vector<bool> seen(poset.covers().size(), false);
    for (const auto& l : ls) {
      const auto [a, b] = pair_of(member(l, "cover"));
      const auto idx = poset.cover_index(a, b);
      if (!idx) parse_error("label on " + names[a] + " < " + names[b] + ", which is not a cover");
      if (seen[*idx]) parse_error("cover " + names[a] + " < " + names[b] + " labeled twice");
      seen[*idx] = true;
      const auto sign = as_int(member(l, "sign"), "sign");
      if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidLabeling, "sign must be +1 or -1");
      labeling.signs[*idx] = static_cast<int>(sign);
    }
  }

  PosetInput out{LabeledPoset(poset, labeling), std::nullopt};
  if (j.contains("group")) {
    const auto& gens = member(j.at("group"), "generators");
    if (!gens.is_array()) parse_error("\"generators\" must be an array");
    std::vector<Permutation> list;
    for (const auto& g : gens) list.push_back(permutation_from_json(poset, g));
    out.generators = std::move(list);
  }
  return out;
}

Json poset_to_json(const LabeledPoset& lp, const std::vector<Permutation>& generators) {
  const auto& poset = lp.poset();
  Json j;
  j["elements"] = poset.names();
  Json covers = Json::array();
  Json labels = Json::array();
  for (std::size_t i = 0; i < poset.covers().size(); ++i) {
    const auto& [a, b] = poset.covers()[i];
    Json pair = Json::array({poset.name(a), poset.name(b)});
    covers.push_back(pair);
    if (lp.sign_of_cover(i) != 1) labels.push_back(Json{{"cover", pair}, {"sign", lp.sign_of_cover(i)}});
  }
  j["covers"] = covers;
  if (!labels.empty()) j["labels"] = labels;
  if (!generators.empty()) {
    Json gens = Json::array();
    for (const auto& g : generators) gens.push_back(permutation_to_json(poset, g));
    j["group"] = Json{{"generators", gens}};
  }
  return j;
}

Permutation permutation_from_json(const FinitePoset& poset, const Json& j) {
  if (!j.is_object()) parse_error("a generator must be an object {element: image}");
  std::vector<int> images(static_cast<std::size_t>(poset.size()));
  for (int i = 0; i < poset.size(); ++i) images[static_cast<std::size_t>(i)] = i;
  for (const auto& [key, value] : j.items()) {
    const auto from = poset.index_of(key);
    if (!from) parse_error("unknown element \"" + key + "\"");
    images[static_cast<std::size_t>(*from)] = element(poset, value);
  }
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    if (hit[static_cast<std::size_t>(v)]) parse_error("generator is not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

Json permutation_to_json(const FinitePoset& poset, const Permutation& g) {
  Json j = Json::object();
  for (int p = 0; p < poset.size(); ++p)
    if (g(p) != p) j[poset.name(p)] = poset.name(g(p));
  return j;
}

Permutation permutation_from_cycles(const FinitePoset& poset, const std::string& text) {
  std::vector<int> images(static_cast<std::size_t>(poset.size()));
  for (int i = 0; i < poset.size(); ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<bool> moved(images.size(), false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') parse_error("expected '(' in cycle notation \"" + text + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) parse_error("unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const auto start = pos;
      while (pos < text.size() && text[pos] != ' ' && text[pos] != ',' && text[pos] != ')') ++pos;
      const auto name = text.substr(start, pos - start);
      const auto idx = poset.index_of(name);
      if (!idx) parse_error("unknown element \"" + name + "\"");
      if (moved[static_cast<std::size_t>(*idx)]) parse_error("element \"" + name + "\" repeated in \"" + text + "\"");
      moved[static_cast<std::size_t>(*idx)] = true;
      cycle.push_back(*idx);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

LatticePolytopeHRep hrep_from_json(const Json& j) {
  if (!j.is_object()) parse_error("polytope must be a JSON object");
  const auto& ineqs = member(j, "inequalities");
  if (!ineqs.is_array() || ineqs.empty()) parse_error("\"inequalities\" must be a nonempty array");
  LatticePolytopeHRep poly;
  poly.dimension = j.contains("dimension") ? static_cast<int>(as_int(j.at("dimension"), "dimension")) : -1;
  for (const auto& q : ineqs) {
    Inequality in;
    const auto& normal = member(q, "normal");
    if (!normal.is_array()) parse_error("\"normal\" must be an array");
    for (const auto& x : normal) in.normal.push_back(as_int(x, "normal entry"));
    in.offset = as_int(member(q, "offset"), "offset");
    if (q.contains("strict")) {
      if (!q.at("strict").is_boolean()) parse_error("\"strict\" must be a boolean");
      in.strict = q.at("strict").get<bool>();
    }
    if (poly.dimension < 0) poly.dimension = static_cast<int>(in.normal.size());
    if (in.normal.size() != static_cast<std::size_t>(poly.dimension))
      parse_error("normal length differs from the dimension");
    poly.inequalities.push_back(std::move(in));
  }
  if (poly.dimension <= 0) parse_error("dimension must be positive");
  return poly;
}

Json hrep_to_json(const LatticePolytopeHRep& poly) {
  Json ineqs = Json::array();
  for (const auto& q : poly.inequalities)
    ineqs.push_back(Json{{"normal", q.normal}, {"offset", q.offset}, {"strict", q.strict}});
  return Json{{"dimension", poly.dimension}, {"inequalities", ineqs}};
}

Json polynomial_to_json(const IntPolynomial& p) { return Json(trimmed(p)); }

Json cyclotomic_to_json(const Cyclotomic& z) {
  if (z.is_rational()) return rational_to_json(z.rational_value());
  Json coeffs = Json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(rational_to_json(c));
  return Json{{"root_order", z.field_order()}, {"coefficients", coeffs}};
}

Json character_table_to_json(const TablePtr& table, const std::vector<std::string>& point_names) {
  const auto& g = *table->group();
  Json classes = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& rep = g.class_representative(c);
    classes.push_back(Json{{"representative", point_names.empty() ? rep.to_cycle_string()
                                                                  : rep.to_cycle_string(point_names)},
                           {"size", g.class_size(c)}});
  }
  Json irreducibles = Json::array();
  for (std::size_t i = 0; i < table->size(); ++i)
    irreducibles.push_back(Json{{"name", table->name(i)},
                                {"degree", table->degree(i)},
                                {"values", class_function_values(table->irreducible(i))}});
  return Json{{"order", g.order()}, {"classes", classes}, {"irreducibles", irreducibles}};
}

Json multiplicities_to_json(const std::vector<VirtualCharacter>& coefficients) {
  Json out = Json::array();
  for (const auto& c : coefficients) out.push_back(c.multiplicities());
  return out;
}

Json char_polynomial_to_json(const TablePtr& table, const CharPolynomial& p) {
  std::vector<VirtualCharacter> coeffs;
  for (const auto& c : p.coefficients()) coeffs.push_back(decompose(table, c));
  return Json{{"group", Json{{"order", table->group()->order()}, {"irreducibles", table->names()}}},
              {"coefficients", multiplicities_to_json(coeffs)}};
}

Json gamma_report_to_json(const LabeledPoset& lp, const GammaReport& report) {
  Json orbits = Json::array();
  for (const auto& o : report.orbits) {
    Json blocks = Json::array();
    for (const auto& b : o.representative.blocks) {
      Json names = Json::array();
      for (int p : b) names.push_back(lp.poset().name(p));
      blocks.push_back(names);
    }
    orbits.push_back(Json{{"blocks", blocks},
                          {"orbit_size", o.orbit_size},
                          {"stabilizer_order", o.stabilizer_order},
                          {"shift", o.shift},
                          {"contribution", multiplicities_to_json(o.contribution)}});
  }
  return Json{{"irreducibles", report.table->names()},
              {"gamma", multiplicities_to_json(report.extracted.coefficients)},
              {"effective", report.effective},
              {"orbits", orbits},
              {"verified_against_hstar", report.agree}};
}

}  // namespace eqgamma
