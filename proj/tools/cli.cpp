#include "cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eqgamma/demo.hpp"
#include "eqgamma/error.hpp"
#include "eqgamma/io.hpp"
#include "eqgamma/laws.hpp"
#include "eqgamma/saturation.hpp"
#include "eqgamma/symmetric.hpp"

namespace eqgamma {

namespace {

struct Job {
  std::string command;
  std::string input;
  bool json = false;
  std::optional<int> max_dilate;
  bool oracle = false;
  std::string group;
  bool demo_d4 = false;
  bool assert_verdict = false;
  int dim = 3;
};

struct Loaded {
  LabeledPoset lp;
  GroupPtr group;
  TablePtr table;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (item.find_first_not_of(' ') != std::string::npos) out.push_back(item);
  return out;
}

GroupPtr generated_subgroup(const LabeledPoset& lp, const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (!is_automorphism(lp, g))
      throw Error(ErrorCode::NotASubgroupOfAut,
                  g.to_cycle_string(lp.poset().names()) + " does not preserve the labeled order");
  return make_group(PermGroup::generate(lp.size(), gens));
}

Loaded load(const Job& job) {
  std::optional<LabeledPoset> lp;
  std::optional<std::vector<Permutation>> file_gens;
  if (job.demo_d4) {
    if (!job.input.empty()) throw Error(ErrorCode::InvalidArgument, "--demo-d4 takes no input file");
    lp = d4_example_poset();
  } else {
    if (job.input.empty()) throw Error(ErrorCode::InvalidArgument, "an input file or --demo-d4 is required");
    auto in = poset_from_json(read_json_file(job.input));
    lp = std::move(in.poset);
    file_gens = std::move(in.generators);
  }
  const std::string& sel = job.group;
  if (sel.empty() || sel == "file") {
    if (job.demo_d4) return {*lp, d4_group(), d4_named_table()};
    if (file_gens) {
      auto g = generated_subgroup(*lp, *file_gens);
      return {*lp, g, character_table(g)};
    }
    if (sel == "file") throw Error(ErrorCode::InvalidArgument, "the input file has no \"group\"");
  }
  GroupPtr g;
  if (sel.empty() || sel == "aut")
    g = make_group(automorphism_group(*lp));
  else if (sel == "trivial")
    g = make_group(PermGroup::trivial(lp->size()));
  else {
    std::vector<Permutation> gens;
    for (const auto& text : split(sel, ';')) gens.push_back(permutation_from_cycles(lp->poset(), text));
    g = generated_subgroup(*lp, gens);
  }
  return {*lp, g, character_table(g)};
}

std::string class_label(const PermGroup& g, std::size_t c, const std::vector<std::string>& names) {
  const auto& rep = g.class_representative(c);
  return rep.is_identity() ? "e" : rep.to_cycle_string(names);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string block_string(const LabeledPoset& lp, const Saturation& s) {
  std::string out;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (i) out += s.block_signs[i - 1] == 1 ? " <+ " : " <- ";
    out += '{';
    for (std::size_t k = 0; k < s.blocks[i].size(); ++k) out += (k ? " " : "") + lp.poset().name(s.blocks[i][k]);
    out += '}';
  }
  return out;
}

void print_char_polynomial(std::ostream& out, const TablePtr& table, const CharPolynomial& p) {
  for (int i = 0; i <= p.degree(); ++i)
    out << "  t^" << i << ": " << decompose(table, p.coefficient(static_cast<std::size_t>(i))).to_string() << '\n';
}

void print_class_values(std::ostream& out, const CharPolynomial& p, const std::vector<std::string>& names) {
  const auto& g = *p.group();
  for (std::size_t c = 0; c < g.class_count(); ++c)
    out << "  " << class_label(g, c, names) << " [" << g.class_size(c) << "]: " << to_string(p.at_class(c)) << '\n';
}

void print_gamma(std::ostream& out, const GammaPolynomial& gamma) {
  out << "gamma(t) = " << gamma.to_string() << '\n';
  for (std::size_t i = 0; i < gamma.coefficients.size(); ++i)
    out << "  gamma_" << i << " = " << gamma.coefficients[i].to_string()
        << (is_effective(gamma.coefficients[i]) ? "" : "  (not effective)") << '\n';
}

Json class_values_json(const CharPolynomial& p, const std::vector<std::string>& names) {
  const auto& g = *p.group();
  Json out = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c)
    out.push_back(Json{{"representative", class_label(g, c, names)},
                       {"size", g.class_size(c)},
                       {"hstar", polynomial_to_json(p.at_class(c))}});
  return out;
}

/// Brute-force cross-checks; returns the failing details.
std::vector<std::string> oracle_failures(const Job& job, const Loaded& in) {
  LawOptions options;
  options.max_dilate = job.max_dilate;
  options.oracle = true;
  std::vector<std::string> failures;
  for (const auto& r : {law_evaluation(in.lp, in.group, options),
                        law_oracle_counts(in.lp, in.group, options.oracle_max_dilate)})
    if (r.applicable && !r.holds) failures.push_back(r.name + ": " + r.detail);
  return failures;
}

int report_oracle(const Job& job, const Loaded& in, std::ostream& out, std::ostream& err) {
  if (!job.oracle) return kExitOk;
  const auto failures = oracle_failures(job, in);
  for (const auto& f : failures) err << "ORACLE MISMATCH " << f << '\n';
  if (!job.json) out << "oracle: " << (failures.empty() ? "brute force agrees" : "MISMATCH") << '\n';
  return failures.empty() ? kExitOk : kExitVerdict;
}

int cmd_validate(const Job& job, std::ostream& out) {
  const auto in = load(job);
  const auto& lp = in.lp;
  const char* kind = lp.is_graded() ? "graded" : lp.is_consistent() ? "consistent, not graded" : "not consistent";
  const auto aut = automorphism_group(lp);
  std::size_t negative = 0;
  for (int s : lp.labeling().signs) negative += s == -1;
  if (job.json) {
    Json j{{"elements", lp.size()},
           {"covers", lp.poset().covers().size()},
           {"negative_labels", negative},
           {"consistency", kind},
           {"connected", lp.poset().is_connected()},
           {"parity_form", lp.is_parity()}};
    if (lp.is_graded()) j["grade"] = lp.grade_value();
    j["automorphism_group_order"] = aut.order();
    j["group_order"] = in.group->order();
    out << j.dump(2) << '\n';
  } else {
    out << "elements: " << lp.size() << '\n'
        << "covers: " << lp.poset().covers().size() << " (" << negative << " labeled -1)\n"
        << "labeling: " << kind;
    if (lp.is_graded()) out << ", r(eps) = " << lp.grade_value();
    out << '\n'
        << "connected: " << (lp.poset().is_connected() ? "yes" : "no") << '\n'
        << "parity form: " << (lp.is_parity() ? "yes" : "no") << '\n'
        << "automorphism group order: " << aut.order() << '\n'
        << "group order: " << in.group->order() << '\n';
  }
  return job.assert_verdict && !lp.is_consistent() ? kExitVerdict : kExitOk;
}

int cmd_hstar(const Job& job, std::ostream& out, std::ostream& err) {
  const auto in = load(job);
  const auto h = equivariant_hstar(in.lp, in.group);
  const auto& names = in.lp.poset().names();
  if (job.json) {
    Json j{{"hstar", polynomial_to_json(h.at_class(0))},
           {"equivariant", char_polynomial_to_json(in.table, h)},
           {"class_values", class_values_json(h, names)},
           {"table", character_table_to_json(in.table, names)}};
    const int status = report_oracle(job, in, out, err);
    if (job.oracle) j["oracle_agrees"] = status == kExitOk;
    out << j.dump(2) << '\n';
    return status;
  }
  out << "h*(t) = " << to_string(h.at_class(0)) << '\n'
      << "group order " << in.group->order() << ", " << in.group->class_count() << " classes\n"
      << "equivariant h*:\n";
  print_char_polynomial(out, in.table, h);
  out << "values on classes:\n";
  print_class_values(out, h, names);
  return report_oracle(job, in, out, err);
}

int cmd_gamma(const Job& job, std::ostream& out, std::ostream& err) {
  const auto in = load(job);
  const auto report = effectiveness_report(in.lp, in.group, in.table);
  if (job.json) {
    auto j = gamma_report_to_json(in.lp, report);
    const int status = report_oracle(job, in, out, err);
    if (job.oracle) j["oracle_agrees"] = status == kExitOk;
    out << j.dump(2) << '\n';
    if (status != kExitOk) return status;
  } else {
    print_gamma(out, report.extracted);
    out << "orbits:\n";
    for (std::size_t i = 0; i < report.orbits.size(); ++i) {
      const auto& o = report.orbits[i];
      out << "  Q" << i + 1 << ' ' << block_string(in.lp, o.representative) << ": orbit " << o.orbit_size
          << ", stabilizer " << o.stabilizer_order << ", shift " << o.shift << '\n';
      for (std::size_t k = 0; k < o.contribution.size(); ++k)
        if (!o.contribution[k].is_zero()) out << "    t^" << k << ": " << o.contribution[k].to_string() << '\n';
    }
    out << "verified against h*: " << (report.agree ? "yes" : "NO") << '\n'
        << "effective: " << (report.effective ? "yes" : "no") << '\n';
    if (const int status = report_oracle(job, in, out, err); status != kExitOk) return status;
  }
  if (!report.agree) {
    err << "saturation gamma disagrees with the gamma extracted from h*\n";
    return kExitVerdict;
  }
  return job.assert_verdict && !report.effective ? kExitVerdict : kExitOk;
}

int cmd_saturations(const Job& job, std::ostream& out) {
  const auto in = load(job);
  const LabeledPoset par(in.lp.poset(), parity_labeling(in.lp.poset()));
  const auto total = enumerate_saturations(par).size();
  const auto orbits = saturation_orbits(par, *in.group);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.members.size());
  if (job.json) {
    Json list = Json::array();
    for (const auto& o : orbits) {
      Json blocks = Json::array();
      for (const auto& b : o.representative.blocks) {
        Json names = Json::array();
        for (int p : b) names.push_back(par.poset().name(p));
        blocks.push_back(names);
      }
      list.push_back(Json{{"blocks", blocks},
                          {"signs", o.representative.block_signs},
                          {"orbit_size", o.members.size()},
                          {"stabilizer_order", o.stabilizer->order()}});
    }
    out << Json{{"saturations", total}, {"orbits", list}}.dump(2) << '\n';
    return kExitOk;
  }
  out << total << " saturations in " << orbits.size() << " orbits (" << join(sizes) << ")\n";
  for (std::size_t i = 0; i < orbits.size(); ++i)
    out << "  Q" << i + 1 << ' ' << block_string(par, orbits[i].representative) << ": orbit "
        << orbits[i].members.size() << ", stabilizer " << orbits[i].stabilizer->order() << '\n';
  return kExitOk;
}

int cmd_verify(const Job& job, std::ostream& out, std::ostream& err) {
  const auto in = load(job);
  LawOptions options;
  options.max_dilate = job.max_dilate;
  options.oracle = job.oracle;
  const auto laws = verify_laws(in.lp, in.group, options);
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : laws) {
    ok = ok && (!r.applicable || r.holds);
    if (job.json)
      list.push_back(Json{{"name", r.name}, {"applicable", r.applicable}, {"holds", r.holds}, {"detail", r.detail}});
    else
      out << (!r.applicable ? "SKIP" : r.holds ? "PASS" : "FAIL") << ' ' << r.name
          << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    if (r.applicable && !r.holds) err << "law " << r.name << " failed: " << r.detail << '\n';
  }
  if (job.json) out << Json{{"laws", list}, {"all_hold", ok}}.dump(2) << '\n';
  return ok ? kExitOk : kExitVerdict;
}

int cmd_crosspoly(const Job& job, std::ostream& out, std::ostream& err) {
  LatticePolytopeHRep poly;
  GroupPtr group;
  TablePtr table;
  if (!job.input.empty()) {
    const auto j = read_json_file(job.input);
    poly = hrep_from_json(j);
    if (j.contains("group")) {
      std::vector<Permutation> gens;
      const auto& list = j.at("group").at("generators");
      for (const auto& g : list) {
        std::vector<int> images;
        try {
          images = g.get<std::vector<int>>();
        } catch (const Json::exception&) {
          throw Error(ErrorCode::ParseError, "a coordinate permutation must be an array of 0-based images");
        }
        if (images.size() != static_cast<std::size_t>(poly.dimension))
          throw Error(ErrorCode::ParseError, "generator length differs from the dimension");
        gens.emplace_back(std::move(images));
      }
      group = make_group(PermGroup::generate(poly.dimension, gens));
    }
  } else {
    poly = cross_polytope(job.dim);
  }
  if (!group) {
    group = make_group(symmetric_group(poly.dimension));
    table = symmetric_group_table(group);
  } else {
    table = character_table(group);
  }
  const int s = poly.dimension;
  const auto h = generic_equivariant_hstar(poly, group, job.max_dilate);
  std::optional<GammaPolynomial> gamma;
  if (is_palindromic(h.at_class(0), degree(h.at_class(0)))) gamma = gamma_extract(table, h, degree(h.at_class(0)));
  const bool effective = gamma && gamma->is_effective();

  int status = kExitOk;
  if (job.oracle) {
    const auto wider = generic_equivariant_hstar(poly, group, (job.max_dilate ? *job.max_dilate : s + 8) + 4);
    bool agree = wider.coefficients().size() == h.coefficients().size();
    for (std::size_t c = 0; agree && c < group->class_count(); ++c) agree = wider.at_class(c) == h.at_class(c);
    if (!agree) err << "ORACLE MISMATCH h* changes with a wider dilate window\n";
    if (job.input.empty() && h.at_class(0) != one_plus_t_power(s)) {
      err << "ORACLE MISMATCH h* at e is not (1 + t)^" << s << '\n';
      agree = false;
    }
    if (!agree) status = kExitVerdict;
  }

  std::vector<std::string> coords;
  for (int i = 0; i < s; ++i) coords.push_back("x" + std::to_string(i + 1));
  if (job.json) {
    Json j{{"polytope", hrep_to_json(poly)},
           {"hstar", polynomial_to_json(h.at_class(0))},
           {"equivariant", char_polynomial_to_json(table, h)},
           {"class_values", class_values_json(h, coords)},
           {"irreducibles", table->names()},
           {"gamma", gamma ? multiplicities_to_json(gamma->coefficients) : Json()},
           {"effective", gamma ? Json(effective) : Json()}};
    if (job.oracle) j["oracle_agrees"] = status == kExitOk;
    out << j.dump(2) << '\n';
  } else {
    out << (job.input.empty() ? "cross-polytope of dimension " + std::to_string(s) : "polytope " + job.input)
        << " under a group of order " << group->order() << '\n'
        << "h*(t) = " << to_string(h.at_class(0)) << '\n'
        << "equivariant h*:\n";
    print_char_polynomial(out, table, h);
    out << "values on classes:\n";
    print_class_values(out, h, coords);
    if (gamma) {
      print_gamma(out, *gamma);
      out << "effective: " << (effective ? "yes" : "no") << '\n';
    } else {
      out << "h* is not palindromic; no gamma-polynomial\n";
    }
    if (job.oracle) out << "oracle: " << (status == kExitOk ? "wider window agrees" : "MISMATCH") << '\n';
  }
  if (status != kExitOk) return status;
  return job.assert_verdict && !effective ? kExitVerdict : kExitOk;
}

int cmd_demo_d4(Job job, std::ostream& out, std::ostream& err) {
  job.demo_d4 = true;
  const auto in = load(job);
  const auto report = effectiveness_report(in.lp, in.group, in.table);
  const auto orbits = saturation_orbits(in.lp, *in.group);
  std::size_t total = 0;
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) {
    sizes.push_back(o.members.size());
    total += o.members.size();
  }
  if (job.json) {
    Json j{{"poset", poset_to_json(in.lp, {d4_sigma(), d4_tau()})},
           {"table", character_table_to_json(in.table, in.lp.poset().names())},
           {"saturations", total},
           {"orbit_sizes", sizes},
           {"report", gamma_report_to_json(in.lp, report)}};
    out << j.dump(2) << '\n';
  } else {
    const auto& names = in.lp.poset().names();
    out << "poset:";
    for (const auto& [a, b] : in.lp.poset().covers()) out << ' ' << names[a] << '<' << names[b];
    out << '\n'
        << "group generated by sigma = " << d4_sigma().to_cycle_string(names)
        << " and tau = " << d4_tau().to_cycle_string(names) << ", order " << in.group->order() << '\n'
        << "character table on classes";
    for (std::size_t c = 0; c < in.group->class_count(); ++c)
      out << (c ? ", " : " ") << class_label(*in.group, c, names) << " [" << in.group->class_size(c) << ']';
    out << ":\n";
    for (std::size_t i = 0; i < in.table->size(); ++i) {
      out << "  " << in.table->name(i) << ':';
      for (const auto& v : in.table->irreducible(i).values()) out << ' ' << v.to_string();
      out << '\n';
    }
    out << total << " saturations in " << orbits.size() << " orbits (" << join(sizes) << ")\n";
    Job gamma_job = job;
    gamma_job.assert_verdict = false;
    gamma_job.oracle = false;
    cmd_gamma(gamma_job, out, err);
  }
  return report.agree && report.effective ? kExitOk : kExitVerdict;
}

int dispatch(const Job& job, std::ostream& out, std::ostream& err) {
  if (job.command == "validate") return cmd_validate(job, out);
  if (job.command == "hstar") return cmd_hstar(job, out, err);
  if (job.command == "gamma") return cmd_gamma(job, out, err);
  if (job.command == "saturations") return cmd_saturations(job, out);
  if (job.command == "verify") return cmd_verify(job, out, err);
  if (job.command == "crosspoly") return cmd_crosspoly(job, out, err);
  return cmd_demo_d4(job, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant h* and gamma polynomials of order polytopes of sign-graded posets", "eqgamma"};
  app.require_subcommand(1);
  Job job;
  int max_dilate = 0;
  app.add_flag("--json", job.json, "Emit JSON instead of text");
  auto* md = app.add_option("--max-dilate", max_dilate, "Dilate window for series truncation")->check(CLI::Range(1, 64));
  app.add_flag("--oracle", job.oracle, "Cross-check against brute-force enumeration");
  app.add_option("--group", job.group,
                 "Group: aut, trivial, file, or generators in cycle notation separated by ';'");
  app.add_flag("--demo-d4", job.demo_d4, "Use the built-in eight-element poset with its D4 action");
  app.add_flag("--assert", job.assert_verdict, "Exit 1 when the verdict is negative");

  struct Command {
    const char* name;
    const char* help;
    bool takes_input;
  };
  const Command commands[] = {
      {"validate", "Parse a poset and report its labeling class and symmetry", true},
      {"hstar", "Equivariant h*-polynomial of the order polytope", true},
      {"gamma", "Equivariant gamma-polynomial with the per-orbit ledger", true},
      {"saturations", "Saturation census of the parity labeling", true},
      {"verify", "Check every structural law on the input", true},
      {"crosspoly", "Equivariant h* and gamma of a cross-polytope or H-representation", true},
      {"demo-d4", "Full worked example on the built-in D4 poset", false},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help)->fallthrough();
    if (c.takes_input) sub->add_option("input", job.input, "Input JSON file");
    if (std::string(c.name) == "crosspoly")
      sub->add_option("--dim", job.dim, "Dimension of the built-in cross-polytope")->check(CLI::Range(1, 12));
    sub->callback([&job, sub] { job.command = sub->get_name(); });
  }

  std::vector<const char*> argv{"eqgamma"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (md->count()) job.max_dilate = max_dilate;

  try {
    return dispatch(job, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalError ? kExitVerdict : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace eqgamma
