#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "cli.hpp"
#include "eqgamma/io.hpp"
#include "support.hpp"

using namespace eqgamma;

namespace {

const std::string kData = EQGAMMA_TEST_DATA;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("eqgamma_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

using Mult = std::vector<std::int64_t>;

const std::vector<Mult> kD4Gamma{{1, 0, 0, 0, 0}, {5, 1, 5, 5, 8}, {16, 16, 14, 14, 30}, {4, 4, 4, 4, 8}};

// Descent distribution over linear extensions of a naturally labeled poset,
// by filtering all permutations.
std::vector<std::int64_t> descent_distribution(int n, const std::vector<std::pair<int, int>>& less) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 0);
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n), 0);
  do {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[word[i]] = i;
    if (!std::all_of(less.begin(), less.end(), [&](auto pq) { return pos[pq.first] < pos[pq.second]; })) continue;
    int des = 0;
    for (int i = 0; i + 1 < n; ++i) des += word[i] > word[i + 1];
    ++dist[static_cast<std::size_t>(des)];
  } while (std::next_permutation(word.begin(), word.end()));
  while (dist.size() > 1 && dist.back() == 0) dist.pop_back();
  return dist;
}

}  // namespace

TEST_CASE("saturation census of the eight-element example") {
  const auto r = run({"saturations", kData + "/fig1.json"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("25 saturations in 5 orbits (1,8,4,4,8)\n", 0) == 0);

  const auto j = parse_json_text(run({"saturations", "--json", kData + "/fig1.json"}).out);
  CHECK(j["saturations"] == 25);
  std::vector<int> stabs;
  for (const auto& o : j["orbits"]) stabs.push_back(o["stabilizer_order"].get<int>());
  CHECK(stabs == std::vector<int>{8, 1, 2, 2, 1});
}

TEST_CASE("gamma report in JSON") {
  const auto demo = run({"gamma", "--demo-d4", "--json"});
  REQUIRE(demo.status == 0);
  const auto j = parse_json_text(demo.out);
  CHECK(j["gamma"].get<std::vector<Mult>>() == kD4Gamma);
  CHECK(j["effective"] == true);
  CHECK(j["verified_against_hstar"] == true);
  REQUIRE(j["orbits"].size() == 5);
  std::vector<int> shifts, sizes;
  for (const auto& o : j["orbits"]) {
    shifts.push_back(o["shift"].get<int>());
    sizes.push_back(o["orbit_size"].get<int>());
  }
  CHECK(shifts == std::vector<int>{0, 1, 1, 1, 2});
  CHECK(sizes == std::vector<int>{1, 8, 4, 4, 8});
  CHECK(j["orbits"][0]["blocks"] ==
        Json::parse(R"([["p1","p2","p3","p4"],["p5","p6","p7","p8"]])"));

  // The file carries the same poset and generators; only the irreducible
  // names and order may differ.
  const auto file = parse_json_text(run({"gamma", "--json", kData + "/fig1.json"}).out);
  CHECK(file["effective"] == true);
  CHECK(file["verified_against_hstar"] == true);
  auto sorted_columns = [](const Json& g) {
    std::vector<std::vector<std::int64_t>> cols;
    const auto rows = g.get<std::vector<Mult>>();
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
      std::vector<std::int64_t> col;
      for (const auto& r : rows) col.push_back(r[c]);
      cols.push_back(col);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  CHECK(sorted_columns(file["gamma"]) == sorted_columns(j["gamma"]));
}

TEST_CASE("h* of the example matches the descent count of its linear extensions") {
  const auto r = run({"hstar", "--json", "--oracle", kData + "/fig1.json"});
  REQUIRE(r.status == 0);
  const auto j = parse_json_text(r.out);
  // Elements p1..p8 are 0..7 with the minimal ones first.
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < 4; ++i) {
    less.emplace_back(i, i + 4);
    less.emplace_back(i, (i + 1) % 4 + 4);
  }
  CHECK(j["hstar"].get<std::vector<std::int64_t>>() == descent_distribution(8, less));
  CHECK(j["oracle_agrees"] == true);
  CHECK(j["class_values"][0]["representative"] == "e");
  CHECK(j["table"]["order"] == 8);

  const auto trivial = parse_json_text(run({"hstar", "--json", "--group", "trivial", kData + "/fig1.json"}).out);
  CHECK(trivial["class_values"].size() == 1);
  CHECK(trivial["hstar"] == j["hstar"]);
}

TEST_CASE("cross-polytope counterexample") {
  const auto r = run({"crosspoly"});
  CHECK(r.status == 0);
  CHECK(r.out.find("h*(t) = 1 + 3t + 3t^2 + t^3") != std::string::npos);
  CHECK(r.out.find("(not effective)") != std::string::npos);
  CHECK(r.out.find("effective: no") != std::string::npos);
  CHECK(run({"crosspoly", "--assert"}).status == 1);

  const auto j = parse_json_text(run({"crosspoly", "--json", "--oracle"}).out);
  CHECK(j["effective"] == false);
  CHECK(j["oracle_agrees"] == true);
  const auto names = j["irreducibles"].get<std::vector<std::string>>();
  const auto gamma1 = j["gamma"][1].get<Mult>();
  std::map<std::string, std::int64_t> by_name;
  for (std::size_t i = 0; i < names.size(); ++i) by_name[names[i]] = gamma1[i];
  CHECK(by_name == std::map<std::string, std::int64_t>{{"(3)", -2}, {"(2,1)", 1}, {"(1,1,1)", 0}});
}

TEST_CASE("H-representation input") {
  const auto path = temp_file("square.json", R"({"inequalities":[
      {"normal":[1,0],"offset":1},{"normal":[0,1],"offset":1},
      {"normal":[-1,0],"offset":0},{"normal":[0,-1],"offset":0}],
      "group":{"generators":[[1,0]]}})");
  const auto r = run({"crosspoly", "--json", path});
  REQUIRE(r.status == 0);
  const auto j = parse_json_text(r.out);
  CHECK(j["hstar"] == Json::parse("[1,1]"));
  CHECK(j["class_values"][1]["hstar"] == Json::parse("[1,1]"));
  CHECK(j["effective"] == true);

  const auto open = temp_file("open.json", R"({"inequalities":[{"normal":[1],"offset":1}]})");
  CHECK(run({"crosspoly", open}).status == 2);
}

TEST_CASE("verify reports every law") {
  const auto r = run({"verify", "--demo-d4", "--oracle"});
  CHECK(r.status == 0);
  for (const char* law : {"evaluation", "main-theorem", "parity-shift", "ordinal-sum", "palindromic",
                          "saturation-bijection", "gamma", "oracle-counts"})
    CHECK(r.out.find(std::string("PASS ") + law) != std::string::npos);

  const auto j = parse_json_text(run({"verify", "--json", kData + "/signed.json"}).out);
  CHECK(j["all_hold"] == true);
  bool skipped_gamma = false;
  for (const auto& law : j["laws"])
    if (law["name"] == "gamma") skipped_gamma = law["applicable"] == false;
  CHECK(skipped_gamma);
}

TEST_CASE("signed input and validation") {
  const auto r = run({"validate", "--json", kData + "/signed.json"});
  REQUIRE(r.status == 0);
  const auto j = parse_json_text(r.out);
  CHECK(j["negative_labels"] == 1);
  CHECK(j["consistency"] == "graded");

  const auto bad = temp_file("inconsistent.json", R"({"elements":["a","b","c","d"],
      "covers":[["a","b"],["b","d"],["a","c"],["c","d"]],
      "labels":[{"cover":["a","b"],"sign":-1}]})");
  CHECK(run({"validate", bad}).status == 0);
  CHECK(run({"validate", "--assert", bad}).status == 1);
  CHECK(run({"hstar", bad}).status == 2);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run({"hstar", temp_file("malformed.json", "{\"elements\": [")}).status == 2);
  const auto unknown = run({"hstar", temp_file("unknown.json", R"({"elements":["a"],"covers":[["a","b"]]})")});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("ParseError") != std::string::npos);
  CHECK(run({"hstar", "/nonexistent/poset.json"}).status == 2);
  CHECK(run({"hstar"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"hstar", "--max-dilate", "0", "--demo-d4"}).status == 2);
  CHECK(run({"gamma", kData + "/fig1.json", "--group", "(p1 p3)(p5 p6)"}).status == 2);
  CHECK(run({"gamma", kData + "/fig1.json", "--group", "(p1 p9)"}).status == 2);
  CHECK(run({"gamma", kData + "/signed.json"}).status == 2);
}

TEST_CASE("group selector") {
  const auto sub = run({"saturations", kData + "/fig1.json", "--group", "(p2 p4)(p5 p6)(p7 p8)"});
  CHECK(sub.status == 0);
  CHECK(sub.out.rfind("25 saturations in ", 0) == 0);
  const auto j = parse_json_text(run({"validate", "--json", kData + "/fig1.json", "--group",
                                      "(p1 p2 p3 p4)(p5 p6 p7 p8)"})
                                     .out);
  CHECK(j["group_order"] == 4);
  CHECK(j["automorphism_group_order"] == 8);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"demo-d4"}, {"gamma", "--json", kData + "/fig1.json"}, {"crosspoly", "--json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("poset JSON round trip and parse errors") {
  const auto in = poset_from_json(read_json_file(kData + "/signed.json"));
  const auto again = poset_from_json(poset_to_json(in.poset));
  CHECK(again.poset.poset().names() == in.poset.poset().names());
  CHECK(again.poset.poset().covers() == in.poset.poset().covers());
  CHECK(again.poset.labeling().signs == in.poset.labeling().signs);

  auto code = [](const char* text) { return error_of([&] { poset_from_json(parse_json_text(text)); }); };
  CHECK(code(R"({"covers":[]})") == ErrorCode::ParseError);
  CHECK(code(R"({"elements":["a","b"],"covers":[["a"]]})") == ErrorCode::ParseError);
  CHECK(code(R"({"elements":["a","b"],"covers":[["a","b"]],"labels":[{"cover":["a","b"],"sign":2}]})") ==
        ErrorCode::InvalidLabeling);
  CHECK(code(R"({"elements":["a","b"],"covers":[],"labels":[{"cover":["a","b"],"sign":1}]})") ==
        ErrorCode::ParseError);
  CHECK(code(R"({"elements":["a","b"],"covers":[],"group":{"generators":[{"a":"b"}]}})") ==
        ErrorCode::ParseError);
  CHECK(code(R"({"elements":["a","a"],"covers":[]})") == ErrorCode::DuplicateElement);
  CHECK(code(R"({"elements":[],"covers":[]})") == ErrorCode::EmptyPoset);
  std::string big = R"({"elements":[)";
  for (int i = 0; i < 30; ++i) big += (i ? "," : "") + std::string("\"x") + std::to_string(i) + "\"";
  CHECK(code((big + "]}").c_str()) == ErrorCode::GuardExceeded);

  const auto poset = in.poset.poset();
  const auto g = permutation_from_cycles(poset, "(b c)");
  CHECK(permutation_to_json(poset, g) == Json::parse(R"({"b":"c","c":"b"})"));
  CHECK(error_of([&] { permutation_from_cycles(poset, "(b b)"); }) == ErrorCode::ParseError);
  CHECK(error_of([&] { permutation_from_cycles(poset, "b c"); }) == ErrorCode::ParseError);
}

TEST_CASE("H-representation JSON round trip") {
  const auto j = Json::parse(R"({"dimension":2,"inequalities":[{"normal":[1,1],"offset":1,"strict":true}]})");
  CHECK(hrep_to_json(hrep_from_json(j)) == j);
  CHECK(error_of([] { hrep_from_json(Json::parse(R"({"inequalities":[{"normal":[1]}]})")); }) ==
        ErrorCode::ParseError);
  CHECK(error_of([] { hrep_from_json(Json::parse(R"({"dimension":2,"inequalities":[{"normal":[1],"offset":0}]})")); }) ==
        ErrorCode::ParseError);
}
