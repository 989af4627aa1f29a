#include <doctest.h>

#include <map>
#include <sstream>

#include "capcalc/cli.hpp"

using namespace capcalc;
using capcalc::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::execute(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args, input);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

void scalar_leaves(const Json& j, std::vector<std::string>& out) {
  if (j.is_object() || j.is_array()) {
    for (const auto& x : j) scalar_leaves(x, out);
  } else if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else {
    out.push_back(j.dump());
  }
}

const std::map<std::string, std::vector<std::string>> kExampleParams{
    {"gay", {"3", "4"}},        {"lf", {"2", "3"}},           {"cy_example", {"3"}},
    {"ohta_ono", {"4"}},        {"cp2_triangle", {}},         {"fiber_section", {"2", "1"}},
    {"adjunction_pair", {"1", "3"}},
};

}  // namespace

TEST_CASE("spec pipeline: emit then analyze with areas") {
  const auto emitted = run({"example", "ohta_ono", "3", "--emit"});
  REQUIRE(emitted.code == 0);
  const Json r = run_json({"analyze", "--with-areas", "3,1,1,1"}, emitted.out);
  CHECK(r["chern"]["coefficients"] == Json::array({"2", "1", "1", "1"}));
  CHECK(r["classification"]["uniruled"] == "yes_with_certificate");
  CHECK(r["gs"]["z"] == Json::array({"25", "8", "12", "8"}));
}

TEST_CASE("cotangent report") {
  const Json r = run_json({"cotangent", "--genus", "2"});
  CHECK(r["exact_filling_profile"]["e"] == -2);
  CHECK(r["exact_filling_profile"]["sigma"] == 1);
  CHECK(r["exact_filling_profile"]["H1"] == "Z^4");
  CHECK(r["complement"]["second_name"] == "H");
  CHECK(run({"cotangent", "--genus", "1"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze"}, R"({"vertices": []})").code == 1);
  CHECK(run({"analyze"}, "not json").code == 1);
  CHECK(run({"analyze", "/nonexistent/graph.json"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"example", "nonesuch"}).code == 1);
  CHECK(run({"surfaces", "min-copies", "1", "0"}).code == 2);
  CHECK(run({"bounds", "--kodaira", "zero,pos"}).code == 2);
  CHECK(run({"lattice", "census", "4", "1"}).code == 2);

  // Infeasible GS with --require-feasible is a domain error.
  const auto tri = run({"example", "cp2_triangle", "--emit"});
  CHECK(run({"analyze", "--with-areas", "1,2,1", "--require-feasible"}, tri.out).code == 2);
  CHECK(run({"analyze", "--with-areas", "1,1,1", "--require-feasible"}, tri.out).code == 0);
  CHECK(run({"analyze", "--with-areas", "1,x,1"}, tri.out).code == 1);
}

TEST_CASE("every builtin round-trips through emit and analyze") {
  for (const auto& name : plumbing::builtin_names()) {
    REQUIRE(kExampleParams.count(name) == 1);
    std::vector<std::string> args{"example", name};
    const auto& params = kExampleParams.at(name);
    args.insert(args.end(), params.begin(), params.end());

    auto emit_args = args;
    emit_args.push_back("--emit");
    const auto emitted = run(emit_args);
    REQUIRE(emitted.code == 0);
    const auto reemitted = run({"analyze"}, emitted.out);
    const auto direct = run(args);
    CHECK(reemitted.code == 0);
    CHECK(reemitted.out == direct.out);
  }
}

TEST_CASE("reports are deterministic and text matches json") {
  const std::vector<std::vector<std::string>> commands{
      {"example", "ohta_ono", "6"},
      {"example", "adjunction_pair", "2", "5"},
      {"cotangent", "--genus", "3"},
      {"lattice", "census", "2", "1"},
      {"lattice", "complement", "H", "[1,0]"},
      {"lattice", "equiv", "[[2,1],[1,2]]", "[[2,-1],[-1,2]]"},
      {"bounds", "--e", "1", "--sigma", "0", "--b1", "4", "--g-max", "2", "--g-min", "0"},
      {"bounds", "--surface-genus", "2", "--surface-square", "2", "--cap-betti", "0,21,0"},
      {"surfaces", "riemann-hurwitz", "10", "2"},
      {"surfaces", "pair", "1", "0", "0", "-2", "1"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd), b = run(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    auto json_cmd = cmd;
    json_cmd.insert(json_cmd.begin(), {"--format", "json"});
    const auto j = run(json_cmd);
    REQUIRE(j.code == 0);
    CHECK(run(json_cmd).out == j.out);
    const Json doc = Json::parse(j.out);
    CHECK(Json::parse(doc.dump()) == doc);
    std::vector<std::string> leaves;
    scalar_leaves(doc, leaves);
    for (const auto& leaf : leaves) CHECK_MESSAGE(a.out.find(leaf) != std::string::npos, leaf);
  }
}

TEST_CASE("lattice subcommand") {
  const Json snf = run_json({"lattice", "snf", "[[4,0],[0,6]]"});
  CHECK(snf["invariant_factors"] == Json::array({2, 12}));
  const Json eq = run_json({"lattice", "equiv", "[[2,1],[1,2]]", "[[2,-1],[-1,2]]"});
  CHECK(eq["found"] == true);
  CHECK(eq["transform"] == Json::parse("[[1,0],[0,-1]]"));
  const Json cls = run_json({"lattice", "classify", "20", "-16", "even"});
  CHECK(cls["name"] == "2H ⊕ 2(-E8)");
  const Json serial = run_json({"lattice", "census", "2", "2", "--serial"});
  const Json parallel = run_json({"lattice", "census", "2", "2"});
  CHECK(serial["groups"] == parallel["groups"]);
  CHECK(run({"lattice", "snf", "[[1,2],[3"}).code == 1);
  CHECK(run({"lattice", "transmogrify", "H"}).code == 1);
}

TEST_CASE("bounds subcommand") {
  const Json flags = run_json({"bounds", "--e", "1", "--sigma", "0", "--b1", "4", "--g-max", "2", "--g-min", "0"});
  CHECK(flags["strong"]["e_plus_sigma_interval"] == Json::array({-5, 3}));
  CHECK(flags["stein"]["g_stein_max_upper"] == 2);

  const Json rec = run_json({"bounds", "--json", "-"},
                            R"({"e": 1, "sigma": 0, "b1": 4, "g_max": 2, "g_min": 0,
                                "surface": {"genus": 2, "square": 2}, "kodaira": ["neg", "pos"]})");
  CHECK(rec["strong"] == flags["strong"]);
  CHECK(rec["kodaira_dimension"] == "-infinity");
  CHECK(rec["calabi_yau_exact"]["closed_betti_max"][1] == 22);

  CHECK(run({"bounds"}).code == 1);
  CHECK(run({"bounds", "--json", "-"}, "{").code == 1);
  CHECK(run({"bounds", "--e", "1"}).code == 1);
}

TEST_CASE("surfaces subcommand") {
  CHECK(run_json({"surfaces", "min-copies", "3", "1"})["copies"] == 3);
  CHECK(run_json({"surfaces", "adjunction-genus", "4", "2"})["genus"] == 2);
  CHECK(run_json({"surfaces", "uniruled", "0", "0", "--nontrivial"})["certificate"] == true);
  CHECK(run_json({"surfaces", "ruled-square", "1", "1"})["square"] == 2);
  CHECK(run_json({"surfaces", "base-genus", "5", "3", "2"})["degree"] == 2);
  CHECK(run_json({"surfaces", "weiyi", "1", "3", "4"})["value"] == -1);
  CHECK(run({"surfaces", "copies", "1", "1"}).code == 1);
}

TEST_CASE("lefschetz subcommand") {
  const Json r = run_json({"lefschetz"}, R"({"g": 2, "k": 2, "exponents": [1, 2],
                                            "cycles": [[1,0,0,0],[0,1,0,0]]})");
  CHECK(r["cap_b1"] == 2);
  CHECK(r["stein_constant_e_plus_sigma"] == false);
  CHECK(r["lf_cap"]["e_plus_sigma"] == -1);
  CHECK(run({"lefschetz"}, R"({"g": 2, "k": 1, "exponents": [1], "cycles": [[1,0]]})").code == 1);
  CHECK(run({"lefschetz"}, R"({"g": 2})").code == 1);
}
