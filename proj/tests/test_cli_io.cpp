#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <unistd.h>

#include "lagcorr/json_io.hpp"

using namespace lag;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/lagcorr-test-XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ring parsing") {
  CHECK(parse_ring("Z").D == 0);
  CHECK(parse_ring("-1").D == -1);
  CHECK(parse_ring("D=-7").D == -7);
  CHECK_THROWS_AS(parse_ring("-5"), ValidationError);
  CHECK_THROWS_AS(parse_ring("xyz"), ValidationError);
}

TEST_CASE("builtin element names") {
  Scenario sc = default_scenario(BaseRing::integers(), 1);
  CHECK(resolve_element(sc, "I").mat == Mat::identity(BaseRing::integers(), 2));
  CHECK(resolve_element(sc, "S") == fourier_s(SymplecticSpace{1, BaseRing::integers()}));
  CHECK(resolve_element(sc, "f:3").block_b().at(0, 0).a() == 3);
  CHECK(resolve_element(sc, "ft:2").block_c().at(0, 0).a() == 2);
  CHECK(resolve_element(sc, "f:1/2").block_b().at(0, 0).a() == rat(1, 2));
  CHECK_THROWS_AS(resolve_element(sc, "nope"), ValidationError);

  Scenario cm = default_scenario(BaseRing::quadratic(-1), 1);
  SymplecticAuto ga = resolve_element(cm, "ga:1,1");
  CHECK(ga == cm_diag_auto(BaseRing::quadratic(-1), QuadElem(BaseRing::quadratic(-1), 1, 1)));
  CHECK(q_degree(resolve_correspondence(cm, "Lga:1,1")) == 2);
}

TEST_CASE("scenario file round trip") {
  TempFile f(R"({
    "ring": "Z",
    "genus": 1,
    "elements": {
      "T": [["1", "1"], ["0", "1"]],
      "W": [["1", "1"], ["1", "2"]]
    },
    "correspondences": {
      "LT": {"graph": "T"}
    }
  })");
  Scenario sc = parse_scenario_file(f.path);
  CHECK(sc.ring.D == 0);
  CHECK(sc.elements.count("T") == 1);
  CHECK(check_symplectic(sc.elements.at("T")));
  CHECK(is_lagrangian(sc.correspondences.at("LT")));
  CHECK(project_pi(resolve_correspondence(sc, "LT")) == resolve_element(sc, "T"));
}

TEST_CASE("scenario task lists") {
  TempFile f(R"({
    "ring": "Z",
    "genus": 1,
    "tasks": [
      {"op": "lambda", "args": ["S", "S"]},
      {"op": "compose", "args": ["graph:S", "graph:S"]}
    ]
  })");
  Scenario sc = parse_scenario_file(f.path);
  REQUIRE(sc.tasks.size() == 2);
  CHECK(sc.tasks[0].op == "lambda");
  CHECK(sc.tasks[1].args == std::vector<std::string>{"graph:S", "graph:S"});
}

TEST_CASE("scenario files with CM entries") {
  TempFile f(R"({
    "ring": -1,
    "genus": 1,
    "correspondences": {
      "Ga": {"cm_diag": {"a": "1", "b": "1"}}
    }
  })");
  Scenario sc = parse_scenario_file(f.path);
  CHECK(q_degree(sc.correspondences.at("Ga")) == 2);
}

TEST_CASE("invalid scenarios are rejected with machine-readable codes") {
  TempFile bad_json("{ not json");
  try {
    parse_scenario_file(bad_json.path);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == "BadScenario");
  }
  TempFile bad_elem(R"({"ring": "Z", "genus": 1,
                        "elements": {"X": [["2", "0"], ["0", "1"]]}})");
  CHECK_THROWS_AS(parse_scenario_file(bad_elem.path), ValidationError);
}

TEST_CASE("inline matrix parsing") {
  Mat h = parse_matrix_string(R"([["1","0"],["0","-1"]])", BaseRing::integers());
  CHECK(h.rows() == 2);
  CHECK(h.at(1, 1).a() == -1);
  CHECK_THROWS_AS(parse_matrix_string("nonsense", BaseRing::integers()), ValidationError);
}

TEST_CASE("exact rational serialization") {
  CHECK(rat_json_string(rat(-7, 3)) == "-7/3");
  CHECK(rat_json_string(Rat(42)) == "42");
}
