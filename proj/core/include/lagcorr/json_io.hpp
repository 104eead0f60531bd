#ifndef LAGCORR_JSON_IO_HPP
#define LAGCORR_JSON_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "lagcorr/cocycle.hpp"
#include "lagcorr/heisenberg.hpp"

// Forward declaration keeps nlohmann/json out of the public surface; the
// implementation serializes through strings.
namespace lag {

// Exact serialization: rationals as "p/q" (or "p"), quadratic elements as
// {a, b, omega}; integers as JSON numbers when they fit 64 bits, else as
// decimal strings.  No floats anywhere.
std::string rat_json_string(const Rat& r);

BaseRing parse_ring(const std::string& s);

// Named inputs for the CLI: a scenario file plus builtin element names
// ("I", "S", "f:<n>", "ft:<n>", "ga:<a>[,<b>]", "diag:<q>").
struct ScenarioTask {
  std::string op;  // compose, lambda, ncoeff, q, pi, ext-mul
  std::vector<std::string> args;
};

struct Scenario {
  BaseRing ring = BaseRing::integers();
  int genus = 1;
  std::map<std::string, SymplecticAuto> elements;
  std::map<std::string, ParamCorrespondence> correspondences;
  std::vector<ScenarioTask> tasks;
};

Scenario parse_scenario_file(const std::string& path);
Scenario default_scenario(BaseRing ring, int genus);

// Resolves a name against the scenario, falling back to builtins.
SymplecticAuto resolve_element(const Scenario& sc, const std::string& name);
ParamCorrespondence resolve_correspondence(const Scenario& sc, const std::string& name);

// Parses an inline JSON matrix (rows of "p/q" strings or {a,b} objects).
Mat parse_matrix_string(const std::string& text, BaseRing ring);

}  // namespace lag

#endif
