// Command-line front end: composition of Lagrangian correspondences, the
// shift and multiplicity cocycles, indices of symmetric isogenies, finite
// Heisenberg representation data, and the seeded verification suites.
// Output is JSON (default) or CSV; every number is exact.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagcorr/json_io.hpp"
#include "lagcorr/verify.hpp"

using nlohmann::json;

namespace {

json int_json(const lag::Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json rat_json(const lag::Rat& v) {
  if (lag::is_integer(v)) return int_json(lag::num(v));
  return json(lag::rat_json_string(v));
}

json quad_json(const lag::QuadElem& x) {
  if (!x.ring().is_cm()) return rat_json(x.a());
  json j;
  j["a"] = lag::rat_json_string(x.a());
  j["b"] = lag::rat_json_string(x.b());
  j["omega"] = x.ring().half_omega() ? "(1+sqrt(D))/2" : "sqrt(D)";
  j["D"] = x.ring().D;
  return j;
}

json mat_json(const lag::Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(quad_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& doc, const std::string& format) {
  if (format == "csv") {
    // Flat key,value lines; nested values inline as compact JSON.
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      std::cout << it.key() << ",";
      if (it.value().is_string())
        std::cout << it.value().get<std::string>();
      else
        std::cout << it.value().dump();
      std::cout << "\n";
    }
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

struct CommonOptions {
  std::string ring = "Z";
  int genus = 1;
  std::string input;
  std::string format = "json";
  std::uint64_t seed = 0;
  int samples = 100;
  int shear_bound = 64;
  long brute_bound = 1 << 12;

  lag::Scenario scenario() const {
    if (!input.empty()) return lag::parse_scenario_file(input);
    return lag::default_scenario(lag::parse_ring(ring), genus);
  }
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--ring", opt.ring, "Base ring: Z or D in {-1,-2,-3,-7,-11}");
  cmd->add_option("--genus", opt.genus, "Genus g of X = E^{2g}");
  cmd->add_option("--input", opt.input, "Scenario JSON file");
  cmd->add_option("--format", opt.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", opt.seed, "Seed for randomized suites");
  cmd->add_option("--samples", opt.samples, "Sample count for randomized suites");
  cmd->add_option("--shear-bound", opt.shear_bound, "Search bound for the shear extension");
  cmd->add_option("--brute-bound", opt.brute_bound, "Order bound for brute-force enumeration");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with Lagrangian correspondences between powers of an elliptic curve"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::vector<std::string> names;

  auto* compose_cmd = app.add_subcommand("compose", "Compose two correspondences: emits pi, q, pi0, d, N_Z");
  compose_cmd->add_option("L", names, "Names of L and M")->expected(2);
  add_common(compose_cmd, opt);

  auto* lambda_cmd = app.add_subcommand("lambda", "Shift cocycle lambda(g1, g2)");
  lambda_cmd->add_option("g", names, "Names of g1 and g2")->expected(2);
  add_common(lambda_cmd, opt);

  auto* table_cmd = app.add_subcommand("lambda-table", "Table of lambda over a list of elements");
  table_cmd->add_option("set", names, "Element names")->expected(-1);
  add_common(table_cmd, opt);

  auto* ncoeff_cmd = app.add_subcommand("ncoeff", "Multiplicity cocycle N(g1, g2)");
  ncoeff_cmd->add_option("g", names, "Names of g1 and g2")->expected(2);
  add_common(ncoeff_cmd, opt);

  auto* index_cmd = app.add_subcommand("index", "Index of a symmetric isogeny given by a Hermitian matrix");
  std::string index_matrix;
  index_cmd->add_option("H", index_matrix, "Inline JSON rows, e.g. '[[\"1\",\"0\"],[\"0\",\"-1\"]]'");
  add_common(index_cmd, opt);

  auto* ext_cmd = app.add_subcommand("ext-mul", "Product of a chain in the central extension");
  ext_cmd->add_option("chain", names, "Element names, multiplied left to right")->expected(-1);
  add_common(ext_cmd, opt);

  auto* heis_cmd = app.add_subcommand("heisenberg", "Finite Heisenberg computations");
  std::string heis_what = "schrodinger";
  std::vector<long> heis_factors;
  heis_cmd->add_option("what", heis_what, "schrodinger, multiplicities or homspace")
      ->check(CLI::IsMember({"schrodinger", "multiplicities", "homspace"}));
  heis_cmd->add_option("--split", heis_factors, "Invariant factors of H for K = H x H^*");
  long heis_degree = 3;
  heis_cmd->add_option("--degree", heis_degree, "Polarization degree for homspace");
  add_common(heis_cmd, opt);

  auto* obstruction_cmd = app.add_subcommand("obstruction", "CM mod-squares obstruction witness");
  int obstruction_d = -2;
  obstruction_cmd->add_option("D", obstruction_d, "Discriminant in {-2, -7, -11}");
  add_common(obstruction_cmd, opt);

  auto* run_cmd = app.add_subcommand("run", "Execute the task list of a scenario file");
  add_common(run_cmd, opt);

  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite with a seed");
  std::string suite;
  verify_cmd->add_option("suite", suite, "Suite name or 'all'");
  add_common(verify_cmd, opt);

  auto* accept_cmd = app.add_subcommand("acceptance", "Run the full acceptance checklist");
  add_common(accept_cmd, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    json doc;
    if (compose_cmd->parsed()) {
      lag::Scenario sc = opt.scenario();
      lag::ParamCorrespondence l = lag::resolve_correspondence(sc, names.at(0));
      lag::ParamCorrespondence m = lag::resolve_correspondence(sc, names.at(1));
      lag::ComposedCorrespondence z = lag::compose(l, m);
      doc["pi0"] = int_json(z.pi0_order);
      doc["d"] = int_json(z.d_image_degree);
      doc["q"] = int_json(z.q_total);
      doc["N_Z"] = int_json(z.n_z());
      doc["N"] = int_json(z.n_multiplier());
      doc["identity_component"] = mat_json(z.identity_component.j);
      try {
        doc["pi"] = mat_json(lag::project_pi(z.identity_component).mat);
      } catch (const lag::ValidationError&) {
        doc["pi"] = nullptr;  // degenerate projection
      }
    } else if (lambda_cmd->parsed()) {
      lag::Scenario sc = opt.scenario();
      lag::SymplecticAuto g1 = lag::resolve_element(sc, names.at(0));
      lag::SymplecticAuto g2 = lag::resolve_element(sc, names.at(1));
      doc["lambda"] = lag::lambda(g1, g2, opt.shear_bound);
    } else if (table_cmd->parsed()) {
      lag::Scenario sc = opt.scenario();
      json rows = json::array();
      for (const auto& n1 : names)
        for (const auto& n2 : names) {
          json row;
          row["g1"] = n1;
          row["g2"] = n2;
          row["lambda"] = lag::lambda(lag::resolve_element(sc, n1), lag::resolve_element(sc, n2),
                                      opt.shear_bound);
          rows.push_back(row);
        }
      doc["table"] = rows;
    } else if (ncoeff_cmd->parsed()) {
      lag::Scenario sc = opt.scenario();
      doc["N"] = int_json(
          lag::n_coeff(lag::resolve_element(sc, names.at(0)), lag::resolve_element(sc, names.at(1))));
    } else if (index_cmd->parsed()) {
      lag::Mat m = lag::parse_matrix_string(index_matrix, lag::parse_ring(opt.ring));
      doc["index"] = lag::index_symmetric(m);
    } else if (ext_cmd->parsed()) {
      lag::Scenario sc = opt.scenario();
      LAG_CHECK(!names.empty(), "BadInput", "ext-mul needs at least one element");
      lag::ExtElement acc = lag::ext_of(lag::resolve_element(sc, names.front()));
      for (size_t i = 1; i < names.size(); ++i)
        acc = lag::ext_mul(acc, lag::ext_of(lag::resolve_element(sc, names[i])));
      doc["g"] = mat_json(acc.g.mat);
      doc["multiplier"] = rat_json(acc.multiplier);
      doc["shift"] = acc.shift;
    } else if (heis_cmd->parsed()) {
      if (heis_what == "schrodinger") {
        if (heis_factors.empty()) heis_factors = {2};
        lag::HeisenbergData h = lag::standard_split_heisenberg(heis_factors);
        lag::Subgroup iso = lag::maximal_isotropic(h.pairing, opt.brute_bound * 16);
        lag::MonomialRep rep = lag::schrodinger(h, iso);
        doc["dimension"] = rep.dim;
        doc["group_order"] = int_json(h.pairing.group.order());
        doc["irreducible_weight1"] = lag::is_irreducible_weight1(rep, h);
      } else if (heis_what == "multiplicities") {
        if (heis_factors.empty()) heis_factors = {2, 2};
        lag::HeisenbergData h = lag::standard_split_heisenberg(heis_factors);
        json rows = json::array();
        for (const lag::Subgroup& c : lag::all_subgroups(h.pairing.group)) {
          if (!lag::is_isotropic(h.pairing, c)) continue;
          lag::MultiplicityReport rep = lag::restrict_multiplicities(h, c, true);
          json row;
          row["order_C"] = c.size();
          row["dim_V"] = int_json(rep.dim_v);
          row["dim_Vbar"] = int_json(rep.dim_vbar);
          json mults = json::array();
          for (const lag::Int& m : rep.multiplicities) mults.push_back(int_json(m));
          row["multiplicities"] = mults;
          rows.push_back(row);
        }
        doc["isotropic_subgroups"] = rows;
      } else {
        lag::BaseRing ring = lag::parse_ring(opt.ring);
        LAG_CHECK(!ring.is_cm(), "BadInput", "homspace demo runs over ring Z");
        lag::SymplecticSpace x{opt.genus, ring};
        lag::Mat phi(ring, opt.genus, opt.genus);
        for (int i = 0; i < opt.genus; ++i) phi.at(i, i) = lag::QuadElem(ring, lag::Rat(heis_degree), 0);
        lag::HomSpace hs =
            lag::hom_space(lag::lagrangian_a_side(x), lag::lagrangian_graph_of_polarization(x, phi));
        doc["degree"] = hs.degree;
        doc["dimension"] = int_json(hs.dimension);
      }
    } else if (obstruction_cmd->parsed()) {
      lag::BaseRing ring = lag::BaseRing::quadratic(obstruction_d);
      lag::QuadElem sd = lag::QuadElem::sqrt_d(ring);
      lag::SymplecticAuto g = lag::cm_diag_auto(ring, sd);
      lag::SquareClass qb = lag::q_bar(lag::cm_diag_model(ring, sd));
      lag::QuadElem phi = lag::phi_det(g);
      lag::Rat nm = phi.norm();
      doc["D"] = obstruction_d;
      doc["qbar"] = int_json(qb.rep);
      doc["phi"] = quad_json(phi);
      doc["nm_phi_squarefree"] = int_json(lag::squarefree_part(lag::num(nm) * lag::den(nm)).rep);
      doc["qbar_of_square"] = int_json(lag::q_bar(g * g).rep);
      doc["nontrivial"] = qb.rep != 1;
    } else if (run_cmd->parsed()) {
      lag::Scenario sc = opt.scenario();
      LAG_CHECK(!sc.tasks.empty(), "BadScenario", "scenario has no task list");
      json results = json::array();
      for (const lag::ScenarioTask& t : sc.tasks) {
        json row;
        row["op"] = t.op;
        row["args"] = t.args;
        if (t.op == "lambda") {
          row["lambda"] = lag::lambda(lag::resolve_element(sc, t.args.at(0)),
                                      lag::resolve_element(sc, t.args.at(1)), opt.shear_bound);
        } else if (t.op == "ncoeff") {
          row["N"] = int_json(lag::n_coeff(lag::resolve_element(sc, t.args.at(0)),
                                           lag::resolve_element(sc, t.args.at(1))));
        } else if (t.op == "compose") {
          lag::ComposedCorrespondence z =
              lag::compose(lag::resolve_correspondence(sc, t.args.at(0)),
                           lag::resolve_correspondence(sc, t.args.at(1)));
          row["pi0"] = int_json(z.pi0_order);
          row["d"] = int_json(z.d_image_degree);
          row["q"] = int_json(z.q_total);
          row["N_Z"] = int_json(z.n_z());
        } else if (t.op == "q") {
          row["q"] = int_json(lag::q_degree(lag::resolve_correspondence(sc, t.args.at(0))));
        } else if (t.op == "pi") {
          row["pi"] = mat_json(
              lag::project_pi(lag::resolve_correspondence(sc, t.args.at(0))).mat);
        } else if (t.op == "ext-mul") {
          LAG_CHECK(!t.args.empty(), "BadScenario", "ext-mul task needs elements");
          lag::ExtElement acc = lag::ext_of(lag::resolve_element(sc, t.args.front()));
          for (size_t i = 1; i < t.args.size(); ++i)
            acc = lag::ext_mul(acc, lag::ext_of(lag::resolve_element(sc, t.args[i])));
          row["multiplier"] = rat_json(acc.multiplier);
          row["shift"] = acc.shift;
        } else {
          throw lag::ValidationError("BadScenario", "unknown task op '" + t.op + "'");
        }
        results.push_back(std::move(row));
      }
      doc["results"] = results;
    } else if (verify_cmd->parsed()) {
      lag::VerifyOptions vopt{opt.seed, opt.samples, opt.shear_bound, opt.brute_bound};
      std::vector<std::string> to_run =
          suite.empty() || suite == "all" ? lag::suite_names() : std::vector<std::string>{suite};
      json rows = json::array();
      bool all_pass = true;
      for (const std::string& s : to_run) {
        lag::SuiteResult r = lag::run_suite(s, vopt);
        json row;
        row["suite"] = r.name;
        row["checks"] = r.checks;
        row["failures"] = r.failures;
        row["pass"] = r.pass();
        if (!r.notes.empty()) row["notes"] = r.notes;
        rows.push_back(row);
        all_pass = all_pass && r.pass();
      }
      doc["seed"] = opt.seed;
      doc["suites"] = rows;
      doc["pass"] = all_pass;
      emit(doc, opt.format);
      return all_pass ? 0 : 2;
    } else if (accept_cmd->parsed()) {
      json rows = json::array();
      bool all_pass = true;
      for (const lag::CriterionResult& c : lag::run_acceptance(opt.seed)) {
        json row;
        row["id"] = c.id;
        row["name"] = c.name;
        row["pass"] = c.pass;
        if (!c.detail.empty()) row["detail"] = c.detail;
        rows.push_back(row);
        all_pass = all_pass && c.pass;
      }
      doc["criteria"] = rows;
      doc["pass"] = all_pass;
      emit(doc, opt.format);
      return all_pass ? 0 : 2;
    }
    emit(doc, opt.format);
    return 0;
  } catch (const lag::InvariantViolation& e) {
    json err;
    err["error"] = "invariant-violation";
    err["code"] = e.code();
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const lag::ValidationError& e) {
    json err;
    err["error"] = "validation";
    err["code"] = e.code();
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err;
    err["error"] = "validation";
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
