#include "lagcorr/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace lag {

using nlohmann::json;

std::string rat_json_string(const Rat& r) { return r.get_str(); }

BaseRing parse_ring(const std::string& s) {
  if (s == "Z" || s == "z") return BaseRing::integers();
  std::string t = s;
  if (t.rfind("D=", 0) == 0) t = t.substr(2);
  try {
    return BaseRing::quadratic(std::stoi(t));
  } catch (const std::exception&) {
    throw ValidationError("BadRing", "cannot parse ring '" + s + "'");
  }
}

namespace {

QuadElem parse_entry(const json& v, BaseRing ring) {
  if (v.is_string()) return QuadElem(ring, rat_parse(v.get<std::string>()), 0);
  if (v.is_number_integer()) return QuadElem(ring, Rat(v.get<long>()), 0);
  if (v.is_object()) {
    Rat a = 0, b = 0;
    if (v.contains("a")) a = rat_parse(v.at("a").is_string() ? v.at("a").get<std::string>()
                                                             : std::to_string(v.at("a").get<long>()));
    if (v.contains("b")) b = rat_parse(v.at("b").is_string() ? v.at("b").get<std::string>()
                                                             : std::to_string(v.at("b").get<long>()));
    return QuadElem(ring, a, b);
  }
  throw ValidationError("BadScenario", "matrix entry must be a string, integer or {a,b} object");
}

Mat parse_matrix(const json& rows, BaseRing ring) {
  LAG_CHECK(rows.is_array() && !rows.empty(), "BadScenario", "matrix must be a nonempty array");
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.at(0).size());
  Mat m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    LAG_CHECK(static_cast<int>(rows.at(i).size()) == c, "BadScenario", "ragged matrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = parse_entry(rows.at(i).at(j), ring);
  }
  return m;
}

}  // namespace

Scenario default_scenario(BaseRing ring, int genus) {
  Scenario sc;
  sc.ring = ring;
  sc.genus = genus;
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  LAG_CHECK(in.good(), "BadScenario", "cannot open scenario file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("BadScenario", std::string("JSON parse error: ") + e.what());
  }
  Scenario sc;
  if (doc.contains("ring")) {
    const json& r = doc.at("ring");
    sc.ring = r.is_number_integer() ? BaseRing::quadratic(r.get<int>())
                                    : parse_ring(r.get<std::string>());
  }
  if (doc.contains("genus")) sc.genus = doc.at("genus").get<int>();
  SymplecticSpace space{sc.genus, sc.ring};
  if (doc.contains("elements")) {
    for (auto& [name, rows] : doc.at("elements").items()) {
      sc.elements.emplace(name, make_symplectic(space, parse_matrix(rows, sc.ring)));
    }
  }
  if (doc.contains("tasks")) {
    for (const json& t : doc.at("tasks")) {
      ScenarioTask task;
      task.op = t.at("op").get<std::string>();
      if (t.contains("args"))
        for (const json& a : t.at("args")) task.args.push_back(a.get<std::string>());
      sc.tasks.push_back(std::move(task));
    }
  }
  if (doc.contains("correspondences")) {
    for (auto& [name, body] : doc.at("correspondences").items()) {
      if (body.is_object() && body.contains("graph")) {
        std::string ref = body.at("graph").get<std::string>();
        sc.correspondences.emplace(name, graph(resolve_element(sc, ref)));
      } else if (body.is_object() && body.contains("cm_diag")) {
        QuadElem a = parse_entry(body.at("cm_diag"), sc.ring);
        sc.correspondences.emplace(name, cm_diag_model(sc.ring, a));
      } else if (body.is_object() && body.contains("matrix")) {
        Mat j = parse_matrix(body.at("matrix"), sc.ring);
        sc.correspondences.emplace(name, make_correspondence(space, space, std::move(j)));
      } else {
        throw ValidationError("BadScenario",
                              "correspondence '" + name + "' needs graph, cm_diag or matrix");
      }
      LAG_CHECK(is_lagrangian(sc.correspondences.at(name)), "BadScenario",
                "correspondence '" + name + "' is not Lagrangian");
    }
  }
  return sc;
}

namespace {

bool parse_builtin(const Scenario& sc, const std::string& name, SymplecticAuto* out) {
  SymplecticSpace space{sc.genus, sc.ring};
  if (name == "I" || name == "id") {
    *out = symplectic_identity(space);
    return true;
  }
  if (name == "S") {
    *out = fourier_s(space);
    return true;
  }
  if (name.rfind("f:", 0) == 0) {
    *out = shear(space, rat_parse(name.substr(2)));
    return true;
  }
  if (name.rfind("ft:", 0) == 0) {
    *out = shear_transposed(space, rat_parse(name.substr(3)));
    return true;
  }
  if (name.rfind("diag:", 0) == 0) {
    Rat q = rat_parse(name.substr(5));
    LAG_CHECK(q != 0, "BadInput", "diag:<q> needs q nonzero");
    Mat m(sc.ring, 2 * sc.genus, 2 * sc.genus);
    for (int i = 0; i < sc.genus; ++i) {
      m.at(i, i) = QuadElem(sc.ring, q, 0);
      m.at(sc.genus + i, sc.genus + i) = QuadElem(sc.ring, 1 / q, 0);
    }
    *out = make_symplectic(space, std::move(m));
    return true;
  }
  if (name.rfind("ga:", 0) == 0) {
    std::string body = name.substr(3);
    size_t comma = body.find(',');
    Rat a = rat_parse(comma == std::string::npos ? body : body.substr(0, comma));
    Rat b = comma == std::string::npos ? Rat(0) : rat_parse(body.substr(comma + 1));
    LAG_CHECK(sc.genus == 1, "BadInput", "ga:<a,b> is a genus-1 element");
    *out = cm_diag_auto(sc.ring, QuadElem(sc.ring, a, b));
    return true;
  }
  return false;
}

}  // namespace

Mat parse_matrix_string(const std::string& text, BaseRing ring) {
  json rows;
  try {
    rows = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError("BadInput", std::string("cannot parse matrix JSON: ") + e.what());
  }
  return parse_matrix(rows, ring);
}

SymplecticAuto resolve_element(const Scenario& sc, const std::string& name) {
  auto it = sc.elements.find(name);
  if (it != sc.elements.end()) return it->second;
  SymplecticAuto out = symplectic_identity(SymplecticSpace{sc.genus, sc.ring});
  if (parse_builtin(sc, name, &out)) return out;
  throw ValidationError("UnknownElement", "no element named '" + name + "'");
}

ParamCorrespondence resolve_correspondence(const Scenario& sc, const std::string& name) {
  auto it = sc.correspondences.find(name);
  if (it != sc.correspondences.end()) return it->second;
  // Builtins: the graph of any resolvable element, or the diagonal model.
  if (name.rfind("graph:", 0) == 0) return graph(resolve_element(sc, name.substr(6)));
  if (name.rfind("Lga:", 0) == 0) {
    std::string body = name.substr(4);
    size_t comma = body.find(',');
    Rat a = rat_parse(comma == std::string::npos ? body : body.substr(0, comma));
    Rat b = comma == std::string::npos ? Rat(0) : rat_parse(body.substr(comma + 1));
    return cm_diag_model(sc.ring, QuadElem(sc.ring, a, b));
  }
  SymplecticAuto g = symplectic_identity(SymplecticSpace{sc.genus, sc.ring});
  if (parse_builtin(sc, name, &g)) return graph(g);
  throw ValidationError("UnknownElement", "no correspondence named '" + name + "'");
}

}  // namespace lag
