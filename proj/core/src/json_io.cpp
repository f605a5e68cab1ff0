#include "rotaplex/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rotaplex {

using nlohmann::json;

namespace {

json vec_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

RationalVector vec_from(const json& a) {
  RationalVector v;
  for (const auto& x : a) {
    if (x.is_string())
      v.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer())
      v.push_back(Rational(x.get<long>()));
    else
      throw std::invalid_argument("rational entries must be strings or integers");
  }
  return v;
}

json list_json(const std::vector<RationalVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

std::vector<RationalVector> list_from(const json& a, std::size_t dim) {
  std::vector<RationalVector> out;
  for (const auto& v : a) {
    out.push_back(vec_from(v));
    if (out.back().size() != dim) throw DimensionError("JSON vector has wrong dimension");
  }
  return out;
}

}  // namespace

std::string polyhedron_to_json(const Polyhedron& p, int indent) {
  json j;
  j["name"] = p.name();
  j["ambient_dim"] = p.ambient_dim();
  if (p.has_hrep()) {
    std::vector<LinearConstraint> rows;
    for (const auto& r : p.hrep()) rows.push_back(canonical(r));
    std::sort(rows.begin(), rows.end(), constraint_less);
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"a", vec_json(r.a)}, {"b", to_string(r.b)}, {"rel", to_string(r.rel)}});
    j["hrep"] = {{"rows", arr}};
  }
  if (p.has_vrep()) {
    VRep v = canonical_vrep(p.ambient_dim(), p.vrep());
    j["vrep"] = {{"vertices", list_json(v.vertices)}, {"rays", list_json(v.rays)}};
    if (!v.lineality.empty()) j["vrep"]["lineality"] = list_json(v.lineality);
  }
  return j.dump(indent);
}

Polyhedron polyhedron_from_json(const std::string& text) {
  json j = json::parse(text);
  const std::size_t d = j.at("ambient_dim").get<std::size_t>();
  std::string name = j.value("name", std::string());
  bool has_h = j.contains("hrep");
  bool has_v = j.contains("vrep");
  if (!has_h && !has_v) throw std::invalid_argument("polyhedron JSON needs hrep or vrep");
  std::vector<LinearConstraint> rows;
  if (has_h) {
    for (const auto& r : j["hrep"].at("rows")) {
      LinearConstraint c;
      c.a = vec_from(r.at("a"));
      if (c.a.size() != d) throw DimensionError("row dimension");
      c.b = r.at("b").is_string() ? parse_rational(r["b"].get<std::string>())
                                  : Rational(r["b"].get<long>());
      c.rel = parse_rel(r.at("rel").get<std::string>());
      rows.push_back(std::move(c));
    }
  }
  VRep v;
  if (has_v) {
    v.vertices = list_from(j["vrep"].value("vertices", json::array()), d);
    v.rays = list_from(j["vrep"].value("rays", json::array()), d);
    v.lineality = list_from(j["vrep"].value("lineality", json::array()), d);
  }
  if (has_h && has_v) return dd_convert(Polyhedron::from_vrep(d, v, name));
  if (has_h) return Polyhedron::from_hrep(d, rows, name);
  return Polyhedron::from_vrep(d, v, name);
}

std::string complex_to_json(const PolyhedralComplex& c, int indent) {
  json j;
  j["ambient_dim"] = c.ambient_dim();
  json cells = json::array();
  for (std::size_t i : c.canonical_order()) {
    const Cell& cell = c.cells()[i];
    VRep v = canonical_vrep(c.ambient_dim(), cell.geometry.vrep());
    cells.push_back({{"vertices", list_json(v.vertices)},
                     {"rays", list_json(v.rays)},
                     {"label", cell.label},
                     {"maximal", c.is_maximal(i)}});
  }
  j["cells"] = cells;
  return j.dump(indent);
}

PolyhedralComplex complex_from_json(const std::string& text) {
  json j = json::parse(text);
  const std::size_t d = j.at("ambient_dim").get<std::size_t>();
  std::vector<Cell> cells;
  std::vector<bool> maximal;
  for (const auto& c : j.at("cells")) {
    VRep v;
    v.vertices = list_from(c.value("vertices", json::array()), d);
    v.rays = list_from(c.value("rays", json::array()), d);
    cells.push_back(Cell{dd_convert(Polyhedron::from_vrep(d, v)), c.value("label", std::string())});
    maximal.push_back(c.value("maximal", true));
  }
  return PolyhedralComplex(d, std::move(cells), std::move(maximal));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text << "\n";
}

}  // namespace rotaplex
