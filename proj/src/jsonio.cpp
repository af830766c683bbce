#include "phg/jsonio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace phg {

using nlohmann::json;

std::string filtration_to_json(const Graph& g, const FiltrationAssignment& f) {
  json out;
  out["vertices"] = f.vertex_values;
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    double val = f.edge_values ? (*f.edge_values)[e]
                               : std::max(f.vertex_values[u], f.vertex_values[v]);
    edges.push_back(json::array({u, v, val}));
  }
  out["edges"] = edges;
  return out.dump();
}

FiltrationAssignment filtration_from_json(const std::string& text, const Graph& g) {
  json in = json::parse(text);
  FiltrationAssignment f;
  f.vertex_values = in.at("vertices").get<std::vector<double>>();
  if (f.vertex_values.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("filtration vertex count does not match graph");
  std::vector<double> ev(g.edge_count());
  std::vector<bool> seen(g.edge_count(), false);
  for (const auto& entry : in.at("edges")) {
    int u = entry.at(0), v = entry.at(1);
    int e = g.edge_index(u, v);
    if (e < 0)
      throw std::invalid_argument("filtration edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") is not in the graph");
    ev[e] = entry.at(2);
    seen[e] = true;
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("filtration misses an edge value");
  f.edge_values = std::move(ev);
  return f;
}

std::string complex_to_json(const FilteredComplex& c) {
  json out = json::array();
  for (const auto& s : c.simplices)
    out.push_back(json{{"vertices", s.vertices}, {"value", s.value}});
  return out.dump();
}

FilteredComplex complex_from_json(const std::string& text) {
  json in = json::parse(text);
  FilteredComplex c;
  for (const auto& entry : in) {
    Simplex s;
    s.vertices = entry.at("vertices").get<std::vector<int>>();
    s.value = entry.at("value");
    c.k_max = std::max(c.k_max, s.dim());
    c.simplices.push_back(std::move(s));
  }
  return c;
}

std::string diagram_to_json(const PersistenceDiagram& d) {
  json points = json::array();
  for (const auto& p : d.points) {
    json death = p.essential ? json("inf") : json(p.death);
    points.push_back(json::array({p.birth, death, p.multiplicity}));
  }
  return json{{"dim", d.dim}, {"points", points}}.dump();
}

namespace {

PersistenceDiagram diagram_from_node(const nlohmann::json& in) {
  PersistenceDiagram d;
  d.dim = in.at("dim");
  for (const auto& entry : in.at("points")) {
    DiagramPoint p;
    p.birth = entry.at(0);
    if (entry.at(1).is_string()) {
      if (entry.at(1) != "inf")
        throw std::invalid_argument("unknown death marker: " + entry.at(1).dump());
      p.essential = true;
    } else {
      p.death = entry.at(1);
    }
    p.multiplicity = entry.at(2);
    d.points.push_back(p);
  }
  d.canonicalize();
  return d;
}

}  // namespace

PersistenceDiagram diagram_from_json(const std::string& text) {
  return diagram_from_node(json::parse(text));
}

std::string diagrams_to_json(const std::vector<PersistenceDiagram>& diags) {
  json out = json::array();
  for (const auto& d : diags) out.push_back(json::parse(diagram_to_json(d)));
  return out.dump();
}

std::vector<PersistenceDiagram> diagrams_from_json(const std::string& text) {
  json in = json::parse(text);
  std::vector<PersistenceDiagram> diags;
  if (in.is_object()) {
    diags.push_back(diagram_from_node(in));
    return diags;
  }
  for (const auto& node : in) diags.push_back(diagram_from_node(node));
  return diags;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

}  // namespace phg
