#include "tropgw/serialize.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tropgw {

namespace {

Json endpoint(int v) {
  if (v == kLeftEnd) return "left";
  if (v == kRightEnd) return "right";
  return v;
}

int endpoint_from(const Json& j) {
  if (j.is_number_integer()) return j.get<int>();
  const auto s = j.get<std::string>();
  if (s == "left") return kLeftEnd;
  if (s == "right") return kRightEnd;
  return std::stoi(s);
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Json to_json(const WElement& w) {
  Json out = Json::object();
  for (const auto& [mu, c] : w.terms()) out[to_string(mu)] = to_json(c);
  return out;
}

Json to_json(const TropicalCover& c) {
  Json j;
  j["degree"] = c.degree;
  j["genus"] = c.genus;
  j["vertices"] = Json::array();
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    j["vertices"].push_back({{"id", i}, {"position", c.vertices[i].position}, {"genus", c.vertices[i].genus}});
  }
  j["edges"] = Json::array();
  for (const auto& e : c.edges) {
    Json ej{{"from", endpoint(e.from)}, {"to", endpoint(e.to)}, {"weight", e.weight}, {"multiplicity", e.multiplicity}};
    if (e.wraps) ej["wraps"] = true;
    j["edges"].push_back(std::move(ej));
  }
  if (!c.vertical_ends.empty()) {
    j["vertical_ends"] = Json::array();
    for (const auto& v : c.vertical_ends) {
      j["vertical_ends"].push_back(
          {{"vertex", v.vertex}, {"weight", v.weight}, {"multiplicity", v.multiplicity}, {"marked", v.marked}});
    }
  }
  return j;
}

TropicalCover cover_from_json(const Json& j) {
  TropicalCover c;
  try {
    c.degree = j.at("degree").get<int>();
    c.genus = j.at("genus").get<int>();
    for (const auto& v : j.at("vertices")) {
      c.vertices.push_back(CoverVertex{v.at("position").get<int>(), v.at("genus").get<int>()});
    }
    for (const auto& e : j.at("edges")) {
      c.edges.push_back(EdgeClass{endpoint_from(e.at("from")), endpoint_from(e.at("to")), e.at("weight").get<int>(),
                                  e.at("multiplicity").get<int>(), e.value("wraps", false)});
    }
    if (j.contains("vertical_ends")) {
      for (const auto& v : j.at("vertical_ends")) {
        c.vertical_ends.push_back(VerticalEnd{v.at("vertex").get<int>(), v.at("weight").get<int>(),
                                              v.at("multiplicity").get<int>(), v.at("marked").get<bool>()});
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed cover JSON: ") + ex.what());
  }
  return c;
}

Json to_json(const WeightedCover& c) {
  Json j = to_json(c.cover);
  j["automorphisms"] = to_json(c.multiplicity.automorphisms);
  j["vertex_factor"] = to_json(c.multiplicity.vertex_factor);
  j["edge_factor"] = c.multiplicity.edge_factor.get_str();
  j["multiplicity"] = to_json(c.multiplicity.total);
  return j;
}

Json to_json(const std::vector<WeightedCover>& covers) {
  Json j = Json::array();
  for (const auto& c : covers) j.push_back(to_json(c));
  return j;
}

Json to_json(const SurgeryEntry& e) {
  Json j = to_json(WeightedCover{e.cover, e.multiplicity});
  j["coefficient"] = to_json(e.coefficient);
  j["contribution"] = to_json(e.contribution);
  return j;
}

Json to_json(const FeynmanDiagram& d) {
  Json j;
  j["contractions"] = Json::array();
  for (const auto& c : d.contractions) {
    j["contractions"].push_back({{"left", {c.left_monomial, c.left_factor}},
                                 {"right", {c.right_monomial, c.right_factor}},
                                 {"weight", c.weight}});
  }
  j["weight"] = d.weight.get_str();
  j["internal_weight"] = d.internal_weight.get_str();
  return j;
}

std::string to_dot(const TropicalCover& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  left [shape=point];\n  right [shape=point];\n";
  std::map<int, std::vector<std::size_t>> by_position;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    by_position[c.vertices[i].position].push_back(i);
    out << "  v" << i << " [label=\"g" << c.vertices[i].genus << "\"];\n";
  }
  for (const auto& [pos, ids] : by_position) {
    out << "  { rank=same;";
    for (auto i : ids) out << " v" << i << ";";
    out << " }\n";
  }
  auto node = [](int v) { return v == kLeftEnd ? std::string("left") : v == kRightEnd ? "right" : "v" + std::to_string(v); };
  for (const auto& e : c.edges) {
    out << "  " << node(e.from) << " -> " << node(e.to) << " [label=\"" << e.weight;
    if (e.multiplicity > 1) out << " x" << e.multiplicity;
    out << "\"" << (e.wraps ? ", style=dashed" : "") << "];\n";
  }
  int k = 0;
  for (const auto& v : c.vertical_ends) {
    out << "  e" << k << " [shape=point];\n";
    out << "  v" << v.vertex << " -> e" << k << " [label=\"" << v.weight;
    if (v.multiplicity > 1) out << " x" << v.multiplicity;
    out << "\"" << (v.marked ? "" : ", style=dotted") << "];\n";
    ++k;
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const FeynmanDiagram& d, const std::vector<HeisenbergMonomial>& product, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < product.size(); ++i) {
    out << "  m" << i << " [label=\"";
    for (std::size_t f = 0; f < product[i].factors.size(); ++f) out << (f ? " " : "") << "a(" << product[i].factors[f] << ")";
    out << "\"];\n";
  }
  for (const auto& c : d.contractions) {
    out << "  m" << c.left_monomial << " -> m" << c.right_monomial << " [label=\"" << c.weight << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tropgw
