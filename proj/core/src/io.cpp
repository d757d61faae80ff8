#include "arcbrick/io.hpp"

#include <sstream>

#include "arcbrick/errors.hpp"
#include "arcbrick/string_hom.hpp"

namespace arcbrick {

Json to_json(const Arc& a) {
  Json j;
  j["left"] = a.left();
  j["right"] = a.right();
  j["above"] = a.above_points();
  return j;
}

Json to_json(const ColoredArc& e) {
  Json j = to_json(e.arc);
  j["color"] = to_string(e.color);
  return j;
}

Json to_json(const NoncrossingDiagram& g) {
  Json j;
  j["n"] = g.rank();
  j["arcs"] = Json::array();
  for (const Arc& a : g.arcs()) j["arcs"].push_back(to_json(a));
  return j;
}

Json to_json(const ColoredDiagram& d) {
  Json j;
  j["arcs"] = Json::array();
  for (const auto& e : d.entries()) j["arcs"].push_back(to_json(e));
  j["n"] = d.rank();
  j["perm"] = underlying_permutation(d).to_string();
  return j;
}

Json to_json(const Representation& m) {
  Json j;
  j["dims"] = m.dims().entries();
  Json arrows = Json::object();
  for (const Arrow& a : all_arrows(m.rank())) {
    const Matrix& mat = m.map(a);
    Json rows = Json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(to_string(mat(r, c)));
      rows.push_back(std::move(row));
    }
    arrows[a.to_string()] = std::move(rows);
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Json to_json(const TwoTermCollection& x) {
  Json j;
  j["n"] = x.rank();
  j["members"] = Json::array();
  int position = 1;
  for (const auto& member : x.members()) {
    Json item;
    item["position"] = position++;
    item["shift"] = member.shift;
    const Json rep = to_json(member.module);
    item["dims"] = rep["dims"];
    item["arrows"] = rep["arrows"];
    j["members"].push_back(std::move(item));
  }
  return j;
}

Json collection_json(const ColoredDiagram& d) {
  Json j;
  j["n"] = d.rank();
  j["members"] = Json::array();
  int position = 1;
  for (const auto& e : d.entries()) {
    Json item = to_json(e);
    item["position"] = position++;
    item["shift"] = e.color == Color::Green ? 0 : 1;
    item["sequence"] = arrow_sequence(e.arc).to_string();
    const Json rep = to_json(arc_module(e.arc, d.rank()));
    item["dims"] = rep["dims"];
    item["arrows"] = rep["arrows"];
    j["members"].push_back(std::move(item));
  }
  return j;
}

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("expected integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

Arc arc_from_json(const Json& j) {
  const int left = require_int(j, "left");
  const int right = require_int(j, "right");
  std::vector<int> above;
  if (j.contains("above")) {
    if (!j.at("above").is_array()) throw ParseError("'above' must be a list of points");
    for (const auto& m : j.at("above")) {
      if (!m.is_number_integer()) throw ParseError("'above' entries must be integers");
      above.push_back(m.get<int>());
    }
  }
  try {
    return Arc(left, right, above);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

ColoredDiagram colored_diagram_from_json(const Json& j) {
  const int n = require_int(j, "n");
  if (!j.contains("arcs") || !j.at("arcs").is_array()) throw ParseError("expected 'arcs' list");
  std::vector<ColoredArc> entries;
  for (const auto& item : j.at("arcs")) {
    if (!item.contains("color") || !item.at("color").is_string()) {
      throw ParseError("colored arc needs a 'color'");
    }
    const std::string color = item.at("color").get<std::string>();
    if (color != "green" && color != "red") throw ParseError("color must be green or red");
    entries.push_back({arc_from_json(item), color == "green" ? Color::Green : Color::Red});
  }
  try {
    return ColoredDiagram(n, std::move(entries));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Representation representation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.at("dims").is_array()) {
    throw ParseError("representation needs a 'dims' list");
  }
  std::vector<int> dims;
  for (const auto& d : j.at("dims")) {
    if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("dims must be nonnegative integers");
    dims.push_back(d.get<int>());
  }
  if (dims.empty()) throw ParseError("dims must not be empty");
  Representation m(static_cast<int>(dims.size()), DimVector(dims));
  if (!j.contains("arrows")) return m;
  if (!j.at("arrows").is_object()) throw ParseError("'arrows' must be an object");
  for (const auto& [name, rows] : j.at("arrows").items()) {
    const Arrow a = Arrow::parse(name);
    if (!rows.is_array()) throw ParseError("matrix for " + name + " must be a list of rows");
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.at(0).size();
    Matrix mat(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      const auto& row = rows.at(i);
      if (!row.is_array() || row.size() != c) throw ParseError("ragged matrix for " + name);
      for (std::size_t k = 0; k < c; ++k) {
        const auto& cell = row.at(k);
        if (cell.is_string()) {
          mat(i, k) = parse_rational(cell.get<std::string>());
        } else if (cell.is_number_integer()) {
          mat(i, k) = cell.get<long>();
        } else {
          throw ParseError("matrix entries must be rational strings");
        }
      }
    }
    // Empty row lists stand for any matrix with a zero dimension.
    if (r == 0) {
      mat = Matrix(static_cast<std::size_t>(m.dim(a.target())), static_cast<std::size_t>(m.dim(a.source())));
    }
    try {
      m.set_map(a, std::move(mat));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  return m;
}

std::string to_dot(const MutationGraph& g) {
  std::ostringstream out;
  out << "digraph mutation_graph {\n";
  out << "  rankdir=TB;\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    out << "  v" << k << " [label=\"" << g.labels[k].to_string() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"mu" << e.position << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace arcbrick
