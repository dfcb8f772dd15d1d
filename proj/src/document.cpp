#include "twocat/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace twocat {

namespace {

using json = nlohmann::ordered_json;

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

struct Reader {
  std::string origin;

  [[noreturn]] void error(const std::string& where, const std::string& message) const {
    throw DocumentError(origin, where.empty() ? "/" : where, message);
  }

  const json& field(const json& obj, const std::string& where, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end()) error(where, std::string("missing field '") + key + "'");
    return *it;
  }

  std::string label(const json& v, const std::string& where) const {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    error(where, "expected a string label");
  }
};

}  // namespace

QuiverDocument parse_quiver_document(const std::string& text, const std::string& origin) {
  Reader r{origin};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    auto colon = what.find("syntax error");
    throw DocumentError(origin, line_column(text, e.byte > 0 ? e.byte - 1 : 0),
                        colon == std::string::npos ? what : what.substr(colon));
  }
  if (!doc.is_object()) r.error("", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "vertices" && key != "arrows" && key != "tree" && key != "ideals") r.error("/" + key, "unknown field");

  const json& vs = r.field(doc, "", "vertices");
  if (!vs.is_array()) r.error("/vertices", "expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(r.label(vs[i], "/vertices/" + std::to_string(i)));

  const json& as = r.field(doc, "", "arrows");
  if (!as.is_array()) r.error("/arrows", "expected an array");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string at = "/arrows/" + std::to_string(i);
    if (!as[i].is_object()) r.error(at, "expected an object");
    Arrow a;
    a.id = r.label(r.field(as[i], at, "id"), at + "/id");
    for (auto [key, slot] : {std::pair<const char*, int*>{"source", &a.source}, {"target", &a.target}}) {
      std::string v = r.label(r.field(as[i], at, key), at + "/" + key);
      auto it = std::find(vertices.begin(), vertices.end(), v);
      if (it == vertices.end()) r.error(at + "/" + key, "undeclared vertex '" + v + "'");
      *slot = static_cast<int>(it - vertices.begin());
    }
    arrows.push_back(a);
  }

  const json& tree = r.field(doc, "", "tree");
  if (!tree.is_boolean()) r.error("/tree", "expected a boolean");

  QuiverDocument out;
  try {
    out.quiver = Quiver(vertices, arrows, tree.get<bool>());
  } catch (const std::invalid_argument& e) {
    r.error("", e.what());
  }
  if (!out.quiver.is_tree() && out.quiver.has_directed_cycle()) r.error("/arrows", "quiver has a directed cycle");
  if (out.quiver.is_tree()) out.algebra = make_algebra(out.quiver);

  if (auto it = doc.find("ideals"); it != doc.end()) {
    if (!it->is_object()) r.error("/ideals", "expected an object");
    if (!out.algebra) r.error("/ideals", "named ideals need a tree quiver");
    for (const auto& [name, value] : it->items()) {
      std::string at = "/ideals/" + name;
      if (!value.is_array()) r.error(at, "expected an array of path descriptors");
      NamedIdeal n;
      n.name = name;
      std::vector<int> paths;
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string()) r.error(at + "/" + std::to_string(i), "expected a path descriptor");
        n.given.push_back(value[i].get<std::string>());
        try {
          paths.push_back(out.algebra->parse(n.given.back()));
        } catch (const std::invalid_argument& e) {
          r.error(at + "/" + std::to_string(i), e.what());
        }
      }
      n.ideal = minimal_generators(out.algebra, paths);
      auto sorted = n.given;
      std::sort(sorted.begin(), sorted.end());
      auto canonical = n.ideal.descriptors();
      std::sort(canonical.begin(), canonical.end());
      if (sorted != canonical) out.warnings.push_back("ideal '" + name + "' is not minimal; canonical form " + n.ideal.str());
      out.ideals.push_back(std::move(n));
    }
  }
  return out;
}

QuiverDocument load_quiver_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path, "0:0", "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_quiver_document(ss.str(), path);
}

std::string quiver_document_json(const QuiverDocument& doc) {
  const Quiver& q = doc.quiver;
  json out;
  out["vertices"] = q.vertices();
  out["arrows"] = json::array();
  for (const auto& a : q.arrows())
    out["arrows"].push_back({{"id", a.id}, {"source", q.vertex(a.source)}, {"target", q.vertex(a.target)}});
  out["tree"] = q.is_tree();
  if (!doc.ideals.empty()) {
    out["ideals"] = json::object();
    for (const auto& n : doc.ideals) out["ideals"][n.name] = n.ideal.descriptors();
  }
  return out.dump(2);
}

std::string bimodule_json(const Bimodule<Rational>& m) {
  const Quiver& q = *m.quiver;
  json out;
  out["quiver"] = {{"vertices", q.vertices()}, {"arrows", json::array()}};
  for (const auto& a : q.arrows())
    out["quiver"]["arrows"].push_back({{"id", a.id}, {"source", q.vertex(a.source)}, {"target", q.vertex(a.target)}});
  out["relation_length"] = m.relation_length;
  out["basis"] = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    out["basis"].push_back({{"label", m.labels[i]}, {"left", q.vertex(m.left_vertex[i])}, {"right", q.vertex(m.right_vertex[i])}});
  auto matrix = [](const Matrix<Rational>& x) {
    json rows = json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(r, c).get_str());
      rows.push_back(row);
    }
    return rows;
  };
  for (auto [side, mats] : {std::pair<const char*, const std::vector<Matrix<Rational>>*>{"left", &m.left}, {"right", &m.right}}) {
    out[side] = json::object();
    for (int a = 0; a < q.arrow_count(); ++a) out[side][q.arrow(a).id] = matrix((*mats)[a]);
  }
  return out.dump(2);
}

}  // namespace twocat
