#include "polyfun_cli/dot.hpp"

#include <sstream>

namespace polyfun::cli {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node_id(std::size_t column, std::size_t j, Elem x) {
  return "n" + std::to_string(column) + "_" + std::to_string(j) + "_" + std::to_string(x);
}

bool covers(const FinPoset& poset, std::size_t j, std::size_t k) {
  for (std::size_t m = 0; m < poset.size(); ++m) {
    if (m != j && m != k && poset.leq(j, m) && poset.leq(m, k)) return false;
  }
  return true;
}

void emit_object(std::ostringstream& out, const Diagram& d, const std::string& name,
                 std::size_t column) {
  const FinPoset& poset = *d.poset();
  out << "  subgraph cluster_" << column << " {\n";
  out << "    label=" << quoted(name) << ";\n";
  for (std::size_t j = 0; j < poset.size(); ++j) {
    for (Elem x = 0; x < d.size(j); ++x) {
      out << "    " << node_id(column, j, x) << " [label="
          << quoted(poset.name(j) + ":" + d.label(j, x)) << "];\n";
    }
  }
  for (auto [j, k] : poset.strict_pairs()) {
    if (!covers(poset, j, k)) continue;
    for (Elem x = 0; x < d.size(j); ++x) {
      out << "    " << node_id(column, j, x) << " -> " << node_id(column, k, d.at(j, k, x))
          << ";\n";
    }
  }
  out << "  }\n";
}

void emit_components(std::ostringstream& out, const DiagMap& f, std::size_t from,
                     std::size_t to) {
  for (std::size_t j = 0; j < f.poset()->size(); ++j) {
    for (Elem x = 0; x < f.dom().size(j); ++x) {
      out << "  " << node_id(from, j, x) << " -> " << node_id(to, j, f(j, x))
          << " [style=dashed, constraint=true];\n";
    }
  }
}

}  // namespace

std::string dot_diagram(const Diagram& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph polyfun {\n  rankdir=LR;\n  node [shape=circle];\n";
  emit_object(out, d, name, 0);
  out << "}\n";
  return out.str();
}

std::string dot_map(const DiagMap& f, const std::string& dom_name, const std::string& cod_name) {
  return dot_chain({f}, {dom_name, cod_name});
}

std::string dot_chain(const std::vector<DiagMap>& maps, const std::vector<std::string>& names) {
  if (maps.empty()) return dot_diagram(Diagram(), names.empty() ? "X" : names.front());
  std::ostringstream out;
  out << "digraph polyfun {\n  rankdir=LR;\n  newrank=true;\n  node [shape=circle];\n";
  for (std::size_t c = 0; c <= maps.size(); ++c) {
    const Diagram& d = c < maps.size() ? maps[c].dom() : maps.back().cod();
    emit_object(out, d, c < names.size() ? names[c] : "X" + std::to_string(c), c);
  }
  for (std::size_t c = 0; c < maps.size(); ++c) emit_components(out, maps[c], c, c + 1);
  out << "}\n";
  return out.str();
}

}  // namespace polyfun::cli
