#include "polyfun_cli/model_io.hpp"

#include <optional>

namespace polyfun::cli {

namespace {

std::string pair_key(const FinPoset& poset, std::size_t j, std::size_t k) {
  return poset.name(j) + "<=" + poset.name(k);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where, what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::size_t element_index(const FinPoset& poset, const std::string& name, const std::string& where) {
  std::optional<std::size_t> j = poset.index_of(name);
  if (!j) fail(where, "unknown poset element '" + name + "'");
  return *j;
}

Function index_list(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of indices");
  Function out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned()) {
      fail(where + "/" + std::to_string(i), "expected a non-negative integer");
    }
    out.push_back(v[i].get<Elem>());
  }
  return out;
}

std::string strip_location(const ValidationError& e) {
  std::string what = e.what();
  const std::string head = e.location() + ": ";
  return what.rfind(head, 0) == 0 ? what.substr(head.size()) : what;
}

// Rethrows a construction error with the model location in front.
template <typename F>
auto at_location(const std::string& prefix, F&& build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    throw ValidationError(prefix + e.location(), strip_location(e));
  }
}

PosetPtr parse_poset(const Json& doc) {
  const Json& p = member(doc, "poset", "");
  const Json& elements = member(p, "elements", "/poset");
  if (!elements.is_array()) fail("/poset/elements", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string()) fail("/poset/elements/" + std::to_string(i), "expected a name");
    names.push_back(elements[i].get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> leq;
  if (p.contains("leq")) {
    const Json& rel = p.at("leq");
    if (!rel.is_array()) fail("/poset/leq", "expected an array of pairs");
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const Json& pair = rel[i];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        fail("/poset/leq/" + std::to_string(i), "expected a pair of element names");
      }
      leq.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return std::make_shared<const FinPoset>(std::move(names), leq);
}

Diagram parse_diagram(const PosetPtr& poset, const Json& obj, const std::string& where) {
  const std::size_t n = poset->size();
  const Json& sets = member(obj, "sets", where);
  if (!sets.is_object()) fail(where + "/sets", "expected an object keyed by poset element");
  std::vector<std::size_t> sizes(n, 0);
  std::vector<std::vector<std::string>> labels(n);
  std::vector<bool> seen(n, false);
  bool labelled = false;
  for (const auto& [name, value] : sets.items()) {
    std::string at = where + "/sets/" + pointer_token(name);
    std::size_t j = element_index(*poset, name, at);
    seen[j] = true;
    if (value.is_number_unsigned()) {
      sizes[j] = value.get<std::size_t>();
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string()) fail(at + "/" + std::to_string(i), "expected a label");
        labels[j].push_back(value[i].get<std::string>());
      }
      sizes[j] = value.size();
      labelled = true;
    } else {
      fail(at, "expected a size or a list of labels");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!seen[j]) fail(where + "/sets", "no carrier for element '" + poset->name(j) + "'");
  }
  if (labelled) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[j].empty()) {
        for (std::size_t x = 0; x < sizes[j]; ++x) labels[j].push_back(std::to_string(x));
      }
    }
  } else {
    labels.clear();
  }

  std::map<RelatedPair, Function> given;
  if (obj.contains("maps")) {
    const Json& maps = obj.at("maps");
    if (!maps.is_object()) fail(where + "/maps", "expected an object keyed by \"a<=b\"");
    for (const auto& [key, value] : maps.items()) {
      std::string at = where + "/maps/" + pointer_token(key);
      std::size_t sep = key.find("<=");
      if (sep == std::string::npos) fail(at, "expected a key of the form \"a<=b\"");
      std::size_t j = element_index(*poset, key.substr(0, sep), at);
      std::size_t k = element_index(*poset, key.substr(sep + 2), at);
      if (!poset->leq(j, k)) fail(at, "elements are not related");
      Function fn = index_list(value, at);
      if (j == k) {
        for (Elem x = 0; x < fn.size(); ++x) {
          if (fn[x] != x) fail(at, "a reflexive transition must be the identity");
        }
        continue;
      }
      given[{j, k}] = std::move(fn);
    }
  }
  // Missing transitions are derived through intermediate elements.
  std::map<RelatedPair, Function> trans = given;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto [j, k] : poset->strict_pairs()) {
      if (trans.count({j, k})) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (m == j || m == k || !trans.count({j, m}) || !trans.count({m, k})) continue;
        const Function& first = trans.at({j, m});
        const Function& second = trans.at({m, k});
        Function fn;
        for (Elem x : first) {
          if (x >= second.size()) fail(where + "/maps/" + pointer_token(pair_key(*poset, j, m)),
                                       "element " + std::to_string(x) + " maps out of range");
          fn.push_back(second[x]);
        }
        trans[{j, k}] = std::move(fn);
        progress = true;
        break;
      }
    }
  }
  for (auto [j, k] : poset->strict_pairs()) {
    if (!trans.count({j, k})) {
      if (sizes[j] == 0) {
        trans[{j, k}] = {};
        continue;
      }
      fail(where + "/maps", "missing transition " + pair_key(*poset, j, k));
    }
  }
  return at_location(where, [&] { return Diagram(poset, sizes, trans, labels); });
}

DiagMap parse_components(const Diagram& dom, const Diagram& cod, const Json& obj,
                         const std::string& where) {
  const FinPoset& poset = *dom.poset();
  const Json& comps = member(obj, "components", where);
  if (!comps.is_object()) fail(where + "/components", "expected an object keyed by element");
  std::vector<Function> out(poset.size());
  std::vector<bool> seen(poset.size(), false);
  for (const auto& [name, value] : comps.items()) {
    std::string at = where + "/components/" + pointer_token(name);
    std::size_t j = element_index(poset, name, at);
    out[j] = index_list(value, at);
    seen[j] = true;
  }
  for (std::size_t j = 0; j < poset.size(); ++j) {
    if (!seen[j] && dom.size(j) > 0) {
      fail(where + "/components", "no component for element '" + poset.name(j) + "'");
    }
  }
  return at_location(where, [&] { return DiagMap(dom, cod, std::move(out)); });
}

std::string name_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = member(obj, key, where);
  if (!v.is_string()) fail(where + "/" + key, "expected a name");
  return v.get<std::string>();
}

}  // namespace

std::string pointer_token(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

Model parse_model(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("", std::string("syntax error: ") + e.what());
  }
  return load_model(doc);
}

Model load_model(const Json& doc) {
  if (!doc.is_object()) fail("", "expected a JSON object");
  Model m;
  m.poset = parse_poset(doc);

  if (doc.contains("objects")) {
    const Json& objs = doc.at("objects");
    if (!objs.is_object()) fail("/objects", "expected an object");
    for (const auto& [name, value] : objs.items()) {
      m.objects.emplace(name, parse_diagram(m.poset, value, "/objects/" + pointer_token(name)));
    }
  }
  if (doc.contains("morphisms")) {
    const Json& mors = doc.at("morphisms");
    if (!mors.is_object()) fail("/morphisms", "expected an object");
    for (const auto& [name, value] : mors.items()) {
      std::string where = "/morphisms/" + pointer_token(name);
      std::string dom = name_field(value, "dom", where);
      std::string cod = name_field(value, "cod", where);
      if (!m.objects.count(dom)) throw UnknownName(where + "/dom: unknown object '" + dom + "'");
      if (!m.objects.count(cod)) throw UnknownName(where + "/cod: unknown object '" + cod + "'");
      DiagMap f = parse_components(m.objects.at(dom), m.objects.at(cod), value, where);
      m.morphisms.emplace(name, MorphismEntry{dom, cod, std::move(f)});
    }
  }
  if (doc.contains("polynomials")) {
    const Json& polys = doc.at("polynomials");
    if (!polys.is_object()) fail("/polynomials", "expected an object");
    for (const auto& [name, value] : polys.items()) {
      std::string where = "/polynomials/" + pointer_token(name);
      PolynomialEntry entry{name_field(value, "s", where), name_field(value, "p", where),
                            name_field(value, "t", where), {}};
      for (const std::string* leg : {&entry.s, &entry.p, &entry.t}) {
        if (!m.morphisms.count(*leg)) {
          throw UnknownName(where + ": unknown morphism '" + *leg + "'");
        }
      }
      try {
        entry.poly = Polynomial(m.morphisms.at(entry.s).map, m.morphisms.at(entry.p).map,
                                m.morphisms.at(entry.t).map);
      } catch (const BoundaryMismatch& e) {
        throw ValidationError(where, e.what());
      }
      m.polynomials.emplace(name, std::move(entry));
    }
  }
  return m;
}

Json poset_json(const FinPoset& poset) {
  Json elements = Json::array();
  for (std::size_t j = 0; j < poset.size(); ++j) elements.push_back(poset.name(j));
  Json leq = Json::array();
  for (auto [j, k] : poset.strict_pairs()) leq.push_back({poset.name(j), poset.name(k)});
  return Json{{"elements", elements}, {"leq", leq}};
}

Json diagram_json(const Diagram& d) {
  const FinPoset& poset = *d.poset();
  Json sets = Json::object();
  for (std::size_t j = 0; j < poset.size(); ++j) {
    if (d.has_labels()) {
      sets[poset.name(j)] = d.labels()[j];
    } else {
      sets[poset.name(j)] = d.size(j);
    }
  }
  Json maps = Json::object();
  for (const auto& [pair, fn] : d.transitions()) {
    maps[pair_key(poset, pair.first, pair.second)] = fn;
  }
  return Json{{"sets", sets}, {"maps", maps}};
}

Json components_json(const DiagMap& f) {
  const FinPoset& poset = *f.poset();
  Json comps = Json::object();
  for (std::size_t j = 0; j < poset.size(); ++j) comps[poset.name(j)] = f.component(j);
  return comps;
}

Json map_json(const DiagMap& f) {
  return Json{{"dom", diagram_json(f.dom())},
              {"cod", diagram_json(f.cod())},
              {"components", components_json(f)}};
}

Json polynomial_json(const Polynomial& p) {
  return Json{{"I", diagram_json(p.i())},
              {"E", diagram_json(p.e())},
              {"B", diagram_json(p.b())},
              {"J", diagram_json(p.j())},
              {"s", components_json(p.s())},
              {"p", components_json(p.p())},
              {"t", components_json(p.t())}};
}

Json serialize_model(const Model& model) {
  Json objects = Json::object();
  for (const auto& [name, d] : model.objects) objects[name] = diagram_json(d);
  Json morphisms = Json::object();
  for (const auto& [name, m] : model.morphisms) {
    morphisms[name] = Json{{"dom", m.dom}, {"cod", m.cod}, {"components", components_json(m.map)}};
  }
  Json polynomials = Json::object();
  for (const auto& [name, p] : model.polynomials) {
    polynomials[name] = Json{{"s", p.s}, {"p", p.p}, {"t", p.t}};
  }
  return Json{{"poset", poset_json(*model.poset)},
              {"objects", objects},
              {"morphisms", morphisms},
              {"polynomials", polynomials}};
}

const Diagram& lookup_object(const Model& m, const std::string& name) {
  auto it = m.objects.find(name);
  if (it == m.objects.end()) throw UnknownName("unknown object '" + name + "'");
  return it->second;
}

const DiagMap& lookup_morphism(const Model& m, const std::string& name) {
  auto it = m.morphisms.find(name);
  if (it == m.morphisms.end()) throw UnknownName("unknown morphism '" + name + "'");
  return it->second.map;
}

const Polynomial& lookup_polynomial(const Model& m, const std::string& name) {
  auto it = m.polynomials.find(name);
  if (it == m.polynomials.end()) throw UnknownName("unknown polynomial '" + name + "'");
  return it->second.poly;
}

}  // namespace polyfun::cli
