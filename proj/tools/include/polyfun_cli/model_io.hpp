#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "polyfun/diagram.hpp"
#include "polyfun/polynomial.hpp"

namespace polyfun::cli {

using Json = nlohmann::json;

struct MorphismEntry {
  std::string dom;
  std::string cod;
  DiagMap map;
};

struct PolynomialEntry {
  std::string s;
  std::string p;
  std::string t;
  Polynomial poly;
};

struct Model {
  PosetPtr poset;
  std::map<std::string, Diagram> objects;
  std::map<std::string, MorphismEntry> morphisms;
  std::map<std::string, PolynomialEntry> polynomials;
};

/// Thrown when a name used on the command line or inside the model is unknown.
class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Escapes one JSON-pointer reference token.
std::string pointer_token(const std::string& raw);

/// Throws ValidationError (location is a JSON pointer) or UnknownName.
Model parse_model(const std::string& text);
Model load_model(const Json& doc);
Json serialize_model(const Model& model);

Json poset_json(const FinPoset& poset);
/// {"sets": ..., "maps": ...} in the model schema.
Json diagram_json(const Diagram& d);
Json components_json(const DiagMap& f);
/// A map with inline domain and codomain.
Json map_json(const DiagMap& f);
Json polynomial_json(const Polynomial& p);

const Diagram& lookup_object(const Model& m, const std::string& name);
const DiagMap& lookup_morphism(const Model& m, const std::string& name);
const Polynomial& lookup_polynomial(const Model& m, const std::string& name);

}  // namespace polyfun::cli
