#pragma once

#include <string>
#include <vector>

#include "polyfun/diagram.hpp"

namespace polyfun::cli {

/// One node per (poset element, carrier element), transition edges along
/// covering pairs of the poset.
std::string dot_diagram(const Diagram& d, const std::string& name = "X");

/// Domain and codomain side by side, component edges dashed.
std::string dot_map(const DiagMap& f, const std::string& dom_name = "dom",
                    const std::string& cod_name = "cod");

/// A chain of composable maps laid out in columns, one column per object.
/// A dense/closed factorization renders as three columns.
std::string dot_chain(const std::vector<DiagMap>& maps, const std::vector<std::string>& names);

}  // namespace polyfun::cli
