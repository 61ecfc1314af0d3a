#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "polyfun/diagram.hpp"
#include "polyfun/polynomial.hpp"

namespace polyfun {

using Rng = std::mt19937_64;

/// Catalogue of posets with at most three elements.
std::vector<PosetPtr> small_posets();
PosetPtr random_poset(Rng& rng);

/// Carriers of size at most max_size; transitions random but functorial.
Diagram random_diagram(const PosetPtr& poset, Rng& rng, std::size_t max_size);

/// Some natural transformation a -> c found in shuffled search order.
std::optional<DiagMap> random_map(const Diagram& a, const Diagram& c, Rng& rng);

/// Some map into c from a random diagram (falls back to 0 -> c).
DiagMap random_map_into(const Diagram& c, Rng& rng, std::size_t max_size);

/// Random subobject (transition-closed subset) of x, as its inclusion.
DiagMap random_subobject(const Diagram& x, Rng& rng);

/// Random one-variable polynomial on the one-point poset.
Polynomial random_one_point_polynomial(Rng& rng, std::size_t max_base, std::size_t max_fibre);

}  // namespace polyfun
