#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "polyfun/diagram.hpp"

namespace polyfun {

/// Requires `along_cod` after the searched map to equal `along_dom`.
struct OverConstraint {
  DiagMap along_dom;  // A -> Z
  DiagMap along_cod;  // C -> Z
};

struct SearchOptions {
  bool injective = false;
  bool bijective = false;
  /// Stop after this many natural transformations have been visited.
  std::size_t limit = static_cast<std::size_t>(-1);
  /// When set, candidate values are tried in shuffled order.
  std::mt19937_64* shuffle = nullptr;
};

/// Backtracking enumeration of natural transformations A -> C subject to the
/// constraints. `visit` returns false to stop early. Returns the number of
/// maps visited.
std::size_t for_each_map(const Diagram& a, const Diagram& c,
                         const std::vector<OverConstraint>& constraints,
                         const SearchOptions& options,
                         const std::function<bool(const DiagMap&)>& visit);

std::size_t count_maps(const Diagram& a, const Diagram& c,
                       const std::vector<OverConstraint>& constraints = {});

std::optional<DiagMap> find_map(const Diagram& a, const Diagram& c,
                                const std::vector<OverConstraint>& constraints = {},
                                const SearchOptions& options = {});

std::optional<DiagMap> find_iso(const Diagram& a, const Diagram& c,
                                const std::vector<OverConstraint>& constraints = {});

/// An isomorphism phi: dom f -> dom g with g phi = f, if one exists.
std::optional<DiagMap> find_slice_iso(const DiagMap& f, const DiagMap& g);
bool slice_isomorphic(const DiagMap& f, const DiagMap& g);

/// Number of maps x -> y over their common base (y.anchor after phi = x.anchor).
std::size_t count_slice_maps(const DiagMap& x_anchor, const DiagMap& y_anchor);

}  // namespace polyfun
