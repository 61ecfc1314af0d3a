#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyfun/errors.hpp"
#include "polyfun/poset.hpp"

namespace polyfun {

using Elem = std::size_t;
using Function = std::vector<Elem>;
using RelatedPair = std::pair<std::size_t, std::size_t>;

/// A functor from a finite poset to finite sets.
///
/// The carrier over poset element j is {0, ..., size(j)-1}; optional labels
/// are carried for presentation only and never take part in comparisons.
/// Diagram is an immutable handle, so copies are cheap and share storage.
class Diagram {
 public:
  Diagram();  // the empty diagram on the one-point poset

  /// `transitions` must hold every strict pair j < k; identities are implied.
  /// Throws ValidationError on range or functoriality failures.
  Diagram(PosetPtr poset, std::vector<std::size_t> sizes,
          const std::map<RelatedPair, Function>& transitions,
          std::vector<std::vector<std::string>> labels = {});

  static Diagram initial(PosetPtr poset);
  static Diagram terminal(PosetPtr poset);
  /// Every carrier has n elements, every transition is the identity.
  static Diagram constant(PosetPtr poset, std::size_t n);

  const PosetPtr& poset() const { return data_->poset; }
  std::size_t size(std::size_t j) const { return data_->sizes[j]; }
  const std::vector<std::size_t>& sizes() const { return data_->sizes; }
  std::size_t total_size() const;
  bool empty() const { return total_size() == 0; }
  bool is_terminal() const;

  /// transition(j<=k) applied to x in carrier(j).
  Elem at(std::size_t j, std::size_t k, Elem x) const {
    return j == k ? x : data_->transitions[j * stride() + k][x];
  }
  const Function& transition(std::size_t j, std::size_t k) const;

  /// Label of element x over j, or its index when unlabeled.
  std::string label(std::size_t j, Elem x) const;
  bool has_labels() const { return !data_->labels.empty(); }
  const std::vector<std::vector<std::string>>& labels() const { return data_->labels; }

  Diagram with_labels(std::vector<std::vector<std::string>> labels) const;

  /// Structural equality: same poset, carriers and transitions. Labels ignored.
  bool same_as(const Diagram& other) const;

  std::map<RelatedPair, Function> transitions() const;

 private:
  struct Data {
    PosetPtr poset;
    std::vector<std::size_t> sizes;
    std::vector<Function> transitions;  // indexed j * n + k, filled for j < k
    std::vector<std::vector<std::string>> labels;
  };

  std::size_t stride() const { return data_->sizes.size(); }

  std::shared_ptr<const Data> data_;
};

/// A natural transformation between diagrams on the same poset.
class DiagMap {
 public:
  DiagMap() = default;
  /// Throws ValidationError on range or naturality failures.
  DiagMap(Diagram dom, Diagram cod, std::vector<Function> components);

  static DiagMap identity(const Diagram& d);
  /// The unique map out of the empty diagram.
  static DiagMap from_initial(const Diagram& cod);
  /// The unique map into the all-singleton diagram.
  static DiagMap to_terminal(const Diagram& dom);

  const Diagram& dom() const { return dom_; }
  const Diagram& cod() const { return cod_; }
  const PosetPtr& poset() const { return dom_.poset(); }
  const Function& component(std::size_t j) const { return components_[j]; }
  const std::vector<Function>& components() const { return components_; }

  Elem operator()(std::size_t j, Elem x) const { return components_[j][x]; }

  bool operator==(const DiagMap& other) const;

 private:
  Diagram dom_;
  Diagram cod_;
  std::vector<Function> components_;
};

/// g after f. Throws BoundaryMismatch unless f.cod() is g.dom().
DiagMap compose(const DiagMap& f, const DiagMap& g);

struct MapClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;
};

/// Pointwise injectivity/surjectivity, which decides mono/epi for poset-indexed
/// diagrams.
MapClass classify_map(const DiagMap& f);
bool is_mono(const DiagMap& f);
bool is_iso(const DiagMap& f);

/// Inverse of an isomorphism. Throws PreconditionError otherwise.
DiagMap inverse(const DiagMap& iso);

/// Inclusion of the subdiagram whose carrier over j is subset[j] (taken in
/// ascending order). The subsets must be closed under transitions.
DiagMap subobject(const Diagram& whole, const std::vector<std::vector<Elem>>& subset);

/// The map g with g;mono = f, when f lands in the image of the mono.
std::optional<DiagMap> factor_through_mono(const DiagMap& f, const DiagMap& mono);

void require_same_poset(const Diagram& a, const Diagram& b, const char* where);
void require_boundary(const Diagram& expected, const Diagram& actual, const char* where);

}  // namespace polyfun
