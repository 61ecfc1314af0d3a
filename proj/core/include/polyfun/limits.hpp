#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "polyfun/diagram.hpp"

namespace polyfun {

/// A finite diagram of DiagMaps: vertices are diagrams, arrows connect them.
struct LimitShape {
  struct Arrow {
    std::size_t from;
    std::size_t to;
    DiagMap map;
  };

  std::vector<Diagram> objects;
  std::vector<Arrow> arrows;
};

/// Pointwise limit of a LimitShape.
///
/// Over each poset element the carrier is the set of compatible tuples
/// (one member per shape object), ordered lexicographically by member index.
class Limit {
 public:
  Limit(const LimitShape& shape, PosetPtr poset, const Budget& budget = {});

  const Diagram& object() const { return object_; }
  const DiagMap& projection(std::size_t i) const { return projections_[i]; }
  const std::vector<DiagMap>& projections() const { return projections_; }

  /// Tuple of member indices for element x over j.
  const std::vector<Elem>& tuple(std::size_t j, Elem x) const { return tuples_[j][x]; }
  std::optional<Elem> find(std::size_t j, const std::vector<Elem>& tuple) const;

  /// The unique map from `apex` commuting with `legs` (one per shape object).
  /// Throws ValidationError if the legs do not form a cone.
  DiagMap mediate(const Diagram& apex, const std::vector<DiagMap>& legs) const;

 private:
  LimitShape shape_;
  Diagram object_;
  std::vector<DiagMap> projections_;
  std::vector<std::vector<std::vector<Elem>>> tuples_;
  std::vector<std::map<std::vector<Elem>, Elem>> index_;
};

Limit finite_limit(const LimitShape& shape, PosetPtr poset, const Budget& budget = {});

/// Pullback of f: A -> C and g: B -> C; tuples (a, b).
struct Pullback {
  Diagram object;
  DiagMap to_left;   // onto dom(f)
  DiagMap to_right;  // onto dom(g)
  DiagMap f;
  DiagMap g;
  std::shared_ptr<const Limit> limit;

  DiagMap mediate(const Diagram& apex, const DiagMap& a, const DiagMap& b) const;
};

Pullback pullback(const DiagMap& f, const DiagMap& g, const Budget& budget = {});

struct Product {
  Diagram object;
  std::vector<DiagMap> projections;
  std::shared_ptr<const Limit> limit;

  DiagMap mediate(const Diagram& apex, const std::vector<DiagMap>& legs) const;
};

Product product(const std::vector<Diagram>& factors, PosetPtr poset,
                const Budget& budget = {});

/// Subobject of dom(f) on which f and g agree.
DiagMap equalizer(const DiagMap& f, const DiagMap& g);

/// n-fold fibre power of p: E -> B, with projections onto each factor and the
/// structure map to B. For n = 0 the object is B itself.
struct FibrePower {
  std::size_t n = 0;
  Diagram object;
  std::vector<DiagMap> projections;
  DiagMap to_base;
  std::shared_ptr<const Limit> limit;

  /// Map into the power from legs l_i: X -> E with p l_i all equal to `base`.
  DiagMap mediate(const Diagram& apex, const std::vector<DiagMap>& legs,
                  const DiagMap& base) const;
  /// The n-diagonal E -> E^{×n}.
  DiagMap diagonal(const DiagMap& p) const;
};

FibrePower fibre_power(const DiagMap& p, std::size_t n, const Budget& budget = {});

/// Finite coproduct; carrier is the tagged union ordered summand by summand.
class Coproduct {
 public:
  Coproduct() = default;
  Coproduct(const std::vector<Diagram>& summands, PosetPtr poset);

  const Diagram& object() const { return object_; }
  const DiagMap& injection(std::size_t i) const { return injections_[i]; }
  std::size_t arity() const { return injections_.size(); }

  /// (summand, index within summand) of element x over j.
  std::pair<std::size_t, Elem> locate(std::size_t j, Elem x) const;
  Elem inject(std::size_t summand, std::size_t j, Elem x) const;

  /// Copairing of legs summand_i -> X.
  DiagMap copair(const std::vector<DiagMap>& legs) const;

 private:
  Diagram object_;
  std::vector<DiagMap> injections_;
  std::vector<std::vector<std::size_t>> offsets_;  // [j][summand]
};

Coproduct coproduct(const std::vector<Diagram>& summands, PosetPtr poset);

/// Sum of maps f_i: A_i -> B_i as a map between the coproducts.
DiagMap coproduct_map(const Coproduct& dom, const Coproduct& cod,
                      const std::vector<DiagMap>& maps);

/// f restricted over each summand of a coproduct codomain.
struct SumDecomposition {
  std::vector<DiagMap> parts;       // part_i: pullback of f along injection i
  std::vector<DiagMap> part_to_dom; // pullback projections into dom(f)
  DiagMap comparison;               // sum of part domains -> dom(f)
  bool comparison_is_iso = false;
};

SumDecomposition decompose_over_sum(const DiagMap& f, const Coproduct& sum);

/// Whether the commuting square top;right = left;bottom is a pullback.
bool is_pullback_square(const DiagMap& top, const DiagMap& left,
                        const DiagMap& right, const DiagMap& bottom);

}  // namespace polyfun
