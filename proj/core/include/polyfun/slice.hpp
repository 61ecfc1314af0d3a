#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "polyfun/diagram.hpp"
#include "polyfun/limits.hpp"

namespace polyfun {

/// An object of the slice over anchor.cod().
struct SliceObj {
  DiagMap anchor;

  const Diagram& total() const { return anchor.dom(); }
  const Diagram& base() const { return anchor.cod(); }
};

/// Pullback of y along p: E -> B, anchored at E.
SliceObj delta(const DiagMap& p, const SliceObj& y, const Budget& budget = {});

/// Postcomposition with p.
SliceObj sigma(const DiagMap& p, const SliceObj& x);

/// The dependent product of x: X -> E along p: E -> B.
///
/// An element over (j, b) is a family choosing, for every k >= j and every e in
/// E(k) lying over the transport of b to k, an element of X(k) over e, such that
/// the choices commute with the transitions of X and E. On the one-point poset
/// these are exactly the sections of x over the fibre of p at b.
class DependentProduct {
 public:
  /// One slot of a family: element e of E over poset element k.
  struct Slot {
    std::size_t k;
    Elem e;
    bool operator<(const Slot& o) const { return k != o.k ? k < o.k : e < o.e; }
    bool operator==(const Slot& o) const { return k == o.k && e == o.e; }
  };

  DependentProduct(const DiagMap& p, const SliceObj& x, const Budget& budget = {});

  /// Π_p x as a slice over B.
  const SliceObj& result() const { return result_; }
  const DiagMap& along() const { return p_; }
  const SliceObj& argument() const { return x_; }

  /// The slots of any family over (j, b), in canonical order.
  std::vector<Slot> slots(std::size_t j, Elem b) const;
  /// Chosen element of X at slot (k, e) for family y over j.
  Elem value(std::size_t j, Elem y, std::size_t k, Elem e) const;
  /// Element over (j, b) whose family takes `values` on slots(j, b).
  std::optional<Elem> find(std::size_t j, Elem b, const std::vector<Elem>& values) const;

 private:
  DiagMap p_;
  SliceObj x_;
  SliceObj result_;
  // Per poset element: for each element y, its base point and family values.
  std::vector<std::vector<Elem>> base_of_;
  std::vector<std::vector<std::vector<Elem>>> values_;
  std::vector<std::map<std::pair<Elem, std::vector<Elem>>, Elem>> index_;
};

SliceObj pi(const DiagMap& p, const SliceObj& x, const Budget& budget = {});

/// Slice over B given by an arbitrary map into B.
inline SliceObj as_slice(const DiagMap& m) { return SliceObj{m}; }

}  // namespace polyfun
