#pragma once

#include <memory>

#include "polyfun/diagram.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/slice.hpp"

namespace polyfun {

/// Distributivity pullback around u: A -> E and p: E -> B.
///
///   X --top--> Y
///   |counit    |right = Π_p u
///   A --u--> E --p--> B
///
/// X is the pullback of `right` along p; counit evaluates families.
struct DpbResult {
  DiagMap u;
  DiagMap p;
  Diagram apex;  // X
  Diagram side;  // Y
  DiagMap counit;
  DiagMap top;
  DiagMap right;
  DiagMap apex_to_e;  // pullback projection X -> E
  std::shared_ptr<const DependentProduct> product;
  std::shared_ptr<const Pullback> apex_pullback;
};

DpbResult dpb(const DiagMap& u, const DiagMap& p, const Budget& budget = {});

/// Another pullback around u and p:
///
///   X' --top--> Y'
///   |left       |right
///   A --u--> E --p--> B
///
/// where the square (u left, top, p, right) is a pullback.
struct DpbCompetitor {
  DiagMap top;
  DiagMap left;
  DiagMap right;
};

struct DpbFactorization {
  DiagMap on_side;  // Y' -> Y
  DiagMap on_apex;  // X' -> X
};

/// The unique factorization of a competitor through the distributivity
/// pullback. Throws PreconditionError if the competitor is not a pullback
/// around u and p.
DpbFactorization dpb_mediate(const DpbResult& d, const DpbCompetitor& competitor);

/// Whether `competitor` is a pullback around d.u and d.p.
bool is_pullback_around(const DpbResult& d, const DpbCompetitor& competitor);

}  // namespace polyfun
