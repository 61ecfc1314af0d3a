#pragma once

#include <optional>
#include <vector>

#include "polyfun/derivative.hpp"
#include "polyfun/diagram.hpp"
#include "polyfun/dpb.hpp"
#include "polyfun/polynomial.hpp"

namespace polyfun {

/// X <-left- M -right-> Y with left a dense mono: a morphism X -> Y of the
/// localization at dense monos.
class Span {
 public:
  Span() = default;
  /// Throws PreconditionError unless left is a dense mono.
  Span(DiagMap left, DiagMap right, const Budget& budget = {});

  const Diagram& mid() const { return left_.dom(); }
  const DiagMap& left() const { return left_; }
  const DiagMap& right() const { return right_; }
  const Diagram& source() const { return left_.cod(); }
  const Diagram& target() const { return right_.cod(); }

  /// Skips the density check; for legs already known to be dense monos.
  static Span trusted(DiagMap left, DiagMap right);

 private:
  DiagMap left_;
  DiagMap right_;
};

Span embed(const DiagMap& f);
Span span_identity(const Diagram& x);

/// g after f, by pullback of f.right against g.left.
Span span_compose(const Span& g, const Span& f, const Budget& budget = {});

/// Whether f and f' are identified: some T with dense mono T -> X makes the
/// connecting diagram commute. Decided via the maximal such T.
bool span_equal(const Span& f, const Span& g, const Budget& budget = {});

/// (w, id): the inverse of embed(w). Throws PreconditionError unless w is a
/// dense mono.
Span invert_dense_mono(const DiagMap& w, const Budget& budget = {});

/// embed(g) for the first total extension g of the span, if one exists.
Span normalize(const Span& f);

/// Pullback of spans f: X ⇸ Z and g: Y ⇸ Z.
struct SpanPullback {
  Diagram apex;
  Span to_left;   // apex ⇸ X
  Span to_right;  // apex ⇸ Y
  Pullback inner;
};

SpanPullback span_pullback(const Span& f, const Span& g, const Budget& budget = {});

/// Mediator C ⇸ apex for a cone a: C ⇸ X, b: C ⇸ Y with f a ≡ g b.
/// Throws PreconditionError if the cone does not commute.
Span span_pullback_mediate(const SpanPullback& pb, const Span& f, const Span& g,
                           const Span& a, const Span& b, const Budget& budget = {});

/// Whether a ⇸ X <- ... commutes up to span equality: f a ≡ g b.
bool span_square_commutes(const Span& a, const Span& f, const Span& b, const Span& g,
                          const Budget& budget = {});

/// Distributivity pullback around u: A ⇸ E and p: E ⇸ B in the localization.
///
///   X --top--> Y
///   |counit    | right = (id, Π_p u')
///   A ⇸ E ⇸ B
struct SpanDpb {
  Diagram apex;
  Diagram side;
  Span counit;  // X ⇸ A, (id, Π_{w''} ẽ)
  Span top;     // X ⇸ Y
  Span right;   // Y ⇸ B
  // Construction stages.
  Pullback inner;   // P = N ×_E M
  DpbResult core;   // around u' and p
};

SpanDpb span_dpb(const Span& u, const Span& p, const Budget& budget = {});

/// Derivative in the localization: the candidate derivative with the counit's
/// comparison E ⊠_B E + E -> E ×_B E inverted.
struct LocalizedDerivative {
  DerivativeResult e_level;
  AdjunctionWitness witness;
  Span comparison;          // embed(decidability map)
  Span comparison_inverse;  // invert_dense_mono(decidability map)
  bool comparison_invertible = false;
  bool counit_pullback_localized = false;
  bool triangle_left = false;
  bool triangle_right = false;
};

LocalizedDerivative localized_derivative(const Polynomial& poly, const Budget& budget = {});

}  // namespace polyfun
