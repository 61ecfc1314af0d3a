#pragma once

#include <optional>

#include "polyfun/diagram.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/negation.hpp"
#include "polyfun/polynomial.hpp"

namespace polyfun {

/// P * X: E + B -> B, with the carrier of E + B ordered E first.
Polynomial times_linear(const Polynomial& poly);
/// (-) * X on a cartesian map.
CartesianPolyMap times_linear(const CartesianPolyMap& f, const Polynomial& from,
                              const Polynomial& to);

/// D p: 1 <- E ⊠_B E -> E -> 1, the middle leg π1 after ¬δ_p.
struct CandidateDerivative {
  Polynomial poly;
  FibrePower kernel_pair;
  DistinctTuples distinct_pairs;
  DiagMap diagonal;
};

CandidateDerivative candidate_derivative(const Polynomial& poly, const Budget& budget = {});

/// D on a cartesian map whose E-component is fibrewise injective on distinct
/// pairs. Throws PreconditionError otherwise.
CartesianPolyMap derivative_map(const CartesianPolyMap& f, const CandidateDerivative& from,
                                const CandidateDerivative& to);

/// Unit p -> D(p * X); always a cartesian map.
CartesianPolyMap derivative_unit(const Polynomial& poly, const Budget& budget = {});

/// Counit (D p) * X -> p: on E, π2 after the decidability map of δ_p.
/// The middle square is a pullback iff δ_p is decidable.
CartesianPolyMap derivative_counit(const Polynomial& poly, const Budget& budget = {});

struct AdjunctionWitness {
  CartesianPolyMap unit;    // p -> D(p * X)
  CartesianPolyMap counit;  // (D p) * X -> p
  bool unit_cartesian = false;
  bool counit_cartesian = false;
  bool triangle_left = false;   // ε_{p*X} (η_p * X) = id
  bool triangle_right = false;  // D(ε_p) η_{Dp} = id
};

struct DerivativeResult {
  CandidateDerivative candidate;
  DecidabilityResult diagonal_decidability;
  bool decidable = false;
  /// Present when δ_p is decidable.
  std::optional<AdjunctionWitness> witness;
};

/// Throws PreconditionError unless the polynomial is one-variable.
DerivativeResult derivative(const Polynomial& poly, const Budget& budget = {});

/// Builds unit, counit and checks both triangle identities by exact equality.
/// Requires the counit to be computable (see derivative_counit).
AdjunctionWitness derivative_witness(const Polynomial& poly, const Budget& budget = {});

/// Order-F candidate derivative: 1 <- E ⊠_B E^{⊠F} -> E^{⊠F} -> 1.
struct OrderFCandidate {
  Polynomial poly;
  Diagram f;
  Diagram e_power;     // E^{×_B F}
  Diagram e_distinct;  // E^{⊠_B F}
  DiagMap power_diagonal;  // E -> E^{×_B F}
  DiagMap evaluation_pair;  // (ev, id): F × E^{⊠F} -> E ×_B E^{⊠F}
};

OrderFCandidate candidate_derivative_order(const Polynomial& poly, const Diagram& f,
                                           const Budget& budget = {});

}  // namespace polyfun
