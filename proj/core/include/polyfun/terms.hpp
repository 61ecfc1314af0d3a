#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "polyfun/negation.hpp"
#include "polyfun/polynomial.hpp"

namespace polyfun {

/// I <- 0 -> B\im p -> J
Polynomial constant_term(const Polynomial& poly, const Budget& budget = {});

/// The terminal pullback of shape n·A -> A over p.
///
///   n·base --codiag--> base
///     |left              |base_to_b
///     E ------p------->  B
struct NFibreResult {
  std::size_t n = 0;
  Diagram term_base;
  DiagMap base_to_b;
  Coproduct copies;  // n·term_base
  DiagMap left;      // n·term_base -> E
  DiagMap codiag;    // n·term_base -> term_base
  /// The dpb the term base comes from: around n·δ and the projection
  /// E^{⊠n} ×_B E -> E^{⊠n}, or around 0 -> E and p when n = 0.
  DpbResult construction;
  // Present for n >= 1.
  std::optional<DistinctTuples> tuples;
  std::optional<Coproduct> tuple_copies;  // n·E^{⊠n}
  DiagMap tuple_of_base;                  // term_base -> E^{⊠n}
  /// The apex of the dpb is n·term_base with the top map as codiagonal.
  bool top_is_codiag = false;
};

NFibreResult n_fibre_pullback(const DiagMap& p, std::size_t n, const Budget& budget = {});

/// A pullback square n·A -> A over p whose left leg is g: n·A -> E (summand i
/// is g_i) and right leg f: A -> B.
struct NFibreCompetitor {
  Diagram a;
  std::vector<DiagMap> legs;  // g_i: A -> E, i < n
  DiagMap f;                  // A -> B
};

/// h: A -> term_base with left (n×h) = g and base_to_b h = f.
/// Throws PreconditionError if the competitor is not such a pullback.
DiagMap n_fibre_mediate(const NFibreResult& r, const DiagMap& p,
                        const NFibreCompetitor& competitor, const Budget& budget = {});

struct HomTerm {
  Polynomial term;
  CartesianPolyMap counit;  // term -> poly
  NFibreResult fibres;
};

/// I <- n·base -> base -> J built from the n-fibre pullback.
HomTerm homterm(const Polynomial& poly, std::size_t n, const Budget& budget = {});

/// Fibres of a given arity, or with a given multiset of s-labels.
struct TermSpec {
  std::variant<std::size_t, std::vector<Elem>> order;  // n, or σ as I-indices

  static TermSpec arity(std::size_t n) { return TermSpec{n}; }
  static TermSpec labeling(std::vector<Elem> sigma) { return TermSpec{std::move(sigma)}; }
};

/// One-point poset only: restricts P to the fibres selected by `spec`.
Polynomial classical_term(const Polynomial& poly, const TermSpec& spec);

}  // namespace polyfun
