#pragma once

#include <cstddef>
#include <optional>

#include "polyfun/dpb.hpp"
#include "polyfun/limits.hpp"

namespace polyfun {

/// ¬p = Π_p 0, the complement of the image of p.
struct NegationResult {
  Diagram complement;
  DiagMap negmap;  // complement -> B, mono
  DpbResult construction;
};

NegationResult negate(const DiagMap& p, const Budget& budget = {});

/// ¬¬p as a map into cod(p).
DiagMap double_negation(const DiagMap& p, const Budget& budget = {});

struct DensityClass {
  bool dense = false;
  bool closed = false;
};

/// dense iff ¬f is empty; closed iff ¬¬f is isomorphic to f over cod(f).
DensityClass classify_density(const DiagMap& f, const Budget& budget = {});
bool is_dense(const DiagMap& f, const Budget& budget = {});
bool is_dense_mono(const DiagMap& f, const Budget& budget = {});

/// p = closed_part after dense_part with closed_part = ¬¬p.
struct FactorizationResult {
  Diagram image;
  DiagMap dense_part;
  DiagMap closed_part;
};

FactorizationResult factorize_dense_closed(const DiagMap& p, const Budget& budget = {});

/// The unique iso alpha with alpha d = d' and c' alpha = c between two
/// (dense, closed) factorizations of the same map, when one exists.
std::optional<DiagMap> connect_factorizations(const DiagMap& d, const DiagMap& c,
                                              const DiagMap& d2, const DiagMap& c2);

/// Negation of the n-diagonal E -> E^{×n}.
struct DistinctTuples {
  std::size_t n = 0;
  Diagram object;
  DiagMap inclusion;  // into power.object
  FibrePower power;
};

DistinctTuples distinct_tuples(const DiagMap& p, std::size_t n, const Budget& budget = {});

/// Intersection of the negations of every pairwise diagonal E^{×(n-1)} -> E^{×n}
/// (coordinate i repeated at position k). On the one-point poset: injective
/// n-tuples inside one fibre. Agrees with distinct_tuples at n = 2.
DistinctTuples pairwise_distinct_tuples(const DiagMap& p, std::size_t n,
                                        const Budget& budget = {});

/// Copairing A + ¬A -> X of a mono with its negation.
struct DecidabilityResult {
  DiagMap map;
  Coproduct sum;
  NegationResult negation;
  bool decidable = false;
  bool map_is_mono = false;
  bool map_is_dense = false;
};

/// Throws PreconditionError unless m is mono.
DecidabilityResult decidability(const DiagMap& m, const Budget& budget = {});

/// For monos a: A -> X, b: B -> X with b i = a, the induced mono ¬B -> ¬A over X.
DiagMap neg_contravariant(const DiagMap& a, const DiagMap& b, const DiagMap& inclusion,
                          const Budget& budget = {});

/// Closure ¬¬A of a subobject and the unit A -> closure.
struct Closure {
  DiagMap closure;  // ¬¬A -> X
  DiagMap unit;     // A -> ¬¬A
};

Closure closure(const DiagMap& a, const Budget& budget = {});

/// A ∩ B of two monos into the same X, as a mono into X.
DiagMap intersect(const DiagMap& a, const DiagMap& b, const Budget& budget = {});

/// Whether mono a factors through mono b over their common codomain.
bool subobject_leq(const DiagMap& a, const DiagMap& b);

}  // namespace polyfun
