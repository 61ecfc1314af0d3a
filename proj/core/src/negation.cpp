#include "polyfun/negation.hpp"

#include "polyfun/search.hpp"

namespace polyfun {

namespace {

// The map from an empty diagram into the initial diagram.
DiagMap empty_to_initial(const Diagram& empty) {
  return DiagMap(empty, Diagram::initial(empty.poset()),
                 std::vector<Function>(empty.poset()->size()));
}

}  // namespace

NegationResult negate(const DiagMap& p, const Budget& budget) {
  DpbResult d = dpb(DiagMap::from_initial(p.dom()), p, budget);
  return NegationResult{d.side, d.right, std::move(d)};
}

DiagMap double_negation(const DiagMap& p, const Budget& budget) {
  return negate(negate(p, budget).negmap, budget).negmap;
}

DensityClass classify_density(const DiagMap& f, const Budget& budget) {
  DensityClass out;
  NegationResult once = negate(f, budget);
  out.dense = once.complement.empty();
  out.closed = slice_isomorphic(negate(once.negmap, budget).negmap, f);
  return out;
}

bool is_dense(const DiagMap& f, const Budget& budget) {
  return negate(f, budget).complement.empty();
}

bool is_dense_mono(const DiagMap& f, const Budget& budget) {
  return is_mono(f) && is_dense(f, budget);
}

FactorizationResult factorize_dense_closed(const DiagMap& p, const Budget& budget) {
  NegationResult once = negate(p, budget);
  NegationResult twice = negate(once.negmap, budget);
  // p is disjoint from ¬p, so (E, p) is a pullback around 0 -> dom ¬p and ¬p.
  Pullback disjoint = pullback(once.negmap, p, budget);
  if (!disjoint.object.empty()) {
    throw Error("factorize_dense_closed: p meets its negation");
  }
  DpbCompetitor competitor{disjoint.to_right, empty_to_initial(disjoint.object), p};
  DpbFactorization f = dpb_mediate(twice.construction, competitor);
  return FactorizationResult{twice.complement, f.on_side, twice.negmap};
}

std::optional<DiagMap> connect_factorizations(const DiagMap& d, const DiagMap& c,
                                              const DiagMap& d2, const DiagMap& c2) {
  std::optional<DiagMap> found;
  SearchOptions opts;
  opts.bijective = true;
  for_each_map(c.dom(), c2.dom(), {OverConstraint{c, c2}}, opts, [&](const DiagMap& alpha) {
    if (compose(d, alpha) == d2) {
      found = alpha;
      return false;
    }
    return true;
  });
  return found;
}

DistinctTuples distinct_tuples(const DiagMap& p, std::size_t n, const Budget& budget) {
  if (n == 0) throw PreconditionError("distinct_tuples: arity must be at least 1");
  FibrePower power = fibre_power(p, n, budget);
  NegationResult neg = negate(power.diagonal(p), budget);
  return DistinctTuples{n, neg.complement, neg.negmap, std::move(power)};
}

DistinctTuples pairwise_distinct_tuples(const DiagMap& p, std::size_t n, const Budget& budget) {
  FibrePower power = fibre_power(p, n, budget);
  const Diagram& whole = power.object;
  const std::size_t poset_size = p.poset()->size();
  std::vector<std::vector<bool>> keep(poset_size);
  for (std::size_t j = 0; j < poset_size; ++j) keep[j].assign(whole.size(j), true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      DiagMap diag = equalizer(power.projections[i], power.projections[k]);
      NegationResult neg = negate(diag, budget);
      std::vector<std::vector<bool>> hit(poset_size);
      for (std::size_t j = 0; j < poset_size; ++j) {
        hit[j].assign(whole.size(j), false);
        for (Elem x : neg.negmap.component(j)) hit[j][x] = true;
        for (Elem x = 0; x < whole.size(j); ++x) keep[j][x] = keep[j][x] && hit[j][x];
      }
    }
  }
  std::vector<std::vector<Elem>> subset(poset_size);
  for (std::size_t j = 0; j < poset_size; ++j) {
    for (Elem x = 0; x < whole.size(j); ++x) {
      if (keep[j][x]) subset[j].push_back(x);
    }
  }
  DiagMap inclusion = subobject(whole, subset);
  return DistinctTuples{n, inclusion.dom(), inclusion, std::move(power)};
}

DecidabilityResult decidability(const DiagMap& m, const Budget& budget) {
  if (!is_mono(m)) throw PreconditionError("decidability: input is not mono");
  NegationResult neg = negate(m, budget);
  Coproduct sum({m.dom(), neg.complement}, m.poset());
  DiagMap map = sum.copair({m, neg.negmap});
  DecidabilityResult out{map, sum, neg};
  out.decidable = is_iso(map);
  out.map_is_mono = is_mono(map);
  out.map_is_dense = is_dense(map, budget);
  return out;
}

DiagMap neg_contravariant(const DiagMap& a, const DiagMap& b, const DiagMap& inclusion,
                          const Budget& budget) {
  if (!is_mono(a) || !is_mono(b)) throw PreconditionError("neg_contravariant: inputs must be mono");
  require_boundary(a.cod(), b.cod(), "neg_contravariant");
  if (!(compose(inclusion, b) == a)) {
    throw PreconditionError("neg_contravariant: inclusion is not a map over X");
  }
  NegationResult na = negate(a, budget);
  NegationResult nb = negate(b, budget);
  // ¬B is disjoint from A since A factors through B.
  Pullback meet = pullback(a, nb.negmap, budget);
  if (!meet.object.empty()) throw Error("neg_contravariant: ¬B meets A");
  DpbCompetitor competitor{meet.to_right, empty_to_initial(meet.object), nb.negmap};
  return dpb_mediate(na.construction, competitor).on_side;
}

Closure closure(const DiagMap& a, const Budget& budget) {
  FactorizationResult f = factorize_dense_closed(a, budget);
  return Closure{f.closed_part, f.dense_part};
}

DiagMap intersect(const DiagMap& a, const DiagMap& b, const Budget& budget) {
  Pullback pb = pullback(a, b, budget);
  return compose(pb.to_left, a);
}

bool subobject_leq(const DiagMap& a, const DiagMap& b) {
  require_boundary(a.cod(), b.cod(), "subobject_leq");
  return find_map(a.dom(), b.dom(), {OverConstraint{a, b}}).has_value();
}

}  // namespace polyfun
