#include "polyfun/derivative.hpp"

namespace polyfun {

namespace {

DiagMap constant_into(const Diagram& dom, const Diagram& point) {
  std::vector<Function> comps(dom.poset()->size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (point.size(j) != 1) throw PreconditionError("expected a terminal diagram");
    comps[j].assign(dom.size(j), 0);
  }
  return DiagMap(dom, point, std::move(comps));
}

Coproduct carrier_sum(const Polynomial& poly) {
  return Coproduct({poly.e(), poly.b()}, poly.poset());
}

DiagMap lift(const DiagMap& f, const DiagMap& mono, const char* where) {
  std::optional<DiagMap> g = factor_through_mono(f, mono);
  if (!g) throw PreconditionError(std::string(where) + ": map leaves the subobject");
  return *g;
}

// The pair (a, b) of maps X -> E over the same base, as a map into E ⊠_B E.
DiagMap pair_into_distinct(const CandidateDerivative& d, const DiagMap& a, const DiagMap& b,
                           const DiagMap& base, const char* where) {
  const DistinctTuples& t = d.distinct_pairs;
  return lift(t.power.mediate(a.dom(), {a, b}, base), t.inclusion, where);
}

DiagMap first_of_pair(const CandidateDerivative& d, std::size_t i) {
  return compose(d.distinct_pairs.inclusion, d.distinct_pairs.power.projections[i]);
}

}  // namespace

Polynomial times_linear(const Polynomial& poly) {
  require_one_variable(poly, "times_linear");
  Coproduct sum = carrier_sum(poly);
  DiagMap p = sum.copair({poly.p(), DiagMap::identity(poly.b())});
  return Polynomial(constant_into(sum.object(), poly.i()), p, poly.t());
}

CartesianPolyMap times_linear(const CartesianPolyMap& f, const Polynomial& from,
                              const Polynomial& to) {
  DiagMap on_e = coproduct_map(carrier_sum(from), carrier_sum(to), {f.on_e, f.on_b});
  return CartesianPolyMap{on_e, f.on_b};
}

CandidateDerivative candidate_derivative(const Polynomial& poly, const Budget& budget) {
  require_one_variable(poly, "candidate_derivative");
  DistinctTuples pairs = distinct_tuples(poly.p(), 2, budget);
  DiagMap diagonal = pairs.power.diagonal(poly.p());
  DiagMap p = compose(pairs.inclusion, pairs.power.projections[0]);
  Polynomial d(constant_into(pairs.object, poly.i()), p, constant_into(poly.e(), poly.j()));
  FibrePower kernel = pairs.power;
  return CandidateDerivative{std::move(d), std::move(kernel), std::move(pairs),
                             std::move(diagonal)};
}

CartesianPolyMap derivative_map(const CartesianPolyMap& f, const CandidateDerivative& from,
                                const CandidateDerivative& to) {
  DiagMap x = compose(first_of_pair(from, 0), f.on_e);
  DiagMap y = compose(first_of_pair(from, 1), f.on_e);
  DiagMap p_to = compose(to.diagonal, to.kernel_pair.to_base);
  DiagMap on_e = pair_into_distinct(to, x, y, compose(x, p_to), "derivative_map");
  return CartesianPolyMap{on_e, f.on_e};
}

CartesianPolyMap derivative_unit(const Polynomial& poly, const Budget& budget) {
  Polynomial q = times_linear(poly);
  Coproduct sum = carrier_sum(poly);
  CandidateDerivative dq = candidate_derivative(q, budget);
  const DiagMap& in_e = sum.injection(0);
  DiagMap in_b = sum.injection(1);
  DiagMap over = compose(poly.p(), in_b);
  // e goes to the pair (p e, e) inside E + B.
  DiagMap on_e = pair_into_distinct(dq, over, in_e, poly.p(), "derivative_unit");
  return CartesianPolyMap{on_e, in_b};
}

CartesianPolyMap derivative_counit(const Polynomial& poly, const Budget& budget) {
  CandidateDerivative d = candidate_derivative(poly, budget);
  Coproduct sum = carrier_sum(d.poly);
  DiagMap on_e = sum.copair({first_of_pair(d, 1), DiagMap::identity(poly.e())});
  return CartesianPolyMap{on_e, poly.p()};
}

AdjunctionWitness derivative_witness(const Polynomial& poly, const Budget& budget) {
  AdjunctionWitness w;
  CandidateDerivative d = candidate_derivative(poly, budget);
  Polynomial q = times_linear(poly);
  Polynomial dq = candidate_derivative(q, budget).poly;
  w.unit = derivative_unit(poly, budget);
  w.counit = derivative_counit(poly, budget);
  w.unit_cartesian = is_cartesian(w.unit, poly, dq);
  w.counit_cartesian = is_cartesian(w.counit, times_linear(d.poly), poly);

  try {
    CartesianPolyMap unit_x = times_linear(w.unit, poly, dq);
    CartesianPolyMap counit_q = derivative_counit(q, budget);
    w.triangle_left = compose(unit_x, counit_q) == identity_map(q);
  } catch (const PreconditionError&) {
    w.triangle_left = false;
  }
  try {
    CartesianPolyMap unit_d = derivative_unit(d.poly, budget);
    CandidateDerivative dd = candidate_derivative(times_linear(d.poly), budget);
    CartesianPolyMap d_counit = derivative_map(w.counit, dd, d);
    w.triangle_right = compose(unit_d, d_counit) == identity_map(d.poly);
  } catch (const PreconditionError&) {
    w.triangle_right = false;
  }
  return w;
}

DerivativeResult derivative(const Polynomial& poly, const Budget& budget) {
  require_one_variable(poly, "derivative");
  CandidateDerivative d = candidate_derivative(poly, budget);
  DerivativeResult out;
  out.diagonal_decidability = decidability(d.diagonal, budget);
  out.candidate = std::move(d);
  out.decidable = out.diagonal_decidability.decidable;
  if (out.decidable) out.witness = derivative_witness(poly, budget);
  return out;
}

OrderFCandidate candidate_derivative_order(const Polynomial& poly, const Diagram& f,
                                           const Budget& budget) {
  require_one_variable(poly, "candidate_derivative_order");
  const PosetPtr& poset = poly.poset();
  const DiagMap& p = poly.p();
  Product fe = product({f, poly.e()}, poset, budget);
  Product fb = product({f, poly.b()}, poset, budget);
  DiagMap f_times_p = fb.mediate(fe.object, {fe.projections[0], compose(fe.projections[1], p)});
  DpbResult power = dpb(f_times_p, fb.projections[1], budget);

  // E -> E^{×F}: the pullback F×E -> E of F×B -> B along p mediates.
  DpbCompetitor diag{fe.projections[1], DiagMap::identity(fe.object), p};
  DiagMap power_diagonal = dpb_mediate(power, diag).on_side;
  NegationResult distinct = negate(power_diagonal, budget);

  // (ev, id): F × E^{⊠F} -> E ×_B E^{⊠F}
  const DiagMap& incl = distinct.negmap;
  DiagMap distinct_to_b = compose(incl, power.right);
  Product f_distinct = product({f, distinct.complement}, poset, budget);
  DiagMap onto_fb = fb.mediate(f_distinct.object,
                               {f_distinct.projections[0],
                                compose(f_distinct.projections[1], distinct_to_b)});
  DiagMap into_apex = power.apex_pullback->mediate(
      f_distinct.object, onto_fb, compose(f_distinct.projections[1], incl));
  DiagMap ev = compose(compose(into_apex, power.counit), fe.projections[1]);
  Pullback target = pullback(p, distinct_to_b, budget);
  DiagMap evaluation_pair = target.mediate(f_distinct.object, ev, f_distinct.projections[1]);

  NegationResult missed = negate(evaluation_pair, budget);
  DiagMap cand_p = compose(missed.negmap, target.to_right);
  Polynomial cand(constant_into(missed.complement, poly.i()), cand_p,
                  constant_into(distinct.complement, poly.j()));
  return OrderFCandidate{std::move(cand), f,           power.side, distinct.complement,
                         power_diagonal,  evaluation_pair};
}

}  // namespace polyfun
