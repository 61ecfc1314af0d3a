#include "polyfun/localization.hpp"

#include "polyfun/negation.hpp"
#include "polyfun/search.hpp"

namespace polyfun {

namespace {

// The top map of a dpb whose counit is invertible, read as a map out of A.
DiagMap top_through_counit(const DpbResult& d, const char* where) {
  if (!is_iso(d.counit)) throw Error(std::string(where) + ": counit is not invertible");
  return compose(inverse(d.counit), d.top);
}

bool localized_iso(const DiagMap& f, const Budget& budget) {
  if (!is_dense_mono(f, budget)) return false;
  Span there = embed(f);
  Span back = invert_dense_mono(f, budget);
  return span_equal(span_compose(back, there, budget), span_identity(f.dom()), budget) &&
         span_equal(span_compose(there, back, budget), span_identity(f.cod()), budget);
}

bool same_in_localization(const CartesianPolyMap& a, const CartesianPolyMap& b,
                          const Budget& budget) {
  return span_equal(embed(a.on_e), embed(b.on_e), budget) &&
         span_equal(embed(a.on_b), embed(b.on_b), budget);
}

}  // namespace

Span::Span(DiagMap left, DiagMap right, const Budget& budget)
    : left_(std::move(left)), right_(std::move(right)) {
  require_boundary(left_.dom(), right_.dom(), "Span");
  if (!is_dense_mono(left_, budget)) {
    throw PreconditionError("Span: left leg is not a dense mono");
  }
}

Span Span::trusted(DiagMap left, DiagMap right) {
  require_boundary(left.dom(), right.dom(), "Span");
  Span s;
  s.left_ = std::move(left);
  s.right_ = std::move(right);
  return s;
}

Span embed(const DiagMap& f) { return Span::trusted(DiagMap::identity(f.dom()), f); }

Span span_identity(const Diagram& x) { return embed(DiagMap::identity(x)); }

Span span_compose(const Span& g, const Span& f, const Budget& budget) {
  Pullback pb = pullback(f.right(), g.left(), budget);
  return Span::trusted(compose(pb.to_left, f.left()), compose(pb.to_right, g.right()));
}

bool span_equal(const Span& f, const Span& g, const Budget& budget) {
  require_boundary(f.source(), g.source(), "span_equal");
  require_boundary(f.target(), g.target(), "span_equal");
  Pullback pb = pullback(f.left(), g.left(), budget);
  DiagMap agree = equalizer(compose(pb.to_left, f.right()), compose(pb.to_right, g.right()));
  return is_dense(compose(compose(agree, pb.to_left), f.left()), budget);
}

Span invert_dense_mono(const DiagMap& w, const Budget& budget) {
  return Span(w, DiagMap::identity(w.dom()), budget);
}

Span normalize(const Span& f) {
  std::optional<DiagMap> total;
  for_each_map(f.source(), f.target(), {}, {}, [&](const DiagMap& g) {
    if (compose(f.left(), g) == f.right()) {
      total = g;
      return false;
    }
    return true;
  });
  return total ? embed(*total) : f;
}

SpanPullback span_pullback(const Span& f, const Span& g, const Budget& budget) {
  Pullback pb = pullback(f.right(), g.right(), budget);
  Span to_left = embed(compose(pb.to_left, f.left()));
  Span to_right = embed(compose(pb.to_right, g.left()));
  return SpanPullback{pb.object, std::move(to_left), std::move(to_right), std::move(pb)};
}

Span span_pullback_mediate(const SpanPullback& pb, const Span& f, const Span& g,
                           const Span& a, const Span& b, const Budget& budget) {
  // Common refinement K of the cone's dense legs.
  Pullback k = pullback(a.left(), b.left(), budget);
  DiagMap alpha = compose(k.to_left, a.right());
  DiagMap beta = compose(k.to_right, b.right());
  // Where alpha lands in dom f and beta lands in dom g.
  Pullback km = pullback(alpha, f.left(), budget);
  Pullback kn = pullback(beta, g.left(), budget);
  Pullback r = pullback(km.to_left, kn.to_left, budget);
  DiagMap rm = compose(r.to_left, km.to_right);
  DiagMap rn = compose(r.to_right, kn.to_right);
  DiagMap agree = equalizer(compose(rm, f.right()), compose(rn, g.right()));
  DiagMap into_k = compose(compose(agree, r.to_left), km.to_left);
  if (!is_dense(into_k, budget)) {
    throw PreconditionError("span_pullback_mediate: cone does not commute");
  }
  DiagMap into_c = compose(compose(into_k, k.to_left), a.left());
  DiagMap mediator = pb.inner.mediate(agree.dom(), compose(agree, rm), compose(agree, rn));
  return Span::trusted(into_c, mediator);
}

bool span_square_commutes(const Span& a, const Span& f, const Span& b, const Span& g,
                          const Budget& budget) {
  return span_equal(span_compose(f, a, budget), span_compose(g, b, budget), budget);
}

SpanDpb span_dpb(const Span& u, const Span& p, const Budget& budget) {
  require_boundary(u.target(), p.source(), "span_dpb");
  const DiagMap& z = u.left();
  const DiagMap& w = p.left();
  Pullback inner = pullback(u.right(), w, budget);
  const DiagMap& w1 = inner.to_left;   // M' -> M
  const DiagMap& u1 = inner.to_right;  // M' -> N
  DpbResult core = dpb(u1, p.right(), budget);
  const DiagMap& e = core.counit;

  DpbResult over_a = dpb(w1, z, budget);
  DiagMap z1 = top_through_counit(over_a, "span_dpb");
  const DiagMap& w2 = over_a.right;
  DpbResult over_q = dpb(e, z1, budget);
  DiagMap z2 = top_through_counit(over_q, "span_dpb");
  const DiagMap& e1 = over_q.right;
  DpbResult outer = dpb(e1, w2, budget);
  DiagMap w3 = top_through_counit(outer, "span_dpb");
  const DiagMap& e2 = outer.right;

  SpanDpb out;
  out.apex = outer.side;
  out.side = core.side;
  out.counit = embed(e2);
  out.top = Span(compose(z2, w3), core.top, budget);
  out.right = embed(core.right);
  out.inner = std::move(inner);
  out.core = std::move(core);
  return out;
}

LocalizedDerivative localized_derivative(const Polynomial& poly, const Budget& budget) {
  LocalizedDerivative out;
  out.e_level = derivative(poly, budget);
  out.witness = derivative_witness(poly, budget);
  const DiagMap& d = out.e_level.diagonal_decidability.map;
  out.comparison = embed(d);
  out.comparison_inverse = invert_dense_mono(d, budget);
  out.comparison_invertible = localized_iso(d, budget);

  // The counit square compared against E ×_B E.
  const CandidateDerivative& cand = out.e_level.candidate;
  Polynomial dx = times_linear(cand.poly);
  const FibrePower& kp = cand.kernel_pair;
  DiagMap into_kp = kp.mediate(dx.e(), {dx.p(), out.witness.counit.on_e},
                               compose(dx.p(), poly.p()));
  out.counit_pullback_localized = localized_iso(into_kp, budget);

  Polynomial q = times_linear(poly);
  CandidateDerivative dq = candidate_derivative(q, budget);
  CartesianPolyMap left = compose(times_linear(out.witness.unit, poly, dq.poly),
                                  derivative_counit(q, budget));
  out.triangle_left = same_in_localization(left, identity_map(q), budget);

  CandidateDerivative ddx = candidate_derivative(dx, budget);
  CartesianPolyMap right = compose(derivative_unit(cand.poly, budget),
                                   derivative_map(out.witness.counit, ddx, cand));
  out.triangle_right = same_in_localization(right, identity_map(cand.poly), budget);
  return out;
}

}  // namespace polyfun
