#include "polyfun/terms.hpp"

#include <algorithm>
#include <optional>

namespace polyfun {

namespace {

DiagMap empty_to_initial(const Diagram& empty) {
  return DiagMap(empty, Diagram::initial(empty.poset()),
                 std::vector<Function>(empty.poset()->size()));
}

Coproduct copies_of(const Diagram& d, std::size_t n) {
  return Coproduct(std::vector<Diagram>(n, d), d.poset());
}

DiagMap codiagonal(const Coproduct& copies, const Diagram& d) {
  if (copies.arity() == 0) {
    return DiagMap(copies.object(), d, std::vector<Function>(d.poset()->size()));
  }
  return copies.copair(std::vector<DiagMap>(copies.arity(), DiagMap::identity(d)));
}

}  // namespace

Polynomial constant_term(const Polynomial& poly, const Budget& budget) {
  NegationResult neg = negate(poly.p(), budget);
  Pullback restricted = pullback(poly.p(), neg.negmap, budget);
  return Polynomial(compose(restricted.to_left, poly.s()), restricted.to_right,
                    compose(neg.negmap, poly.t()));
}

NFibreResult n_fibre_pullback(const DiagMap& p, std::size_t n, const Budget& budget) {
  NFibreResult out;
  out.n = n;
  if (n == 0) {
    NegationResult neg = negate(p, budget);
    out.term_base = neg.complement;
    out.base_to_b = neg.negmap;
    out.copies = copies_of(neg.complement, 0);
    out.left = DiagMap(out.copies.object(), p.dom(), std::vector<Function>(p.poset()->size()));
    out.codiag = codiagonal(out.copies, out.term_base);
    out.construction = std::move(neg.construction);
    out.top_is_codiag = true;
    return out;
  }

  DistinctTuples tuples = pairwise_distinct_tuples(p, n, budget);
  const Diagram& distinct = tuples.object;
  const DiagMap tuple_to_b = compose(tuples.inclusion, tuples.power.to_base);
  // Q = E^{⊠n} ×_B E, with π: Q -> E^{⊠n}.
  Pullback q = pullback(p, tuple_to_b, budget);
  Coproduct tuple_copies = copies_of(distinct, n);
  std::vector<DiagMap> diagonals;
  for (std::size_t i = 0; i < n; ++i) {
    DiagMap coord = compose(tuples.inclusion, tuples.power.projections[i]);
    diagonals.push_back(q.mediate(distinct, coord, DiagMap::identity(distinct)));
  }
  DiagMap n_delta = tuple_copies.copair(diagonals);
  DpbResult d = dpb(n_delta, q.to_right, budget);

  out.term_base = d.side;
  out.tuple_of_base = d.right;
  out.base_to_b = compose(d.right, tuple_to_b);
  out.copies = copies_of(d.side, n);
  out.codiag = codiagonal(out.copies, d.side);

  // n·base ≅ apex: (i, y) goes to (n·δ(i, tuple(y)), y).
  std::vector<DiagMap> tuple_legs(n, d.right);
  DiagMap n_tuple = coproduct_map(out.copies, tuple_copies, tuple_legs);
  DiagMap to_apex =
      d.apex_pullback->mediate(out.copies.object(), compose(n_tuple, n_delta), out.codiag);
  out.top_is_codiag = is_iso(to_apex) && compose(to_apex, d.top) == out.codiag;
  out.left = compose(compose(to_apex, d.apex_to_e), q.to_left);

  out.construction = std::move(d);
  out.tuples = std::move(tuples);
  out.tuple_copies = std::move(tuple_copies);
  return out;
}

DiagMap n_fibre_mediate(const NFibreResult& r, const DiagMap& p,
                        const NFibreCompetitor& competitor, const Budget& budget) {
  const std::size_t n = r.n;
  if (competitor.legs.size() != n) {
    throw PreconditionError("n_fibre_mediate: expected one leg per copy");
  }
  Coproduct copies = copies_of(competitor.a, n);
  DiagMap codiag = codiagonal(copies, competitor.a);
  DiagMap g = n == 0 ? DiagMap(copies.object(), p.dom(), std::vector<Function>(p.poset()->size()))
                     : copies.copair(competitor.legs);
  if (!is_pullback_square(codiag, g, competitor.f, p)) {
    throw PreconditionError("n_fibre_mediate: competitor is not a pullback over p");
  }
  if (n == 0) {
    // The fibres over f are empty, so f factors through ¬p.
    Pullback meet = pullback(p, competitor.f, budget);
    DpbCompetitor c{meet.to_right, empty_to_initial(meet.object), competitor.f};
    return dpb_mediate(r.construction, c).on_side;
  }

  const DistinctTuples& tuples = *r.tuples;
  DiagMap into_power = tuples.power.mediate(competitor.a, competitor.legs, competitor.f);
  // The legs are pairwise disjoint, so the tuple lands in E^{⊠n}.
  std::optional<DiagMap> lifted = factor_through_mono(into_power, tuples.inclusion);
  if (!lifted) throw PreconditionError("n_fibre_mediate: legs are not disjoint");
  const DiagMap& tau = *lifted;
  DiagMap n_tau = coproduct_map(copies, *r.tuple_copies, std::vector<DiagMap>(n, tau));
  return dpb_mediate(r.construction, DpbCompetitor{codiag, n_tau, tau}).on_side;
}

HomTerm homterm(const Polynomial& poly, std::size_t n, const Budget& budget) {
  NFibreResult r = n_fibre_pullback(poly.p(), n, budget);
  Polynomial term(compose(r.left, poly.s()), r.codiag, compose(r.base_to_b, poly.t()));
  CartesianPolyMap counit{r.left, r.base_to_b};
  return HomTerm{std::move(term), std::move(counit), std::move(r)};
}

Polynomial classical_term(const Polynomial& poly, const TermSpec& spec) {
  if (poly.poset()->size() != 1) {
    throw PreconditionError("classical_term: requires the one-point poset");
  }
  const Function& p = poly.p().component(0);
  const Function& s = poly.s().component(0);
  std::vector<std::vector<Elem>> fibres(poly.b().size(0));
  for (Elem e = 0; e < p.size(); ++e) fibres[p[e]].push_back(e);

  std::vector<Elem> wanted;
  if (const auto* sigma = std::get_if<std::vector<Elem>>(&spec.order)) {
    for (Elem i : *sigma) {
      if (i >= poly.i().size(0)) throw PreconditionError("classical_term: σ leaves I");
    }
    wanted = *sigma;
    std::sort(wanted.begin(), wanted.end());
  }

  std::vector<Elem> keep_b;
  std::vector<Elem> keep_e;
  for (Elem b = 0; b < fibres.size(); ++b) {
    bool selected = false;
    if (const auto* n = std::get_if<std::size_t>(&spec.order)) {
      selected = fibres[b].size() == *n;
    } else {
      std::vector<Elem> labels;
      for (Elem e : fibres[b]) labels.push_back(s[e]);
      std::sort(labels.begin(), labels.end());
      selected = labels == wanted;
    }
    if (selected) keep_b.push_back(b);
  }
  for (Elem e = 0; e < p.size(); ++e) {
    if (std::binary_search(keep_b.begin(), keep_b.end(), p[e])) keep_e.push_back(e);
  }
  DiagMap incl_b = subobject(poly.b(), {keep_b});
  DiagMap incl_e = subobject(poly.e(), {keep_e});
  Function restricted;
  for (Elem e : keep_e) {
    restricted.push_back(static_cast<Elem>(
        std::lower_bound(keep_b.begin(), keep_b.end(), p[e]) - keep_b.begin()));
  }
  DiagMap p_restricted(incl_e.dom(), incl_b.dom(), {restricted});
  return Polynomial(compose(incl_e, poly.s()), p_restricted, compose(incl_b, poly.t()));
}

}  // namespace polyfun
