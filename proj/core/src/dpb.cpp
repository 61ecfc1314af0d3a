#include "polyfun/dpb.hpp"

namespace polyfun {

DpbResult dpb(const DiagMap& u, const DiagMap& p, const Budget& budget) {
  require_boundary(p.dom(), u.cod(), "dpb");
  auto product = std::make_shared<const DependentProduct>(p, SliceObj{u}, budget);
  const DiagMap& right = product->result().anchor;
  auto apex = std::make_shared<const Pullback>(pullback(p, right, budget));

  std::vector<Function> counit(p.poset()->size());
  const auto& tuples = *apex->limit;
  for (std::size_t j = 0; j < counit.size(); ++j) {
    for (Elem x = 0; x < apex->object.size(j); ++x) {
      const auto& t = tuples.tuple(j, x);  // (e, y, b)
      counit[j].push_back(product->value(j, t[1], j, t[0]));
    }
  }
  DpbResult out;
  out.u = u;
  out.p = p;
  out.apex = apex->object;
  out.side = right.dom();
  out.counit = DiagMap(apex->object, u.dom(), std::move(counit));
  out.top = apex->to_right;
  out.right = right;
  out.apex_to_e = apex->to_left;
  out.product = std::move(product);
  out.apex_pullback = std::move(apex);
  return out;
}

bool is_pullback_around(const DpbResult& d, const DpbCompetitor& c) {
  require_boundary(d.u.dom(), c.left.cod(), "dpb competitor");
  require_boundary(d.p.cod(), c.right.cod(), "dpb competitor");
  require_boundary(c.left.dom(), c.top.dom(), "dpb competitor");
  require_boundary(c.right.dom(), c.top.cod(), "dpb competitor");
  return is_pullback_square(c.top, compose(c.left, d.u), c.right, d.p);
}

DpbFactorization dpb_mediate(const DpbResult& d, const DpbCompetitor& c) {
  if (!is_pullback_around(d, c)) {
    throw PreconditionError("dpb_mediate: competitor is not a pullback around u and p");
  }
  const DiagMap to_e = compose(c.left, d.u);
  const Diagram& xs = c.top.dom();
  const Diagram& ys = c.top.cod();
  const std::size_t n = d.p.poset()->size();

  // Over each k: (e, y') -> the unique x' above both.
  std::vector<std::map<std::pair<Elem, Elem>, Elem>> above(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (Elem x = 0; x < xs.size(k); ++x) above[k][{to_e(k, x), c.top(k, x)}] = x;
  }

  std::vector<Function> on_side(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (Elem y = 0; y < ys.size(j); ++y) {
      const Elem b = c.right(j, y);
      std::vector<Elem> values;
      for (const auto& slot : d.product->slots(j, b)) {
        const Elem x = above[slot.k].at({slot.e, ys.at(j, slot.k, y)});
        values.push_back(c.left(slot.k, x));
      }
      auto found = d.product->find(j, b, values);
      if (!found) throw PreconditionError("dpb_mediate: induced family is not compatible");
      on_side[j].push_back(*found);
    }
  }
  DpbFactorization out;
  out.on_side = DiagMap(ys, d.side, std::move(on_side));
  out.on_apex = d.apex_pullback->mediate(xs, to_e, compose(c.top, out.on_side));
  return out;
}

}  // namespace polyfun
