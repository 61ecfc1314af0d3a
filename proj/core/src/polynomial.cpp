#include "polyfun/polynomial.hpp"

#include <map>

#include "polyfun/search.hpp"

namespace polyfun {

Polynomial::Polynomial(DiagMap s, DiagMap p, DiagMap t)
    : s_(std::move(s)), p_(std::move(p)), t_(std::move(t)) {
  require_boundary(p_.dom(), s_.dom(), "polynomial s/p");
  require_boundary(p_.cod(), t_.dom(), "polynomial p/t");
}

Polynomial Polynomial::one_variable(const DiagMap& p) {
  return Polynomial(DiagMap::to_terminal(p.dom()), p, DiagMap::to_terminal(p.cod()));
}

Polynomial Polynomial::linear(PosetPtr poset) {
  return power(Diagram::terminal(std::move(poset)));
}

Polynomial Polynomial::power(const Diagram& f) {
  return one_variable(DiagMap::to_terminal(f));
}

Polynomial Polynomial::identity(const Diagram& i) {
  DiagMap id = DiagMap::identity(i);
  return Polynomial(id, id, id);
}

bool Polynomial::is_one_variable() const { return i().is_terminal() && j().is_terminal(); }

void require_one_variable(const Polynomial& p, const char* where) {
  if (!p.is_one_variable()) {
    throw PreconditionError(std::string(where) + ": polynomial must have I = J = 1");
  }
}

CartesianPolyMap identity_map(const Polynomial& p) {
  return CartesianPolyMap{DiagMap::identity(p.e()), DiagMap::identity(p.b())};
}

CartesianPolyMap compose(const CartesianPolyMap& f, const CartesianPolyMap& g) {
  return CartesianPolyMap{compose(f.on_e, g.on_e), compose(f.on_b, g.on_b)};
}

bool operator==(const CartesianPolyMap& a, const CartesianPolyMap& b) {
  return a.on_e == b.on_e && a.on_b == b.on_b;
}

bool is_cartesian(const CartesianPolyMap& f, const Polynomial& from, const Polynomial& to) {
  if (!f.on_e.dom().same_as(from.e()) || !f.on_e.cod().same_as(to.e()) ||
      !f.on_b.dom().same_as(from.b()) || !f.on_b.cod().same_as(to.b())) {
    return false;
  }
  if (!from.i().same_as(to.i()) || !from.j().same_as(to.j())) return false;
  if (!(compose(f.on_e, to.s()) == from.s())) return false;
  if (!(compose(f.on_b, to.t()) == from.t())) return false;
  return is_pullback_square(f.on_e, from.p(), to.p(), f.on_b);
}

bool is_invertible(const CartesianPolyMap& f) { return is_iso(f.on_e) && is_iso(f.on_b); }

SliceObj extension_eval(const Polynomial& poly, const SliceObj& x, const Budget& budget) {
  require_boundary(poly.i(), x.base(), "extension_eval");
  SliceObj pulled = delta(poly.s(), x, budget);
  SliceObj pushed = pi(poly.p(), pulled, budget);
  return sigma(poly.t(), pushed);
}

std::size_t extension_size(const Polynomial& poly, std::size_t n, const Budget& budget) {
  if (!poly.i().is_terminal()) throw PreconditionError("extension_size: I must be terminal");
  Diagram x = Diagram::constant(poly.poset(), n);
  DiagMap anchor(x, poly.i(), DiagMap::to_terminal(x).components());
  return extension_eval(poly, SliceObj{anchor}, budget).total().total_size();
}

CountingPoly counting_polynomial(const Polynomial& poly) {
  if (poly.poset()->size() != 1) {
    throw PreconditionError("counting_polynomial: requires the one-point poset");
  }
  require_one_variable(poly, "counting_polynomial");
  std::vector<std::size_t> fibre(poly.b().size(0), 0);
  for (Elem b : poly.p().component(0)) ++fibre[b];
  std::map<std::size_t, CountingPoly::Coeff> hist;
  for (std::size_t size : fibre) ++hist[size];
  return CountingPoly(std::move(hist));
}

PolyComposite poly_compose_detailed(const Polynomial& outer, const Polynomial& inner,
                                    const Budget& budget) {
  require_boundary(inner.j(), outer.i(), "poly_compose");
  Pullback middle = pullback(inner.t(), outer.s(), budget);
  DpbResult right = dpb(middle.to_right, outer.p(), budget);
  Pullback left = pullback(inner.p(), compose(right.counit, middle.to_left), budget);
  Polynomial composite(compose(left.to_left, inner.s()), compose(left.to_right, right.top),
                       compose(right.right, outer.t()));
  return PolyComposite{std::move(composite), std::move(middle), std::move(right),
                       std::move(left)};
}

Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner, const Budget& budget) {
  return poly_compose_detailed(outer, inner, budget).composite;
}

CompositeFactorization composite_mediate(const PolyComposite& c, const Polynomial& outer,
                                         const Polynomial& inner,
                                         const CompositeCompetitor& k) {
  if (!(compose(k.y_to_b, inner.t()) == compose(k.y_to_s, outer.s()))) {
    throw PreconditionError("composite_mediate: middle square does not commute");
  }
  if (!is_pullback_square(k.x_to_y, k.x_to_e, k.y_to_b, inner.p())) {
    throw PreconditionError("composite_mediate: left square is not a pullback");
  }
  DiagMap y_to_m = c.middle.mediate(k.y_to_b.dom(), k.y_to_b, k.y_to_s);
  DpbFactorization f = dpb_mediate(c.right, DpbCompetitor{k.y_to_z, y_to_m, k.z_to_t});
  DiagMap on_x = c.left.mediate(k.x_to_e.dom(), k.x_to_e, compose(k.x_to_y, f.on_apex));
  return CompositeFactorization{on_x, f.on_apex, f.on_side};
}

Polynomial poly_product(const Polynomial& a, const Polynomial& b, const Budget& budget) {
  require_one_variable(a, "poly_product");
  require_one_variable(b, "poly_product");
  require_same_poset(a.e(), b.e(), "poly_product");
  const PosetPtr& poset = a.poset();
  Product bb = product({a.b(), b.b()}, poset, budget);
  Product eb = product({a.e(), b.b()}, poset, budget);
  Product eb2 = product({b.e(), a.b()}, poset, budget);
  Coproduct sum({eb.object, eb2.object}, poset);
  DiagMap left = bb.mediate(eb.object, {compose(eb.projections[0], a.p()), eb.projections[1]});
  DiagMap right = bb.mediate(eb2.object, {eb2.projections[1], compose(eb2.projections[0], b.p())});
  return Polynomial::one_variable(sum.copair({left, right}));
}

std::optional<CartesianPolyMap> poly_equiv(const Polynomial& a, const Polynomial& b) {
  if (!a.i().same_as(b.i()) || !a.j().same_as(b.j())) return std::nullopt;
  std::optional<CartesianPolyMap> found;
  SearchOptions iso;
  iso.bijective = true;
  for_each_map(a.b(), b.b(), {OverConstraint{a.t(), b.t()}}, iso, [&](const DiagMap& on_b) {
    auto on_e = find_map(a.e(), b.e(),
                         {OverConstraint{compose(a.p(), on_b), b.p()},
                          OverConstraint{a.s(), b.s()}},
                         iso);
    if (on_e) found = CartesianPolyMap{*on_e, on_b};
    return !found.has_value();
  });
  return found;
}

}  // namespace polyfun
