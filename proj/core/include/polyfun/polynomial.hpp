#pragma once

#include <cstddef>
#include <optional>

#include "polyfun/counting_poly.hpp"
#include "polyfun/diagram.hpp"
#include "polyfun/dpb.hpp"
#include "polyfun/slice.hpp"

namespace polyfun {

/// I <-s- E -p-> B -t-> J
class Polynomial {
 public:
  Polynomial() = default;
  /// Throws BoundaryMismatch if the legs do not share E and B.
  Polynomial(DiagMap s, DiagMap p, DiagMap t);

  /// 1 <- E -p-> B -> 1
  static Polynomial one_variable(const DiagMap& p);
  /// 1 <- 1 -> 1 -> 1, the polynomial X.
  static Polynomial linear(PosetPtr poset);
  /// 1 <- F -> 1 -> 1, the polynomial X^F.
  static Polynomial power(const Diagram& f);
  static Polynomial identity(const Diagram& i);

  const DiagMap& s() const { return s_; }
  const DiagMap& p() const { return p_; }
  const DiagMap& t() const { return t_; }
  const Diagram& e() const { return p_.dom(); }
  const Diagram& b() const { return p_.cod(); }
  const Diagram& i() const { return s_.cod(); }
  const Diagram& j() const { return t_.cod(); }
  const PosetPtr& poset() const { return p_.poset(); }

  /// I and J terminal.
  bool is_one_variable() const;

 private:
  DiagMap s_;
  DiagMap p_;
  DiagMap t_;
};

/// Throws PreconditionError unless P has I = J = 1.
void require_one_variable(const Polynomial& p, const char* where);

/// (on_e, on_b): P1 -> P2 with a pullback middle square and commuting triangles.
struct CartesianPolyMap {
  DiagMap on_e;
  DiagMap on_b;
};

CartesianPolyMap identity_map(const Polynomial& p);
/// g after f.
CartesianPolyMap compose(const CartesianPolyMap& f, const CartesianPolyMap& g);
bool operator==(const CartesianPolyMap& a, const CartesianPolyMap& b);
/// Middle square commutes and is a pullback; triangles over I and J commute.
bool is_cartesian(const CartesianPolyMap& f, const Polynomial& from, const Polynomial& to);
bool is_invertible(const CartesianPolyMap& f);

/// Σ_t Π_p Δ_s applied to x.
SliceObj extension_eval(const Polynomial& poly, const SliceObj& x, const Budget& budget = {});
/// The extension at the constant diagram of size n over I = 1.
std::size_t extension_size(const Polynomial& poly, std::size_t n, const Budget& budget = {});

/// coeff(m) = number of fibres of size m. One-point poset, I = J = 1.
CountingPoly counting_polynomial(const Polynomial& poly);
inline CountingPoly formal_derivative(const CountingPoly& c) { return c.derivative(); }

/// outer after inner, built as middle pullback, right dpb, left pullback.
struct PolyComposite {
  Polynomial composite;
  // Intermediate stages, kept for factorization checks.
  Pullback middle;  // M = B ×_J S
  DpbResult right;  // around M -> S and q
  Pullback left;    // X = E ×_B Y
};

PolyComposite poly_compose_detailed(const Polynomial& outer, const Polynomial& inner,
                                    const Budget& budget = {});
Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner,
                        const Budget& budget = {});

/// A competitor for the composite's terminality: X' -> Y' -> Z' with
/// X' = E ×_B Y', Y' -> S a pullback of Z' -> T along q, and t b' = u s'.
struct CompositeCompetitor {
  DiagMap y_to_b;  // Y' -> B
  DiagMap y_to_s;  // Y' -> S
  DiagMap y_to_z;  // Y' -> Z'
  DiagMap z_to_t;  // Z' -> T
  DiagMap x_to_e;  // X' -> E
  DiagMap x_to_y;  // X' -> Y'
};

struct CompositeFactorization {
  DiagMap on_x;
  DiagMap on_y;
  DiagMap on_z;
};

CompositeFactorization composite_mediate(const PolyComposite& c, const Polynomial& outer,
                                         const Polynomial& inner,
                                         const CompositeCompetitor& competitor);

/// E·B' + E'·B -> B·B'. Both factors one-variable.
Polynomial poly_product(const Polynomial& a, const Polynomial& b, const Budget& budget = {});

/// Searches for an invertible cartesian map P -> P' over the same I and J.
std::optional<CartesianPolyMap> poly_equiv(const Polynomial& a, const Polynomial& b);

}  // namespace polyfun
