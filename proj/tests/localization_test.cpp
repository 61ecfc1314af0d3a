#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polyfun/localization.hpp"

namespace polyfun {
namespace {

using testing::model_a_p;
using testing::model_s;
using testing::sierpinski_set;
using testing::sierpinski_w;

TEST(Span, RequiresDenseMonoLeft) {
  DiagMap p = model_a_p();
  EXPECT_THROW(Span(p, p), PreconditionError);
  DiagMap w = sierpinski_w();
  EXPECT_NO_THROW(Span(w, DiagMap::identity(w.dom())));
}

TEST(Span, InvertsTheSierpinskiSubobject) {
  DiagMap w = sierpinski_w();
  Span there = embed(w);
  Span back = invert_dense_mono(w);
  EXPECT_TRUE(span_equal(span_compose(back, there), span_identity(w.dom())));
  EXPECT_TRUE(span_equal(span_compose(there, back), span_identity(w.cod())));
  EXPECT_FALSE(is_iso(w));
}

TEST(Span, EqualityIsNotTrivial) {
  Diagram x = sierpinski_set(1, 1, {0});
  Diagram two = sierpinski_set(2, 2, {0, 1});
  DiagMap f(x, two, {{0}, {0}});
  DiagMap g(x, two, {{1}, {1}});
  EXPECT_FALSE(span_equal(embed(f), embed(g)));
  // Restricted to the dense part (∅ -> 1) the two still differ over 1.
  DiagMap w = sierpinski_w();
  EXPECT_FALSE(span_equal(Span(w, compose(w, f)), Span(w, compose(w, g))));
  EXPECT_TRUE(span_equal(Span(w, compose(w, f)), embed(f)));
}

TEST(Span, NormalizeFindsTotalExtensions) {
  DiagMap w = sierpinski_w();
  Span back = invert_dense_mono(w);
  Span norm = normalize(back);
  EXPECT_TRUE(span_equal(norm, back));
  Span id = normalize(span_identity(w.cod()));
  EXPECT_TRUE(is_iso(id.left()));
}

TEST(SpanPullback, WithAnInvertedLeg) {
  DiagMap w = sierpinski_w();
  Span f = invert_dense_mono(w);                      // X ⇸ A
  Span g = span_identity(w.dom());                    // A ⇸ A
  SpanPullback pb = span_pullback(f, g);
  EXPECT_TRUE(span_square_commutes(pb.to_left, f, pb.to_right, g));
  Span med = span_pullback_mediate(pb, f, g, span_identity(w.cod()), f);
  EXPECT_TRUE(span_equal(span_compose(pb.to_left, med), span_identity(w.cod())));
  EXPECT_TRUE(span_equal(span_compose(pb.to_right, med), f));
}

TEST(SpanDpb, EmbeddedMapsAgreeWithTheKernel) {
  DiagMap p = model_a_p();
  DiagMap u = DiagMap::from_initial(p.dom());
  SpanDpb d = span_dpb(embed(u), embed(p));
  EXPECT_EQ(d.side.size(0), 1u);
  EXPECT_TRUE(span_square_commutes(d.top, d.right, d.counit,
                                   span_compose(embed(p), embed(u))));
}

TEST(SpanDpb, WithAnInvertedLeg) {
  DiagMap w = sierpinski_w();
  Span u = invert_dense_mono(w);
  Span p = embed(DiagMap::to_terminal(w.dom()));
  SpanDpb d = span_dpb(u, p);
  EXPECT_TRUE(span_square_commutes(d.top, d.right, d.counit, span_compose(p, u)));
}

TEST(LocalizedDerivative, SierpinskiPolynomial) {
  LocalizedDerivative d = localized_derivative(model_s());
  EXPECT_FALSE(d.e_level.decidable);
  EXPECT_TRUE(d.comparison_invertible);
  EXPECT_TRUE(d.counit_pullback_localized);
  EXPECT_TRUE(d.triangle_left);
  EXPECT_TRUE(d.triangle_right);
  EXPECT_FALSE(d.witness.counit_cartesian);
}

TEST(LocalizedDerivative, AgreesWithTheKernelWhenDecidable) {
  LocalizedDerivative d = localized_derivative(testing::model_a());
  EXPECT_TRUE(d.e_level.decidable);
  EXPECT_TRUE(d.comparison_invertible);
  EXPECT_TRUE(d.counit_pullback_localized);
  EXPECT_TRUE(d.triangle_left && d.triangle_right);
}

}  // namespace
}  // namespace polyfun
