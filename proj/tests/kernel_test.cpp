#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polyfun/dpb.hpp"
#include "polyfun/limits.hpp"
#include "polyfun/search.hpp"
#include "polyfun/slice.hpp"

namespace polyfun {
namespace {

using testing::model_a_p;
using testing::point_map;
using testing::point_set;
using testing::sierpinski_set;

TEST(Poset, StoresALinearExtension) {
  FinPoset v({"top", "left", "bottom"}, {{"bottom", "left"}, {"bottom", "top"}});
  EXPECT_EQ(v.name(0), "bottom");
  EXPECT_TRUE(v.leq(0, 1));
  EXPECT_TRUE(v.leq(0, 2));
  EXPECT_FALSE(v.leq(1, 2));
  EXPECT_EQ(v.strict_pairs().size(), 2u);
}

TEST(Poset, RejectsCyclesAndMissingTransitivity) {
  EXPECT_THROW(FinPoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ValidationError);
  EXPECT_THROW(FinPoset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), ValidationError);
  EXPECT_THROW(FinPoset({"a"}, {{"a", "z"}}), ValidationError);
  EXPECT_THROW(FinPoset({"a", "a"}, {}), ValidationError);
}

TEST(Diagram, RejectsNonFunctorialTransitions) {
  EXPECT_THROW(sierpinski_set(2, 1, {0, 1}), ValidationError);
  PosetPtr chain = FinPoset::chain(3);
  EXPECT_THROW(Diagram(chain, {1, 2, 2}, {{{0, 1}, {0}}, {{1, 2}, {1, 0}}, {{0, 2}, {0}}}),
               ValidationError);
  EXPECT_NO_THROW(Diagram(chain, {1, 2, 2}, {{{0, 1}, {0}}, {{1, 2}, {1, 0}}, {{0, 2}, {1}}}));
}

TEST(DiagMap, RejectsNonNaturalComponents) {
  Diagram x = sierpinski_set(2, 2, {0, 1});
  Diagram y = sierpinski_set(2, 2, {0, 0});
  EXPECT_THROW(DiagMap(y, x, {{0, 1}, {0, 1}}), ValidationError);
  EXPECT_NO_THROW(DiagMap(x, y, {{0, 1}, {0, 0}}));
}

TEST(DiagMap, ComposeIsPointwise) {
  DiagMap p = model_a_p();
  DiagMap q = DiagMap::to_terminal(p.cod());
  DiagMap qp = compose(p, q);
  EXPECT_EQ(qp.component(0), (Function{0, 0, 0}));
  EXPECT_THROW(compose(q, p), BoundaryMismatch);
}

TEST(DiagMap, ClassifiesModelA) {
  MapClass c = classify_map(model_a_p());
  EXPECT_FALSE(c.mono);
  EXPECT_FALSE(c.epi);
  EXPECT_FALSE(c.iso);
  EXPECT_TRUE(classify_map(point_map(3, 3, {2, 0, 1})).iso);
  EXPECT_EQ(inverse(point_map(3, 3, {2, 0, 1})).component(0), (Function{1, 2, 0}));
}

TEST(Limits, KernelPairOfModelA) {
  DiagMap p = model_a_p();
  Pullback kp = pullback(p, p);
  ASSERT_EQ(kp.object.size(0), 5u);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < 5; ++x) pairs.emplace_back(kp.to_left(0, x), kp.to_right(0, x));
  EXPECT_EQ(pairs, (std::vector<std::pair<Elem, Elem>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}));
  FibrePower two = fibre_power(p, 2);
  DiagMap delta = two.diagonal(p);
  for (Elem e = 0; e < 3; ++e) {
    EXPECT_EQ(two.projections[0](0, delta(0, e)), e);
    EXPECT_EQ(two.projections[1](0, delta(0, e)), e);
  }
}

TEST(Limits, MediatorRejectsNonCones) {
  DiagMap p = model_a_p();
  Pullback kp = pullback(p, p);
  DiagMap bad = point_map(1, 3, {0});
  DiagMap other = point_map(1, 3, {2});
  EXPECT_THROW(kp.mediate(bad.dom(), bad, other), ValidationError);
  DiagMap ok = point_map(1, 3, {1});
  EXPECT_EQ(kp.mediate(bad.dom(), bad, ok)(0, 0), 1u);
}

TEST(Limits, CoproductOfModelA) {
  DiagMap p = model_a_p();
  Coproduct sum({p.dom(), p.cod()}, p.poset());
  EXPECT_EQ(sum.object().size(0), 6u);
  DiagMap copair = sum.copair({p, DiagMap::identity(p.cod())});
  EXPECT_EQ(copair.component(0), (Function{0, 0, 1, 0, 1, 2}));
  EXPECT_EQ(sum.locate(0, 4), (std::pair<std::size_t, Elem>{1, 1}));
}

TEST(Limits, EqualizerAndEmptyProducts) {
  DiagMap f = point_map(3, 2, {0, 1, 1});
  DiagMap g = point_map(3, 2, {0, 0, 1});
  DiagMap eq = equalizer(f, g);
  EXPECT_EQ(eq.component(0), (Function{0, 2}));
  Product empty = product({}, FinPoset::point());
  EXPECT_TRUE(empty.object.is_terminal());
  Product with_zero = product({point_set(0), point_set(3)}, FinPoset::point());
  EXPECT_TRUE(with_zero.object.empty());
}

TEST(Limits, PullbackSquareRecognition) {
  DiagMap p = model_a_p();
  Pullback kp = pullback(p, p);
  EXPECT_TRUE(is_pullback_square(kp.to_right, kp.to_left, p, p));
  DiagMap id = DiagMap::identity(p.dom());
  EXPECT_FALSE(is_pullback_square(id, id, p, p));
}

TEST(Slice, DeltaAndSigmaOnModelA) {
  DiagMap p = model_a_p();
  SliceObj along_id = delta(p, as_slice(DiagMap::identity(p.cod())));
  EXPECT_EQ(along_id.total().size(0), 3u);
  EXPECT_TRUE(is_iso(along_id.anchor));
  // y: two elements over b0
  SliceObj y = as_slice(point_map(2, 3, {0, 0}));
  EXPECT_EQ(delta(p, y).total().size(0), 4u);
  EXPECT_EQ(sigma(p, as_slice(DiagMap::identity(p.dom()))).anchor, p);
}

TEST(Slice, PiCountsSectionsOnModelA) {
  DiagMap p = model_a_p();
  // fibre sizes (2, 1, 0) over e0, e1, e2
  SliceObj x = as_slice(point_map(3, 3, {0, 0, 1}));
  SliceObj prod = pi(p, x);
  std::vector<std::size_t> sizes(3, 0);
  for (Elem y : prod.anchor.component(0)) ++sizes[y];
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 0, 1}));
}

TEST(Slice, PiAdjunctionOnSierpinski) {
  Diagram e = sierpinski_set(2, 1, {0, 0});
  Diagram b = sierpinski_set(1, 1, {0});
  DiagMap p(e, b, {{0, 0}, {0}});
  Diagram xs = sierpinski_set(3, 2, {0, 1, 1});
  DiagMap x(xs, e, {{0, 1, 1}, {0, 0}});
  SliceObj prod = pi(p, as_slice(x));
  Diagram ys = sierpinski_set(2, 1, {0, 0});
  DiagMap y(ys, b, {{0, 0}, {0}});
  std::size_t left = *testing::brute_slice_hom_count(delta(p, as_slice(y)).anchor, x);
  std::size_t right = *testing::brute_slice_hom_count(y, prod.anchor);
  EXPECT_EQ(left, right);
  EXPECT_EQ(count_slice_maps(y, prod.anchor), right);
}

TEST(Dpb, InitialMapGivesNegation) {
  DiagMap p = model_a_p();
  DpbResult d = dpb(DiagMap::from_initial(p.dom()), p);
  EXPECT_EQ(d.side.size(0), 1u);
  EXPECT_EQ(d.right(0, 0), 2u);
  EXPECT_TRUE(d.apex.empty());
}

TEST(Dpb, EmptyCompetitorFactorsUniquely) {
  DiagMap p = model_a_p();
  DpbResult d = dpb(DiagMap::from_initial(p.dom()), p);
  DiagMap right = DiagMap::from_initial(p.cod());
  Pullback apex = pullback(p, right);
  DpbCompetitor c{apex.to_right, DiagMap(apex.object, point_set(0), {{}}), right};
  DpbFactorization f = dpb_mediate(d, c);
  EXPECT_TRUE(f.on_side.dom().empty());
}

TEST(Dpb, RejectsNonPullbackCompetitors) {
  DiagMap p = model_a_p();
  DiagMap id_e = DiagMap::identity(p.dom());
  DpbResult d = dpb(id_e, p);
  // E -id-> E over E -p-> B is a pullback only when p is mono.
  DpbCompetitor wrong{id_e, id_e, p};
  EXPECT_FALSE(is_pullback_around(d, wrong));
  EXPECT_THROW(dpb_mediate(d, wrong), PreconditionError);
}

TEST(Search, CountsAgreeWithBruteForce) {
  Diagram a = sierpinski_set(2, 2, {0, 1});
  Diagram c = sierpinski_set(2, 1, {0, 0});
  EXPECT_EQ(count_maps(a, c), testing::brute_hom_count(a, c));
  EXPECT_EQ(count_maps(c, a), testing::brute_hom_count(c, a));
  SearchOptions inj;
  inj.injective = true;
  std::size_t monos = for_each_map(a, a, {}, inj, [](const DiagMap&) { return true; });
  EXPECT_EQ(monos, 2u);
}

}  // namespace
}  // namespace polyfun
