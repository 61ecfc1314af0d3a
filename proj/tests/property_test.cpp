// The law suites again, on seeds disjoint from the acceptance run.

#include <gtest/gtest.h>

#include "laws.hpp"

namespace {

using polyfun::laws::Outcome;

void expect_pass(const Outcome& o) {
  EXPECT_GT(o.cases, 0u);
  EXPECT_EQ(o.failures, 0u) << o.first_failure;
}

constexpr std::uint64_t kSeed = 1001;

TEST(Laws, Adjunction) { expect_pass(polyfun::laws::adjunction(kSeed, 60)); }
TEST(Laws, Negation) { expect_pass(polyfun::laws::negation(kSeed, 60)); }
TEST(Laws, Factorization) { expect_pass(polyfun::laws::factorization(kSeed, 60)); }
TEST(Laws, FactorizationUniqueness) {
  expect_pass(polyfun::laws::factorization_uniqueness(kSeed, 40));
}
TEST(Laws, PullbackStability) { expect_pass(polyfun::laws::pullback_stability(kSeed, 60)); }
TEST(Laws, LawvereTierney) { expect_pass(polyfun::laws::lawvere_tierney(kSeed, 60)); }
TEST(Laws, CountingBattery) { expect_pass(polyfun::laws::counting_battery(kSeed, 30)); }
TEST(Laws, ClassicalCoefficients) {
  expect_pass(polyfun::laws::classical_coefficients(kSeed, 30));
}
TEST(Laws, Decidability) { expect_pass(polyfun::laws::decidability(kSeed, 60)); }
TEST(Laws, DenseMonosInvert) { expect_pass(polyfun::laws::dense_monos_invert(kSeed, 60)); }
TEST(Laws, SpanCategory) { expect_pass(polyfun::laws::span_category(kSeed, 60)); }
TEST(Laws, LocalizedDerivative) {
  expect_pass(polyfun::laws::localized_derivative_sierpinski());
}
TEST(Laws, DpbTerminality) { expect_pass(polyfun::laws::dpb_terminality(kSeed, 40)); }
TEST(Laws, CompositeTerminality) {
  expect_pass(polyfun::laws::composite_terminality(kSeed, 40));
}
TEST(Laws, NFibreTerminality) { expect_pass(polyfun::laws::nfibre_terminality(kSeed, 40)); }

}  // namespace
