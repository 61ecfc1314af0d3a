#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace polyfun::laws {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string detail;
  bool pass() const { return cases > 0 && failures == 0; }
};

Outcome adjunction(std::uint64_t seed, std::size_t cases);
Outcome negation(std::uint64_t seed, std::size_t cases);
Outcome factorization(std::uint64_t seed, std::size_t cases);
Outcome factorization_uniqueness(std::uint64_t seed, std::size_t cases);
Outcome pullback_stability(std::uint64_t seed, std::size_t cases);
Outcome lawvere_tierney(std::uint64_t seed, std::size_t cases);
Outcome counting_battery(std::uint64_t seed, std::size_t cases);
Outcome classical_coefficients(std::uint64_t seed, std::size_t cases);
Outcome decidability(std::uint64_t seed, std::size_t cases);
Outcome dense_monos_invert(std::uint64_t seed, std::size_t cases);
Outcome span_category(std::uint64_t seed, std::size_t cases);
Outcome localized_derivative_sierpinski();
Outcome dpb_terminality(std::uint64_t seed, std::size_t cases);
Outcome composite_terminality(std::uint64_t seed, std::size_t cases);
Outcome nfibre_terminality(std::uint64_t seed, std::size_t cases);

}  // namespace polyfun::laws
