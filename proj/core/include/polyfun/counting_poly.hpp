#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polyfun {

/// Univariate polynomial with natural-number coefficients.
class CountingPoly {
 public:
  using Coeff = std::uint64_t;

  CountingPoly() = default;
  explicit CountingPoly(std::map<std::size_t, Coeff> coefficients);

  static CountingPoly monomial(std::size_t exponent, Coeff coefficient = 1);
  static CountingPoly constant(Coeff c) { return monomial(0, c); }

  Coeff coefficient(std::size_t exponent) const;
  const std::map<std::size_t, Coeff>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff evaluate(Coeff x) const;
  CountingPoly derivative() const;
  /// this(inner)
  CountingPoly substitute(const CountingPoly& inner) const;

  CountingPoly operator+(const CountingPoly& o) const;
  CountingPoly operator*(const CountingPoly& o) const;
  bool operator==(const CountingPoly& o) const { return coeffs_ == o.coeffs_; }

  /// (exponent, coefficient) in descending exponent order.
  std::vector<std::pair<std::size_t, Coeff>> terms() const;
  /// e.g. "2X^2+X+1", "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::map<std::size_t, Coeff> coeffs_;  // no zero entries
};

}  // namespace polyfun
