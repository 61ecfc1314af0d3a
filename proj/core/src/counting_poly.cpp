#include "polyfun/counting_poly.hpp"

namespace polyfun {

CountingPoly::CountingPoly(std::map<std::size_t, Coeff> coefficients) {
  for (const auto& [e, c] : coefficients) {
    if (c != 0) coeffs_[e] = c;
  }
}

CountingPoly CountingPoly::monomial(std::size_t exponent, Coeff coefficient) {
  return CountingPoly(std::map<std::size_t, Coeff>{{exponent, coefficient}});
}

CountingPoly::Coeff CountingPoly::coefficient(std::size_t exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

CountingPoly::Coeff CountingPoly::evaluate(Coeff x) const {
  Coeff total = 0;
  for (const auto& [e, c] : coeffs_) {
    Coeff power = 1;
    for (std::size_t i = 0; i < e; ++i) power *= x;
    total += c * power;
  }
  return total;
}

CountingPoly CountingPoly::derivative() const {
  std::map<std::size_t, Coeff> out;
  for (const auto& [e, c] : coeffs_) {
    if (e > 0) out[e - 1] = c * e;
  }
  return CountingPoly(std::move(out));
}

CountingPoly CountingPoly::substitute(const CountingPoly& inner) const {
  CountingPoly total;
  for (const auto& [e, c] : coeffs_) {
    CountingPoly power = constant(1);
    for (std::size_t i = 0; i < e; ++i) power = power * inner;
    total = total + power * constant(c);
  }
  return total;
}

CountingPoly CountingPoly::operator+(const CountingPoly& o) const {
  std::map<std::size_t, Coeff> out = coeffs_;
  for (const auto& [e, c] : o.coeffs_) out[e] += c;
  return CountingPoly(std::move(out));
}

CountingPoly CountingPoly::operator*(const CountingPoly& o) const {
  std::map<std::size_t, Coeff> out;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) out[e1 + e2] += c1 * c2;
  }
  return CountingPoly(std::move(out));
}

std::vector<std::pair<std::size_t, CountingPoly::Coeff>> CountingPoly::terms() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

std::string CountingPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "X";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace polyfun
