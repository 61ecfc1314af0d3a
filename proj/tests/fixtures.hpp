#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "polyfun/diagram.hpp"
#include "polyfun/polynomial.hpp"

namespace polyfun::testing {

inline Diagram point_set(std::size_t n) { return Diagram(FinPoset::point(), {n}, {}); }

inline DiagMap point_map(std::size_t dom, std::size_t cod, Function f) {
  return DiagMap(point_set(dom), point_set(cod), {std::move(f)});
}

// E = {0,1,2}, B = {0,1,2}, p: 0,1 -> 0 and 2 -> 1.
inline DiagMap model_a_p() { return point_map(3, 3, {0, 0, 1}); }
inline Polynomial model_a() { return Polynomial::one_variable(model_a_p()); }

// Sierpiński diagram a -> b with the given transition.
inline Diagram sierpinski_set(std::size_t a, std::size_t b, Function transition) {
  return Diagram(FinPoset::sierpinski(), {a, b}, {{{0, 1}, std::move(transition)}});
}

// (∅ -> 1) ↪ (1 -> 1)
inline DiagMap sierpinski_w() {
  Diagram a = sierpinski_set(0, 1, {});
  Diagram x = sierpinski_set(1, 1, {0});
  return DiagMap(a, x, {{}, {0}});
}

// E = ({a,b} -> {c}) over B = 1: the diagonal is not decidable.
inline Polynomial model_s() {
  Diagram e = sierpinski_set(2, 1, {0, 0});
  Diagram b = sierpinski_set(1, 1, {0});
  return Polynomial::one_variable(DiagMap(e, b, {{0, 0}, {0}}));
}

// Visits every natural transformation a -> c whose value at (j, x) is drawn
// from choices(j, x), found by plain odometer enumeration. Returns false
// without visiting when the search space exceeds `cap`.
inline bool brute_for_each_map(
    const Diagram& a, const Diagram& c,
    const std::function<std::vector<Elem>(std::size_t, Elem)>& choices,
    const std::function<void(const DiagMap&)>& visit, std::size_t cap = 1'000'000) {
  const FinPoset& poset = *a.poset();
  std::vector<std::vector<std::vector<Elem>>> options(poset.size());
  std::size_t space = 1;
  for (std::size_t j = 0; j < poset.size(); ++j) {
    for (Elem x = 0; x < a.size(j); ++x) {
      options[j].push_back(choices(j, x));
      if (options[j].back().empty()) return true;
      space *= options[j].back().size();
      if (space > cap) return false;
    }
  }
  std::vector<std::vector<std::size_t>> digit(poset.size());
  for (std::size_t j = 0; j < poset.size(); ++j) digit[j].assign(a.size(j), 0);
  while (true) {
    std::vector<Function> comps(poset.size());
    for (std::size_t j = 0; j < poset.size(); ++j) {
      for (Elem x = 0; x < a.size(j); ++x) comps[j].push_back(options[j][x][digit[j][x]]);
    }
    bool natural = true;
    for (auto [j, k] : poset.strict_pairs()) {
      for (Elem x = 0; x < a.size(j) && natural; ++x) {
        natural = c.at(j, k, comps[j][x]) == comps[k][a.at(j, k, x)];
      }
    }
    if (natural) visit(DiagMap(a, c, std::move(comps)));
    bool carried = true;
    for (std::size_t j = 0; j < poset.size() && carried; ++j) {
      for (Elem x = 0; x < a.size(j) && carried; ++x) {
        if (++digit[j][x] < options[j][x].size()) {
          carried = false;
        } else {
          digit[j][x] = 0;
        }
      }
    }
    if (carried) return true;
  }
}

inline std::vector<Elem> all_of(const Diagram& c, std::size_t j) {
  std::vector<Elem> out(c.size(j));
  for (Elem y = 0; y < out.size(); ++y) out[y] = y;
  return out;
}

// Elements of y.dom() over the same base point as x(j, e).
inline std::vector<Elem> over(const DiagMap& x, const DiagMap& y, std::size_t j, Elem e) {
  std::vector<Elem> out;
  for (Elem v = 0; v < y.dom().size(j); ++v) {
    if (y(j, v) == x(j, e)) out.push_back(v);
  }
  return out;
}

inline std::size_t brute_hom_count(const Diagram& a, const Diagram& c) {
  std::size_t n = 0;
  brute_for_each_map(
      a, c, [&](std::size_t j, Elem) { return all_of(c, j); }, [&](const DiagMap&) { ++n; });
  return n;
}

// Maps x -> y over their common base; nullopt when the space exceeds cap.
inline std::optional<std::size_t> brute_slice_hom_count(const DiagMap& x, const DiagMap& y,
                                                        std::size_t cap = 1'000'000) {
  std::size_t n = 0;
  bool done = brute_for_each_map(
      x.dom(), y.dom(), [&](std::size_t j, Elem e) { return over(x, y, j, e); },
      [&](const DiagMap&) { ++n; }, cap);
  if (!done) return std::nullopt;
  return n;
}

// Fibre-size histogram of a one-point p.
inline std::map<std::size_t, std::size_t> fibre_histogram(const DiagMap& p) {
  std::vector<std::size_t> sizes(p.cod().size(0), 0);
  for (Elem b : p.component(0)) ++sizes[b];
  std::map<std::size_t, std::size_t> out;
  for (std::size_t s : sizes) ++out[s];
  return out;
}

inline std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace polyfun::testing
