#include "polyfun/random.hpp"

#include <map>

#include "polyfun/search.hpp"

namespace polyfun {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

PosetPtr make(std::vector<std::string> names,
              const std::vector<std::pair<std::string, std::string>>& leq) {
  return std::make_shared<const FinPoset>(std::move(names), leq);
}

bool is_cover(const FinPoset& poset, std::size_t j, std::size_t k) {
  for (std::size_t m = j + 1; m < k; ++m) {
    if (poset.leq(j, m) && poset.leq(m, k)) return false;
  }
  return true;
}

Function composite(const Function& first, const Function& second) {
  Function out;
  out.reserve(first.size());
  for (Elem x : first) out.push_back(second[x]);
  return out;
}

// Transitions into k given those among earlier elements; nullopt on a
// diamond whose two paths disagree.
std::optional<std::map<RelatedPair, Function>> transitions_into(
    const FinPoset& poset, const std::vector<std::size_t>& sizes,
    const std::map<RelatedPair, Function>& earlier, std::size_t k, Rng* rng) {
  std::map<RelatedPair, Function> out;
  for (std::size_t j = 0; j < k; ++j) {
    if (!poset.leq(j, k) || !is_cover(poset, j, k)) continue;
    Function fn(sizes[j], 0);
    if (rng != nullptr) {
      for (Elem& v : fn) v = uniform(*rng, 0, sizes[k] - 1);
    }
    out[{j, k}] = std::move(fn);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!poset.leq(j, k) || is_cover(poset, j, k)) continue;
    std::optional<Function> agreed;
    for (std::size_t m = j + 1; m < k; ++m) {
      if (!poset.leq(j, m) || !poset.leq(m, k)) continue;
      Function path = composite(earlier.at({j, m}), out.at({m, k}));
      if (agreed && *agreed != path) return std::nullopt;
      agreed = std::move(path);
    }
    out[{j, k}] = std::move(*agreed);
  }
  return out;
}

}  // namespace

std::vector<PosetPtr> small_posets() {
  return {
      FinPoset::point(),
      FinPoset::sierpinski(),
      FinPoset::chain(3),
      make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}),
      make({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}),
      make({"a", "b"}, {}),
      make({"a", "b", "c"}, {}),
  };
}

PosetPtr random_poset(Rng& rng) {
  static const std::vector<PosetPtr> catalogue = small_posets();
  return catalogue[uniform(rng, 0, catalogue.size() - 1)];
}

Diagram random_diagram(const PosetPtr& poset, Rng& rng, std::size_t max_size) {
  const std::size_t n = poset->size();
  std::vector<std::size_t> sizes(n);
  std::map<RelatedPair, Function> trans;
  for (std::size_t k = 0; k < n; ++k) {
    sizes[k] = uniform(rng, 0, max_size);
    for (std::size_t j = 0; j < k; ++j) {
      if (poset->leq(j, k) && sizes[j] > 0 && sizes[k] == 0) sizes[k] = 1;
    }
    std::optional<std::map<RelatedPair, Function>> into;
    for (int attempt = 0; attempt < 20 && !into; ++attempt) {
      into = transitions_into(*poset, sizes, trans, k, &rng);
    }
    // Constant transitions always commute.
    if (!into) into = transitions_into(*poset, sizes, trans, k, nullptr);
    trans.insert(into->begin(), into->end());
  }
  return Diagram(poset, std::move(sizes), trans);
}

std::optional<DiagMap> random_map(const Diagram& a, const Diagram& c, Rng& rng) {
  SearchOptions options;
  options.shuffle = &rng;
  return find_map(a, c, {}, options);
}

DiagMap random_map_into(const Diagram& c, Rng& rng, std::size_t max_size) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    Diagram a = random_diagram(c.poset(), rng, max_size);
    if (std::optional<DiagMap> f = random_map(a, c, rng)) return *f;
  }
  return DiagMap::from_initial(c);
}

DiagMap random_subobject(const Diagram& x, Rng& rng) {
  const FinPoset& poset = *x.poset();
  std::vector<std::vector<bool>> member(poset.size());
  for (std::size_t j = 0; j < poset.size(); ++j) member[j].assign(x.size(j), false);
  std::vector<std::vector<Elem>> subset(poset.size());
  for (std::size_t j = 0; j < poset.size(); ++j) {
    for (Elem e = 0; e < x.size(j); ++e) {
      if (!member[j][e] && uniform(rng, 0, 1) == 1) member[j][e] = true;
      if (!member[j][e]) continue;
      subset[j].push_back(e);
      for (std::size_t k : poset.up_set(j)) member[k][x.at(j, k, e)] = true;
    }
  }
  return subobject(x, subset);
}

Polynomial random_one_point_polynomial(Rng& rng, std::size_t max_base, std::size_t max_fibre) {
  PosetPtr point = FinPoset::point();
  std::size_t base = uniform(rng, 0, max_base);
  Function p;
  for (Elem b = 0; b < base; ++b) {
    std::size_t fibre = uniform(rng, 0, max_fibre);
    p.insert(p.end(), fibre, b);
  }
  Diagram e(point, {p.size()}, {});
  Diagram b(point, {base}, {});
  return Polynomial::one_variable(DiagMap(e, b, {p}));
}

}  // namespace polyfun
