#include "polyfun/poset.hpp"

#include <algorithm>

#include "polyfun/errors.hpp"

namespace polyfun {

FinPoset::FinPoset(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& relation) {
  const std::size_t n = elements.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (elements[a] == elements[b]) {
        throw ValidationError("/poset/elements", "duplicate element '" + elements[a] + "'");
      }
    }
  }
  auto position = [&](const std::string& name) -> std::size_t {
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) {
      throw ValidationError("/poset/leq", "unknown element '" + name + "'");
    }
    return static_cast<std::size_t>(it - elements.begin());
  };

  std::vector<bool> rel(n * n, false);
  for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = true;
  for (const auto& [lo, hi] : relation) rel[position(lo) * n + position(hi)] = true;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel[a * n + b] && rel[b * n + a]) {
        throw ValidationError("/poset/leq", "antisymmetry fails for '" + elements[a] +
                                                "' and '" + elements[b] + "'");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c]) {
          throw ValidationError("/poset/leq", "transitivity fails: '" + elements[a] +
                                                  "' <= '" + elements[b] + "' <= '" +
                                                  elements[c] + "'");
        }
      }
    }
  }

  // Stable topological order: repeatedly take the first element whose strict
  // predecessors are all placed.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    for (std::size_t a = 0; a < n; ++a) {
      if (placed[a]) continue;
      bool ready = true;
      for (std::size_t b = 0; b < n; ++b) {
        if (b != a && !placed[b] && rel[b * n + a]) ready = false;
      }
      if (ready) {
        placed[a] = true;
        order.push_back(a);
        break;
      }
    }
  }

  names_.reserve(n);
  for (std::size_t a : order) names_.push_back(elements[a]);
  leq_.assign(n * n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) leq_[j * n + k] = rel[order[j] * n + order[k]];
  }
  up_.resize(n);
  down_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (leq_[j * n + k]) {
        up_[j].push_back(k);
        down_[k].push_back(j);
      }
    }
  }
}

std::shared_ptr<const FinPoset> FinPoset::point() {
  static const auto kPoint = std::make_shared<const FinPoset>(
      std::vector<std::string>{"*"}, std::vector<std::pair<std::string, std::string>>{});
  return kPoint;
}

std::shared_ptr<const FinPoset> FinPoset::sierpinski() {
  static const auto kSierpinski = std::make_shared<const FinPoset>(
      std::vector<std::string>{"0", "1"},
      std::vector<std::pair<std::string, std::string>>{{"0", "1"}});
  return kSierpinski;
}

std::shared_ptr<const FinPoset> FinPoset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) leq.emplace_back(names[i], names[k]);
  }
  return std::make_shared<const FinPoset>(std::move(names), leq);
}

std::optional<std::size_t> FinPoset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FinPoset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < size(); ++j) {
    for (std::size_t k : up_[j]) {
      if (k != j) out.emplace_back(j, k);
    }
  }
  return out;
}

bool same_poset(const PosetPtr& a, const PosetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace polyfun
