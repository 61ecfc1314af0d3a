#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyfun {

/// A finite partial order on named elements.
///
/// Elements are stored in a linear extension of the order, so index j < k
/// whenever j < k in the poset. Constructions rely on this: iterating
/// elements by index visits every element after all of its predecessors.
class FinPoset {
 public:
  /// Reflexive pairs are implied; transitivity and antisymmetry are checked.
  FinPoset(std::vector<std::string> elements,
           const std::vector<std::pair<std::string, std::string>>& leq);

  static std::shared_ptr<const FinPoset> point();
  static std::shared_ptr<const FinPoset> sierpinski();
  static std::shared_ptr<const FinPoset> chain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  bool leq(std::size_t j, std::size_t k) const { return leq_[j * size() + k]; }
  const std::string& name(std::size_t j) const { return names_[j]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Elements k with j <= k, ascending.
  const std::vector<std::size_t>& up_set(std::size_t j) const { return up_[j]; }
  /// Elements i with i <= j, ascending.
  const std::vector<std::size_t>& down_set(std::size_t j) const { return down_[j]; }

  /// Related pairs (j, k) with j <= k and j != k.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  bool operator==(const FinPoset& other) const {
    return names_ == other.names_ && leq_ == other.leq_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

using PosetPtr = std::shared_ptr<const FinPoset>;

bool same_poset(const PosetPtr& a, const PosetPtr& b);

}  // namespace polyfun
