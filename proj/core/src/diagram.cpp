#include "polyfun/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace polyfun {

namespace {

std::string pair_location(const FinPoset& poset, std::size_t j, std::size_t k) {
  return poset.name(j) + "<=" + poset.name(k);
}

}  // namespace

Diagram::Diagram() : Diagram(FinPoset::point(), {0}, {}) {}

Diagram::Diagram(PosetPtr poset, std::vector<std::size_t> sizes,
                 const std::map<RelatedPair, Function>& transitions,
                 std::vector<std::vector<std::string>> labels) {
  const std::size_t n = poset->size();
  if (sizes.size() != n) {
    throw ValidationError("/sets", "expected " + std::to_string(n) + " carriers, got " +
                                       std::to_string(sizes.size()));
  }
  if (!labels.empty()) {
    if (labels.size() != n) throw ValidationError("/sets", "label table has wrong arity");
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[j].size() != sizes[j]) {
        throw ValidationError("/sets/" + poset->name(j), "label count differs from size");
      }
    }
  }
  auto data = std::make_shared<Data>();
  data->transitions.resize(n * n);
  for (const auto& [pair, fn] : transitions) {
    const auto [j, k] = pair;
    if (j >= n || k >= n || !poset->leq(j, k)) {
      throw ValidationError("/maps", "transition given for unrelated pair");
    }
    if (j == k) {
      for (std::size_t x = 0; x < fn.size(); ++x) {
        if (fn[x] != x) {
          throw ValidationError("/maps/" + pair_location(*poset, j, k),
                                "identity transition is not the identity at element " +
                                    std::to_string(x));
        }
      }
      continue;
    }
    data->transitions[j * n + k] = fn;
  }
  for (const auto& [j, k] : poset->strict_pairs()) {
    const Function& fn = data->transitions[j * n + k];
    const std::string where = "/maps/" + pair_location(*poset, j, k);
    if (fn.size() != sizes[j]) {
      throw ValidationError(where, "expected " + std::to_string(sizes[j]) + " entries, got " +
                                       std::to_string(fn.size()));
    }
    for (std::size_t x = 0; x < fn.size(); ++x) {
      if (fn[x] >= sizes[k]) {
        throw ValidationError(where, "element " + std::to_string(x) + " maps out of range");
      }
    }
  }
  // Functoriality: (k<=l) after (j<=k) equals (j<=l).
  for (const auto& [j, k] : poset->strict_pairs()) {
    for (std::size_t l : poset->up_set(k)) {
      if (l == k) continue;
      const Function& jk = data->transitions[j * n + k];
      const Function& kl = data->transitions[k * n + l];
      const Function& jl = data->transitions[j * n + l];
      for (std::size_t x = 0; x < sizes[j]; ++x) {
        if (kl[jk[x]] != jl[x]) {
          throw ValidationError("/maps/" + pair_location(*poset, j, l),
                                "functoriality fails through '" + poset->name(k) +
                                    "' at element " + std::to_string(x));
        }
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Function& id = data->transitions[j * n + j];
    id.resize(sizes[j]);
    std::iota(id.begin(), id.end(), Elem{0});
  }
  data->poset = std::move(poset);
  data->sizes = std::move(sizes);
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Diagram Diagram::initial(PosetPtr poset) { return constant(std::move(poset), 0); }

Diagram Diagram::terminal(PosetPtr poset) { return constant(std::move(poset), 1); }

Diagram Diagram::constant(PosetPtr poset, std::size_t n) {
  std::map<RelatedPair, Function> trans;
  Function id(n);
  std::iota(id.begin(), id.end(), Elem{0});
  for (const auto& pr : poset->strict_pairs()) trans[pr] = id;
  std::vector<std::size_t> sizes(poset->size(), n);
  return Diagram(std::move(poset), std::move(sizes), trans);
}

std::size_t Diagram::total_size() const {
  return std::accumulate(data_->sizes.begin(), data_->sizes.end(), std::size_t{0});
}

bool Diagram::is_terminal() const {
  return std::all_of(data_->sizes.begin(), data_->sizes.end(),
                     [](std::size_t s) { return s == 1; });
}

const Function& Diagram::transition(std::size_t j, std::size_t k) const {
  return data_->transitions[j * stride() + k];
}

std::string Diagram::label(std::size_t j, Elem x) const {
  if (data_->labels.empty()) return std::to_string(x);
  return data_->labels[j][x];
}

Diagram Diagram::with_labels(std::vector<std::vector<std::string>> labels) const {
  return Diagram(poset(), sizes(), transitions(), std::move(labels));
}

bool Diagram::same_as(const Diagram& other) const {
  if (data_ == other.data_) return true;
  if (!same_poset(poset(), other.poset())) return false;
  if (sizes() != other.sizes()) return false;
  for (const auto& [j, k] : poset()->strict_pairs()) {
    if (transition(j, k) != other.transition(j, k)) return false;
  }
  return true;
}

std::map<RelatedPair, Function> Diagram::transitions() const {
  std::map<RelatedPair, Function> out;
  for (const auto& pr : poset()->strict_pairs()) {
    out[pr] = data_->transitions[pr.first * stride() + pr.second];
  }
  return out;
}

void require_same_poset(const Diagram& a, const Diagram& b, const char* where) {
  if (!same_poset(a.poset(), b.poset())) {
    throw BoundaryMismatch(std::string(where) + ": diagrams live on different posets");
  }
}

void require_boundary(const Diagram& expected, const Diagram& actual, const char* where) {
  if (!expected.same_as(actual)) {
    throw BoundaryMismatch(std::string(where) + ": boundary mismatch");
  }
}

DiagMap::DiagMap(Diagram dom, Diagram cod, std::vector<Function> components)
    : dom_(std::move(dom)), cod_(std::move(cod)), components_(std::move(components)) {
  require_same_poset(dom_, cod_, "DiagMap");
  const FinPoset& poset = *dom_.poset();
  if (components_.size() != poset.size()) {
    throw ValidationError("/components", "expected one component per poset element");
  }
  for (std::size_t j = 0; j < poset.size(); ++j) {
    const std::string where = "/components/" + poset.name(j);
    if (components_[j].size() != dom_.size(j)) {
      throw ValidationError(where, "expected " + std::to_string(dom_.size(j)) +
                                       " entries, got " + std::to_string(components_[j].size()));
    }
    for (std::size_t x = 0; x < components_[j].size(); ++x) {
      if (components_[j][x] >= cod_.size(j)) {
        throw ValidationError(where, "element " + std::to_string(x) + " maps out of range");
      }
    }
  }
  for (const auto& [j, k] : poset.strict_pairs()) {
    for (std::size_t x = 0; x < dom_.size(j); ++x) {
      if (cod_.at(j, k, components_[j][x]) != components_[k][dom_.at(j, k, x)]) {
        throw ValidationError("/components/" + poset.name(j),
                              "naturality fails on " + poset.name(j) + "<=" + poset.name(k) +
                                  " at element " + std::to_string(x));
      }
    }
  }
}

DiagMap DiagMap::identity(const Diagram& d) {
  std::vector<Function> comps(d.poset()->size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    comps[j].resize(d.size(j));
    std::iota(comps[j].begin(), comps[j].end(), Elem{0});
  }
  return DiagMap(d, d, std::move(comps));
}

DiagMap DiagMap::from_initial(const Diagram& cod) {
  return DiagMap(Diagram::initial(cod.poset()), cod,
                 std::vector<Function>(cod.poset()->size()));
}

DiagMap DiagMap::to_terminal(const Diagram& dom) {
  std::vector<Function> comps(dom.poset()->size());
  for (std::size_t j = 0; j < comps.size(); ++j) comps[j].assign(dom.size(j), 0);
  return DiagMap(dom, Diagram::terminal(dom.poset()), std::move(comps));
}

bool DiagMap::operator==(const DiagMap& other) const {
  return components_ == other.components_ && dom_.same_as(other.dom_) &&
         cod_.same_as(other.cod_);
}

DiagMap compose(const DiagMap& f, const DiagMap& g) {
  require_boundary(g.dom(), f.cod(), "compose");
  std::vector<Function> comps(f.components().size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    comps[j].reserve(f.component(j).size());
    for (Elem y : f.component(j)) comps[j].push_back(g(j, y));
  }
  return DiagMap(f.dom(), g.cod(), std::move(comps));
}

MapClass classify_map(const DiagMap& f) {
  MapClass c{true, true, true};
  for (std::size_t j = 0; j < f.components().size(); ++j) {
    std::vector<bool> hit(f.cod().size(j), false);
    for (Elem y : f.component(j)) {
      if (hit[y]) c.mono = false;
      hit[y] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) c.epi = false;
  }
  c.iso = c.mono && c.epi;
  return c;
}

bool is_mono(const DiagMap& f) { return classify_map(f).mono; }

bool is_iso(const DiagMap& f) { return classify_map(f).iso; }

DiagMap inverse(const DiagMap& iso) {
  if (!is_iso(iso)) throw PreconditionError("inverse: map is not an isomorphism");
  std::vector<Function> comps(iso.components().size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    comps[j].resize(iso.component(j).size());
    for (std::size_t x = 0; x < comps[j].size(); ++x) comps[j][iso(j, x)] = x;
  }
  return DiagMap(iso.cod(), iso.dom(), std::move(comps));
}

DiagMap subobject(const Diagram& whole, const std::vector<std::vector<Elem>>& subset) {
  const FinPoset& poset = *whole.poset();
  std::vector<std::vector<Elem>> members(poset.size());
  std::vector<std::vector<std::ptrdiff_t>> position(poset.size());
  for (std::size_t j = 0; j < poset.size(); ++j) {
    members[j] = subset.at(j);
    std::sort(members[j].begin(), members[j].end());
    members[j].erase(std::unique(members[j].begin(), members[j].end()), members[j].end());
    position[j].assign(whole.size(j), -1);
    for (std::size_t i = 0; i < members[j].size(); ++i) position[j][members[j][i]] = i;
  }
  std::vector<std::size_t> sizes(poset.size());
  for (std::size_t j = 0; j < poset.size(); ++j) sizes[j] = members[j].size();
  std::map<RelatedPair, Function> trans;
  for (const auto& [j, k] : poset.strict_pairs()) {
    Function fn;
    for (Elem x : members[j]) {
      std::ptrdiff_t pos = position[k][whole.at(j, k, x)];
      if (pos < 0) throw ValidationError("/subobject", "subset not closed under transitions");
      fn.push_back(static_cast<Elem>(pos));
    }
    trans[{j, k}] = std::move(fn);
  }
  std::vector<std::vector<std::string>> labels;
  if (whole.has_labels()) {
    labels.resize(poset.size());
    for (std::size_t j = 0; j < poset.size(); ++j) {
      for (Elem x : members[j]) labels[j].push_back(whole.label(j, x));
    }
  }
  Diagram part(whole.poset(), std::move(sizes), trans, std::move(labels));
  return DiagMap(part, whole, std::move(members));
}

std::optional<DiagMap> factor_through_mono(const DiagMap& f, const DiagMap& mono) {
  require_boundary(mono.cod(), f.cod(), "factor_through_mono");
  std::vector<Function> comps(f.poset()->size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    std::vector<std::ptrdiff_t> preimage(mono.cod().size(j), -1);
    const Function& m = mono.component(j);
    for (Elem x = 0; x < m.size(); ++x) preimage[m[x]] = static_cast<std::ptrdiff_t>(x);
    for (Elem y : f.component(j)) {
      if (preimage[y] < 0) return std::nullopt;
      comps[j].push_back(static_cast<Elem>(preimage[y]));
    }
  }
  return DiagMap(f.dom(), mono.dom(), std::move(comps));
}

}  // namespace polyfun
