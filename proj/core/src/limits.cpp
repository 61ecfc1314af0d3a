#include "polyfun/limits.hpp"

#include <algorithm>

namespace polyfun {

namespace {

// Enumerates compatible tuples over poset element j in lexicographic order.
void enumerate_tuples(const LimitShape& shape, std::size_t j, const Budget& budget,
                      std::vector<std::vector<Elem>>& out) {
  const std::size_t m = shape.objects.size();
  // Arrows checkable once object i is assigned: both endpoints <= i.
  std::vector<std::vector<const LimitShape::Arrow*>> ready(m);
  for (const auto& a : shape.arrows) ready[std::max(a.from, a.to)].push_back(&a);

  std::vector<Elem> tuple(m);
  std::size_t steps = 0;
  const std::size_t max_steps = budget.max_elements * 64;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      out.push_back(tuple);
      budget.check(out.size(), "finite_limit");
      return;
    }
    for (Elem x = 0; x < shape.objects[i].size(j); ++x) {
      if (++steps > max_steps) budget.check(budget.max_elements + 1, "finite_limit search");
      tuple[i] = x;
      bool ok = true;
      for (const auto* a : ready[i]) {
        if (a->map(j, tuple[a->from]) != tuple[a->to]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

Limit::Limit(const LimitShape& shape, PosetPtr poset, const Budget& budget) : shape_(shape) {
  for (const auto& obj : shape_.objects) {
    if (!same_poset(obj.poset(), poset)) throw BoundaryMismatch("finite_limit: poset mismatch");
  }
  for (const auto& a : shape_.arrows) {
    if (a.from >= shape_.objects.size() || a.to >= shape_.objects.size()) {
      throw BoundaryMismatch("finite_limit: arrow endpoint out of range");
    }
    require_boundary(shape_.objects[a.from], a.map.dom(), "finite_limit");
    require_boundary(shape_.objects[a.to], a.map.cod(), "finite_limit");
  }
  const std::size_t n = poset->size();
  tuples_.resize(n);
  index_.resize(n);
  std::vector<std::size_t> sizes(n);
  std::size_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    enumerate_tuples(shape_, j, budget, tuples_[j]);
    sizes[j] = tuples_[j].size();
    total += sizes[j];
    budget.check(total, "finite_limit");
    for (std::size_t x = 0; x < tuples_[j].size(); ++x) index_[j].emplace(tuples_[j][x], x);
  }
  std::map<RelatedPair, Function> trans;
  for (const auto& [j, k] : poset->strict_pairs()) {
    Function fn(sizes[j]);
    std::vector<Elem> moved(shape_.objects.size());
    for (std::size_t x = 0; x < sizes[j]; ++x) {
      for (std::size_t i = 0; i < moved.size(); ++i) {
        moved[i] = shape_.objects[i].at(j, k, tuples_[j][x][i]);
      }
      fn[x] = index_.at(k).at(moved);
    }
    trans[{j, k}] = std::move(fn);
  }
  object_ = Diagram(poset, std::move(sizes), trans);
  for (std::size_t i = 0; i < shape_.objects.size(); ++i) {
    std::vector<Function> comps(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : tuples_[j]) comps[j].push_back(t[i]);
    }
    projections_.emplace_back(object_, shape_.objects[i], std::move(comps));
  }
}

std::optional<Elem> Limit::find(std::size_t j, const std::vector<Elem>& tuple) const {
  auto it = index_[j].find(tuple);
  if (it == index_[j].end()) return std::nullopt;
  return it->second;
}

DiagMap Limit::mediate(const Diagram& apex, const std::vector<DiagMap>& legs) const {
  if (legs.size() != shape_.objects.size()) {
    throw BoundaryMismatch("mediate: expected one leg per shape object");
  }
  for (std::size_t i = 0; i < legs.size(); ++i) {
    require_boundary(apex, legs[i].dom(), "mediate");
    require_boundary(shape_.objects[i], legs[i].cod(), "mediate");
  }
  const std::size_t n = apex.poset()->size();
  std::vector<Function> comps(n);
  std::vector<Elem> tuple(legs.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (Elem x = 0; x < apex.size(j); ++x) {
      for (std::size_t i = 0; i < legs.size(); ++i) tuple[i] = legs[i](j, x);
      auto found = find(j, tuple);
      if (!found) throw ValidationError("/mediate", "legs do not form a cone");
      comps[j].push_back(*found);
    }
  }
  return DiagMap(apex, object_, std::move(comps));
}

Limit finite_limit(const LimitShape& shape, PosetPtr poset, const Budget& budget) {
  return Limit(shape, std::move(poset), budget);
}

Pullback pullback(const DiagMap& f, const DiagMap& g, const Budget& budget) {
  require_boundary(f.cod(), g.cod(), "pullback");
  LimitShape shape{{f.dom(), g.dom(), f.cod()}, {{0, 2, f}, {1, 2, g}}};
  auto lim = std::make_shared<const Limit>(shape, f.poset(), budget);
  return Pullback{lim->object(), lim->projection(0), lim->projection(1), f, g, lim};
}

DiagMap Pullback::mediate(const Diagram& apex, const DiagMap& a, const DiagMap& b) const {
  require_boundary(f.dom(), a.cod(), "pullback mediate");
  return limit->mediate(apex, {a, b, compose(a, f)});
}

Product product(const std::vector<Diagram>& factors, PosetPtr poset, const Budget& budget) {
  LimitShape shape{factors, {}};
  auto lim = std::make_shared<const Limit>(shape, std::move(poset), budget);
  return Product{lim->object(), lim->projections(), lim};
}

DiagMap Product::mediate(const Diagram& apex, const std::vector<DiagMap>& legs) const {
  return limit->mediate(apex, legs);
}

DiagMap equalizer(const DiagMap& f, const DiagMap& g) {
  require_boundary(f.dom(), g.dom(), "equalizer");
  require_boundary(f.cod(), g.cod(), "equalizer");
  std::vector<std::vector<Elem>> agree(f.poset()->size());
  for (std::size_t j = 0; j < agree.size(); ++j) {
    for (Elem x = 0; x < f.dom().size(j); ++x) {
      if (f(j, x) == g(j, x)) agree[j].push_back(x);
    }
  }
  return subobject(f.dom(), agree);
}

FibrePower fibre_power(const DiagMap& p, std::size_t n, const Budget& budget) {
  LimitShape shape;
  for (std::size_t i = 0; i < n; ++i) {
    shape.objects.push_back(p.dom());
    shape.arrows.push_back({i, n, p});
  }
  shape.objects.push_back(p.cod());
  auto lim = std::make_shared<const Limit>(shape, p.poset(), budget);
  FibrePower out;
  out.n = n;
  out.object = lim->object();
  for (std::size_t i = 0; i < n; ++i) out.projections.push_back(lim->projection(i));
  out.to_base = lim->projection(n);
  out.limit = lim;
  return out;
}

DiagMap FibrePower::mediate(const Diagram& apex, const std::vector<DiagMap>& legs,
                            const DiagMap& base) const {
  std::vector<DiagMap> all = legs;
  all.push_back(base);
  return limit->mediate(apex, all);
}

DiagMap FibrePower::diagonal(const DiagMap& p) const {
  std::vector<DiagMap> legs(n, DiagMap::identity(p.dom()));
  return mediate(p.dom(), legs, p);
}

Coproduct::Coproduct(const std::vector<Diagram>& summands, PosetPtr poset) {
  const std::size_t n = poset->size();
  for (const auto& d : summands) {
    if (!same_poset(d.poset(), poset)) throw BoundaryMismatch("coproduct: poset mismatch");
  }
  offsets_.assign(n, std::vector<std::size_t>(summands.size() + 1, 0));
  std::vector<std::size_t> sizes(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < summands.size(); ++i) {
      offsets_[j][i + 1] = offsets_[j][i] + summands[i].size(j);
    }
    sizes[j] = offsets_[j][summands.size()];
  }
  std::map<RelatedPair, Function> trans;
  for (const auto& [j, k] : poset->strict_pairs()) {
    Function fn;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      for (Elem x = 0; x < summands[i].size(j); ++x) {
        fn.push_back(offsets_[k][i] + summands[i].at(j, k, x));
      }
    }
    trans[{j, k}] = std::move(fn);
  }
  bool labelled = std::any_of(summands.begin(), summands.end(),
                              [](const Diagram& d) { return d.has_labels(); });
  std::vector<std::vector<std::string>> labels;
  if (labelled) {
    labels.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < summands.size(); ++i) {
        for (Elem x = 0; x < summands[i].size(j); ++x) {
          labels[j].push_back(summands[i].label(j, x) + "@" + std::to_string(i));
        }
      }
    }
  }
  object_ = Diagram(poset, std::move(sizes), trans, std::move(labels));
  for (std::size_t i = 0; i < summands.size(); ++i) {
    std::vector<Function> comps(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (Elem x = 0; x < summands[i].size(j); ++x) comps[j].push_back(offsets_[j][i] + x);
    }
    injections_.emplace_back(summands[i], object_, std::move(comps));
  }
}

std::pair<std::size_t, Elem> Coproduct::locate(std::size_t j, Elem x) const {
  const auto& off = offsets_[j];
  auto it = std::upper_bound(off.begin(), off.end(), x);
  std::size_t i = static_cast<std::size_t>(it - off.begin()) - 1;
  return {i, x - off[i]};
}

Elem Coproduct::inject(std::size_t summand, std::size_t j, Elem x) const {
  return offsets_[j][summand] + x;
}

DiagMap Coproduct::copair(const std::vector<DiagMap>& legs) const {
  if (legs.size() != injections_.size()) {
    throw BoundaryMismatch("copair: expected one leg per summand");
  }
  if (legs.empty()) {
    throw BoundaryMismatch("copair: codomain of the empty copairing is ambiguous");
  }
  const Diagram& target = legs.front().cod();
  for (std::size_t i = 0; i < legs.size(); ++i) {
    require_boundary(injections_[i].dom(), legs[i].dom(), "copair");
    require_boundary(target, legs[i].cod(), "copair");
  }
  std::vector<Function> comps(object_.poset()->size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
      for (Elem y : legs[i].component(j)) comps[j].push_back(y);
    }
  }
  return DiagMap(object_, target, std::move(comps));
}

Coproduct coproduct(const std::vector<Diagram>& summands, PosetPtr poset) {
  return Coproduct(summands, std::move(poset));
}

DiagMap coproduct_map(const Coproduct& dom, const Coproduct& cod,
                      const std::vector<DiagMap>& maps) {
  if (maps.size() != dom.arity() || maps.size() != cod.arity()) {
    throw BoundaryMismatch("coproduct_map: arity mismatch");
  }
  std::vector<DiagMap> legs;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    legs.push_back(compose(maps[i], cod.injection(i)));
  }
  if (legs.empty()) return DiagMap::identity(dom.object());
  return dom.copair(legs);
}

SumDecomposition decompose_over_sum(const DiagMap& f, const Coproduct& sum) {
  require_boundary(sum.object(), f.cod(), "decompose_over_sum");
  SumDecomposition out;
  std::vector<Diagram> part_doms;
  for (std::size_t i = 0; i < sum.arity(); ++i) {
    Pullback pb = pullback(f, sum.injection(i));
    out.parts.push_back(pb.to_right);
    out.part_to_dom.push_back(pb.to_left);
    part_doms.push_back(pb.object);
  }
  Coproduct parts(part_doms, f.poset());
  out.comparison = out.part_to_dom.empty() ? DiagMap::from_initial(f.dom())
                                           : parts.copair(out.part_to_dom);
  out.comparison_is_iso = is_iso(out.comparison);
  return out;
}

bool is_pullback_square(const DiagMap& top, const DiagMap& left, const DiagMap& right,
                        const DiagMap& bottom) {
  if (!(compose(top, right) == compose(left, bottom))) return false;
  Pullback pb = pullback(bottom, right);
  return is_iso(pb.mediate(top.dom(), left, top));
}

}  // namespace polyfun
