#include "polyfun/slice.hpp"

#include <algorithm>

namespace polyfun {

SliceObj delta(const DiagMap& p, const SliceObj& y, const Budget& budget) {
  require_boundary(p.cod(), y.base(), "delta");
  Pullback pb = pullback(p, y.anchor, budget);
  return SliceObj{pb.to_left};
}

SliceObj sigma(const DiagMap& p, const SliceObj& x) {
  require_boundary(p.dom(), x.base(), "sigma");
  return SliceObj{compose(x.anchor, p)};
}

DependentProduct::DependentProduct(const DiagMap& p, const SliceObj& x, const Budget& budget)
    : p_(p), x_(x) {
  require_boundary(p.dom(), x.base(), "pi");
  const Diagram& e = p.dom();
  const Diagram& b = p.cod();
  const Diagram& xs = x.total();
  const DiagMap& anchor = x.anchor;
  const FinPoset& poset = *p.poset();
  const std::size_t n = poset.size();

  base_of_.resize(n);
  values_.resize(n);
  index_.resize(n);
  std::size_t total = 0;
  std::size_t steps = 0;
  const std::size_t max_steps = budget.max_elements * 64;

  for (std::size_t j = 0; j < n; ++j) {
    for (Elem base = 0; base < b.size(j); ++base) {
      const std::vector<Slot> slot_list = slots(j, base);
      const std::size_t m = slot_list.size();
      // Earlier slots whose transport lands on slot s.
      std::vector<std::vector<std::size_t>> forced_by(m);
      std::vector<std::vector<Elem>> options(m);
      for (std::size_t s = 0; s < m; ++s) {
        const auto [l, target] = slot_list[s];
        for (std::size_t r = 0; r < s; ++r) {
          const auto [k, src] = slot_list[r];
          if (k != l && poset.leq(k, l) && e.at(k, l, src) == target) forced_by[s].push_back(r);
        }
        for (Elem v = 0; v < xs.size(l); ++v) {
          if (anchor(l, v) == target) options[s].push_back(v);
        }
      }
      std::vector<Elem> family(m);
      auto rec = [&](auto&& self, std::size_t s) -> void {
        if (++steps > max_steps) budget.check(budget.max_elements + 1, "pi search");
        if (s == m) {
          index_[j].emplace(std::make_pair(base, family), base_of_[j].size());
          base_of_[j].push_back(base);
          values_[j].push_back(family);
          budget.check(++total, "pi");
          return;
        }
        const std::size_t l = slot_list[s].k;
        if (!forced_by[s].empty()) {
          const Slot& from = slot_list[forced_by[s].front()];
          const Elem v = xs.at(from.k, l, family[forced_by[s].front()]);
          for (std::size_t r : forced_by[s]) {
            if (xs.at(slot_list[r].k, l, family[r]) != v) return;
          }
          family[s] = v;
          self(self, s + 1);
          return;
        }
        for (Elem v : options[s]) {
          family[s] = v;
          self(self, s + 1);
        }
      };
      rec(rec, 0);
    }
  }

  std::vector<std::size_t> sizes(n);
  for (std::size_t j = 0; j < n; ++j) sizes[j] = base_of_[j].size();
  std::map<RelatedPair, Function> trans;
  for (const auto& [j, k] : poset.strict_pairs()) {
    Function fn(sizes[j]);
    for (Elem y = 0; y < sizes[j]; ++y) {
      const Elem base = base_of_[j][y];
      const std::vector<Slot> from = slots(j, base);
      const Elem moved = b.at(j, k, base);
      const std::vector<Slot> to = slots(k, moved);
      std::vector<Elem> restricted;
      restricted.reserve(to.size());
      for (const Slot& s : to) {
        auto it = std::lower_bound(from.begin(), from.end(), s);
        restricted.push_back(values_[j][y][static_cast<std::size_t>(it - from.begin())]);
      }
      fn[y] = index_[k].at({moved, restricted});
    }
    trans[{j, k}] = std::move(fn);
  }
  Diagram object(p.poset(), std::move(sizes), trans);
  result_ = SliceObj{DiagMap(object, b, base_of_)};
}

std::vector<DependentProduct::Slot> DependentProduct::slots(std::size_t j, Elem b) const {
  std::vector<Slot> out;
  const Diagram& e = p_.dom();
  const Diagram& base = p_.cod();
  for (std::size_t k : p_.poset()->up_set(j)) {
    const Elem bk = base.at(j, k, b);
    for (Elem x = 0; x < e.size(k); ++x) {
      if (p_(k, x) == bk) out.push_back(Slot{k, x});
    }
  }
  return out;
}

Elem DependentProduct::value(std::size_t j, Elem y, std::size_t k, Elem e) const {
  const std::vector<Slot> list = slots(j, base_of_[j][y]);
  auto it = std::lower_bound(list.begin(), list.end(), Slot{k, e});
  if (it == list.end() || !(*it == Slot{k, e})) {
    throw PreconditionError("DependentProduct::value: slot outside the family's fibre");
  }
  return values_[j][y][static_cast<std::size_t>(it - list.begin())];
}

std::optional<Elem> DependentProduct::find(std::size_t j, Elem b,
                                           const std::vector<Elem>& values) const {
  auto it = index_[j].find({b, values});
  if (it == index_[j].end()) return std::nullopt;
  return it->second;
}

SliceObj pi(const DiagMap& p, const SliceObj& x, const Budget& budget) {
  return DependentProduct(p, x, budget).result();
}

}  // namespace polyfun
