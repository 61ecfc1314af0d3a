#include "polyfun/search.hpp"

#include <algorithm>
#include <numeric>

namespace polyfun {

namespace {

struct Var {
  std::size_t j;
  Elem a;
  // (j', a') with j' < j and a' sent to a.
  std::vector<std::pair<std::size_t, Elem>> preds;
};

class Engine {
 public:
  Engine(const Diagram& a, const Diagram& c, const std::vector<OverConstraint>& constraints,
         const SearchOptions& options)
      : a_(a), c_(c), constraints_(constraints), options_(options) {
    require_same_poset(a, c, "map search");
    for (const auto& oc : constraints_) {
      require_boundary(a, oc.along_dom.dom(), "map search");
      require_boundary(c, oc.along_cod.dom(), "map search");
      require_boundary(oc.along_dom.cod(), oc.along_cod.cod(), "map search");
    }
    const FinPoset& poset = *a.poset();
    const std::size_t n = poset.size();
    feasible_ = true;
    if (options_.bijective) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a.size(j) != c.size(j)) feasible_ = false;
      }
    }
    assignment_.resize(n);
    used_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      assignment_[j].assign(a.size(j), 0);
      used_[j].assign(c.size(j), false);
      for (Elem x = 0; x < a.size(j); ++x) {
        Var v{j, x, {}};
        for (std::size_t i : poset.down_set(j)) {
          if (i == j) continue;
          for (Elem y = 0; y < a.size(i); ++y) {
            if (a.at(i, j, y) == x) v.preds.emplace_back(i, y);
          }
        }
        vars_.push_back(std::move(v));
      }
    }
  }

  template <typename Visit>
  std::size_t run(Visit&& visit) {
    if (!feasible_) return 0;
    visited_ = 0;
    stop_ = false;
    rec(0, visit);
    return visited_;
  }

  DiagMap current() const { return DiagMap(a_, c_, assignment_); }

 private:
  bool admissible(const Var& v, Elem value) const {
    for (const auto& oc : constraints_) {
      if (oc.along_cod(v.j, value) != oc.along_dom(v.j, v.a)) return false;
    }
    if ((options_.injective || options_.bijective) && used_[v.j][value]) return false;
    for (const auto& [i, y] : v.preds) {
      if (c_.at(i, v.j, assignment_[i][y]) != value) return false;
    }
    return true;
  }

  template <typename Visit>
  void rec(std::size_t depth, Visit& visit) {
    if (stop_) return;
    if (depth == vars_.size()) {
      ++visited_;
      if (!visit() || visited_ >= options_.limit) stop_ = true;
      return;
    }
    const Var& v = vars_[depth];
    auto try_value = [&](Elem value) {
      if (!admissible(v, value)) return;
      assignment_[v.j][v.a] = value;
      used_[v.j][value] = true;
      rec(depth + 1, visit);
      used_[v.j][value] = false;
    };
    if (!v.preds.empty()) {
      const auto& [i, y] = v.preds.front();
      try_value(c_.at(i, v.j, assignment_[i][y]));
      return;
    }
    std::vector<Elem> values(c_.size(v.j));
    std::iota(values.begin(), values.end(), Elem{0});
    if (options_.shuffle) std::shuffle(values.begin(), values.end(), *options_.shuffle);
    for (Elem value : values) {
      if (stop_) return;
      try_value(value);
    }
  }

  const Diagram& a_;
  const Diagram& c_;
  const std::vector<OverConstraint>& constraints_;
  SearchOptions options_;
  bool feasible_ = true;
  bool stop_ = false;
  std::size_t visited_ = 0;
  std::vector<Var> vars_;
  std::vector<Function> assignment_;
  std::vector<std::vector<bool>> used_;
};

}  // namespace

std::size_t for_each_map(const Diagram& a, const Diagram& c,
                         const std::vector<OverConstraint>& constraints,
                         const SearchOptions& options,
                         const std::function<bool(const DiagMap&)>& visit) {
  Engine engine(a, c, constraints, options);
  return engine.run([&] { return visit(engine.current()); });
}

std::size_t count_maps(const Diagram& a, const Diagram& c,
                       const std::vector<OverConstraint>& constraints) {
  Engine engine(a, c, constraints, SearchOptions{});
  return engine.run([] { return true; });
}

std::optional<DiagMap> find_map(const Diagram& a, const Diagram& c,
                                const std::vector<OverConstraint>& constraints,
                                const SearchOptions& options) {
  std::optional<DiagMap> found;
  SearchOptions opts = options;
  opts.limit = 1;
  for_each_map(a, c, constraints, opts, [&](const DiagMap& m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<DiagMap> find_iso(const Diagram& a, const Diagram& c,
                                const std::vector<OverConstraint>& constraints) {
  SearchOptions opts;
  opts.bijective = true;
  return find_map(a, c, constraints, opts);
}

std::optional<DiagMap> find_slice_iso(const DiagMap& f, const DiagMap& g) {
  require_boundary(f.cod(), g.cod(), "find_slice_iso");
  return find_iso(f.dom(), g.dom(), {OverConstraint{f, g}});
}

bool slice_isomorphic(const DiagMap& f, const DiagMap& g) {
  return find_slice_iso(f, g).has_value();
}

std::size_t count_slice_maps(const DiagMap& x_anchor, const DiagMap& y_anchor) {
  require_boundary(x_anchor.cod(), y_anchor.cod(), "count_slice_maps");
  return count_maps(x_anchor.dom(), y_anchor.dom(), {OverConstraint{x_anchor, y_anchor}});
}

}  // namespace polyfun
