#include "polyfun_cli/commands.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>

#include "polyfun/derivative.hpp"
#include "polyfun/localization.hpp"
#include "polyfun/random.hpp"
#include "polyfun/search.hpp"
#include "polyfun/terms.hpp"
#include "polyfun_cli/dot.hpp"
#include "polyfun_cli/report.hpp"

namespace polyfun::cli {

namespace {

using Handler = std::function<Result(const Model&, const Args&, const Budget&)>;

const std::string& need(const std::string& value, const char* option) {
  if (value.empty()) throw UnknownName(std::string("missing --") + option);
  return value;
}

std::size_t need(const std::optional<std::size_t>& value, const char* option) {
  if (!value) throw UnknownName(std::string("missing --") + option);
  return *value;
}

bool one_point(const Polynomial& p) { return p.poset()->size() == 1 && p.is_one_variable(); }

void add_counting(Json& j, const char* key, const Polynomial& p) {
  j[key] = one_point(p) ? counting_json(counting_polynomial(p)) : Json(nullptr);
}

Json span_json(const Span& s) {
  return Json{{"left", map_json(s.left())}, {"right", map_json(s.right())}};
}

Result eval(const Model& m, const Args& a, const Budget& b) {
  const Polynomial& p = lookup_polynomial(m, need(a.poly, "poly"));
  SliceObj x;
  if (!a.arg.empty()) {
    const Diagram& obj = lookup_object(m, a.arg);
    if (!a.map.empty()) {
      x = SliceObj{lookup_morphism(m, a.map)};
      require_boundary(obj, x.total(), "eval");
    } else {
      if (!p.i().is_terminal()) throw PreconditionError("eval: give --map into I");
      std::vector<Function> comps(obj.poset()->size());
      for (std::size_t j = 0; j < comps.size(); ++j) comps[j].assign(obj.size(j), 0);
      x = SliceObj{DiagMap(obj, p.i(), comps)};
    }
  } else {
    std::size_t n = need(a.size, "size");
    if (!p.i().is_terminal()) throw PreconditionError("eval: --size needs I = 1");
    Diagram obj = Diagram::constant(p.poset(), n);
    std::vector<Function> comps(obj.poset()->size(), Function(n, 0));
    x = SliceObj{DiagMap(obj, p.i(), comps)};
  }
  SliceObj y = extension_eval(p, x, b);
  Result r;
  r.json = Json{{"command", "eval"},
                {"poly", a.poly},
                {"result", map_json(y.anchor)},
                {"total_size", y.total().total_size()}};
  if (a.dot) r.dot = dot_map(y.anchor, "P(X)", "J");
  return r;
}

Result polynomial_result(const char* command, const Polynomial& p, const Args& a) {
  Result r;
  r.json = Json{{"command", command}, {"polynomial", polynomial_json(p)}};
  add_counting(r.json, "counting", p);
  if (a.dot) r.dot = dot_map(p.p(), "E", "B");
  return r;
}

Result compose_cmd(const Model& m, const Args& a, const Budget& b) {
  const Polynomial& outer = lookup_polynomial(m, need(a.outer, "outer"));
  const Polynomial& inner = lookup_polynomial(m, need(a.inner, "inner"));
  return polynomial_result("compose", poly_compose(outer, inner, b), a);
}

Result product_cmd(const Model& m, const Args& a, const Budget& b) {
  const Polynomial& l = lookup_polynomial(m, need(a.left, "left"));
  const Polynomial& r = lookup_polynomial(m, need(a.right, "right"));
  return polynomial_result("product", poly_product(l, r, b), a);
}

Json witness_json(const AdjunctionWitness& w) {
  return Json{{"unit_cartesian", w.unit_cartesian},
              {"counit_cartesian", w.counit_cartesian},
              {"triangle_left", w.triangle_left},
              {"triangle_right", w.triangle_right}};
}

Result derive(const Model& m, const Args& a, const Budget& b) {
  const Polynomial& p = lookup_polynomial(m, need(a.poly, "poly"));
  DerivativeResult d = derivative(p, b);
  Result r = polynomial_result("derive", d.candidate.poly, a);
  r.json["decidable"] = d.decidable;
  r.json["formal_derivative"] =
      one_point(p) ? counting_json(counting_polynomial(p).derivative()) : Json(nullptr);
  r.json["witness"] = d.witness ? witness_json(*d.witness) : Json(nullptr);
  return r;
}

Result negate_cmd(const Model& m, const Args& a, const Budget& b) {
  const DiagMap& f = lookup_morphism(m, need(a.map, "map"));
  NegationResult n = negate(f, b);
  Result r;
  r.json = Json{{"command", "negate"},
                {"map", a.map},
                {"complement", diagram_json(n.complement)},
                {"negation", components_json(n.negmap)}};
  if (a.dot) r.dot = dot_map(n.negmap, "not " + a.map, "B");
  return r;
}

Result factorize(const Model& m, const Args& a, const Budget& b) {
  const DiagMap& f = lookup_morphism(m, need(a.map, "map"));
  FactorizationResult fr = factorize_dense_closed(f, b);
  Result r;
  r.json = Json{{"command", "factorize"},
                {"map", a.map},
                {"image", diagram_json(fr.image)},
                {"dense_part", components_json(fr.dense_part)},
                {"closed_part", components_json(fr.closed_part)},
                {"dense_part_is_dense", is_dense(fr.dense_part, b)},
                {"closed_part_is_closed", classify_density(fr.closed_part, b).closed}};
  if (a.dot) r.dot = dot_chain({fr.dense_part, fr.closed_part}, {"dom", "image", "cod"});
  return r;
}

Result homterm_cmd(const Model& m, const Args& a, const Budget& b) {
  const Polynomial& p = lookup_polynomial(m, need(a.poly, "poly"));
  std::size_t n = need(a.n, "n");
  HomTerm h = homterm(p, n, b);
  Result r = polynomial_result("homterm", h.term, a);
  r.json["n"] = n;
  if (one_point(p)) {
    CountingPoly strict = counting_polynomial(h.term);
    CountingPoly classical = counting_polynomial(classical_term(p, TermSpec::arity(n)));
    r.json["strict_coefficient"] = strict.coefficient(n);
    r.json["classical_coefficient"] = classical.coefficient(n);
    r.json["classical_counting"] = counting_json(classical);
  }
  return r;
}

Result classical_cmd(const Model& m, const Args& a, const Budget&) {
  const Polynomial& p = lookup_polynomial(m, need(a.poly, "poly"));
  TermSpec spec = a.sigma.empty() ? TermSpec::arity(need(a.n, "n")) : TermSpec::labeling(a.sigma);
  return polynomial_result("classical-term", classical_term(p, spec), a);
}

Result constant_cmd(const Model& m, const Args& a, const Budget& b) {
  const Polynomial& p = lookup_polynomial(m, need(a.poly, "poly"));
  return polynomial_result("constant", constant_term(p, b), a);
}

Result nfpb(const Model& m, const Args& a, const Budget& b) {
  const DiagMap& p = lookup_morphism(m, need(a.map, "map"));
  std::size_t n = need(a.n, "n");
  NFibreResult f = n_fibre_pullback(p, n, b);
  Result r;
  r.json = Json{{"command", "nfpb"},
                {"map", a.map},
                {"n", n},
                {"term_base", diagram_json(f.term_base)},
                {"base_to_b", components_json(f.base_to_b)},
                {"copies", diagram_json(f.copies.object())},
                {"left", components_json(f.left)},
                {"top_is_codiagonal", f.top_is_codiag}};
  if (a.dot) r.dot = dot_map(f.base_to_b, "base", "B");
  return r;
}

Result decidability_cmd(const Model& m, const Args& a, const Budget& b) {
  const DiagMap& f = lookup_morphism(m, need(a.map, "map"));
  DecidabilityResult d = decidability(f, b);
  Result r;
  r.json = Json{{"command", "decidability"},
                {"map", a.map},
                {"decidability_map", map_json(d.map)},
                {"decidable", d.decidable},
                {"map_is_mono", d.map_is_mono},
                {"map_is_dense", d.map_is_dense}};
  if (a.dot) r.dot = dot_map(d.map, "A + not A", "X");
  return r;
}

Result localize_invert(const Model& m, const Args& a, const Budget& b) {
  const DiagMap& w = lookup_morphism(m, need(a.map, "map"));
  Span inv = invert_dense_mono(w, b);
  Span there = embed(w);
  bool verified = span_equal(span_compose(inv, there, b), span_identity(w.dom()), b) &&
                  span_equal(span_compose(there, inv, b), span_identity(w.cod()), b);
  Result r;
  r.json = Json{{"command", "localize-invert"},
                {"map", a.map},
                {"inverse", span_json(inv)},
                {"invertible_before_localizing", is_iso(w)},
                {"inverse_verified", verified}};
  if (a.dot) r.dot = dot_map(w, "A", "X");
  return r;
}

Result localized_derive(const Model& m, const Args& a, const Budget& b) {
  const Polynomial& p = lookup_polynomial(m, need(a.poly, "poly"));
  LocalizedDerivative d = localized_derivative(p, b);
  Result r = polynomial_result("localized-derive", d.e_level.candidate.poly, a);
  r.json["decidable"] = d.e_level.decidable;
  r.json["witness"] = witness_json(d.witness);
  r.json["comparison"] = span_json(d.comparison);
  r.json["comparison_invertible"] = d.comparison_invertible;
  r.json["counit_pullback_localized"] = d.counit_pullback_localized;
  r.json["triangle_left"] = d.triangle_left;
  r.json["triangle_right"] = d.triangle_right;
  return r;
}

Result report_cmd(const Model& m, const Args&, const Budget& b) {
  std::vector<std::pair<std::string, Polynomial>> polys;
  for (const auto& [name, entry] : m.polynomials) polys.emplace_back(name, entry.poly);
  Result r;
  r.json = discrepancy_report(polys, b);
  r.json["command"] = "report";
  return r;
}

// ---- check ----

class Suite {
 public:
  void add(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      note = e.what();
    }
    Json entry{{"name", name}, {"pass", ok}};
    if (!note.empty()) entry["error"] = note;
    checks_.push_back(entry);
    failed_ = failed_ || !ok;
  }
  Json checks() const { return checks_; }
  bool failed() const { return failed_; }

 private:
  Json checks_ = Json::array();
  bool failed_ = false;
};

void check_morphism(Suite& s, const std::string& name, const DiagMap& f, const Budget& b) {
  s.add(name + ": triple negation", [&] {
    DiagMap n1 = negate(f, b).negmap;
    DiagMap n3 = negate(negate(n1, b).negmap, b).negmap;
    return slice_isomorphic(n3, n1);
  });
  s.add(name + ": negation disjoint", [&] {
    return pullback(f, negate(f, b).negmap, b).object.empty();
  });
  s.add(name + ": dense-closed factorization", [&] {
    FactorizationResult fr = factorize_dense_closed(f, b);
    return compose(fr.dense_part, fr.closed_part) == f && is_dense(fr.dense_part, b) &&
           classify_density(fr.closed_part, b).closed;
  });
  if (!is_mono(f)) return;
  s.add(name + ": decidability map is a dense mono", [&] {
    DecidabilityResult d = decidability(f, b);
    bool point = f.poset()->size() == 1;
    return d.map_is_mono && d.map_is_dense && (!point || d.decidable);
  });
  if (!is_dense(f, b)) return;
  s.add(name + ": invertible after localizing", [&] {
    Span inv = invert_dense_mono(f, b);
    Span there = embed(f);
    return span_equal(span_compose(inv, there, b), span_identity(f.dom()), b) &&
           span_equal(span_compose(there, inv, b), span_identity(f.cod()), b);
  });
}

void check_dpb(Suite& s, const std::string& name, const DiagMap& u, const DiagMap& p, Rng& rng,
               const Budget& b) {
  s.add(name + ": dpb mediates random competitors", [&] {
    DpbResult d = dpb(u, p, b);
    for (int i = 0; i < 10; ++i) {
      Diagram y2 = random_diagram(p.poset(), rng, 2);
      std::optional<DiagMap> h = random_map(y2, d.side, rng);
      if (!h) continue;
      Pullback x2 = pullback(d.top, *h, b);
      DpbCompetitor c{x2.to_right, compose(x2.to_left, d.counit), compose(*h, d.right)};
      if (!(dpb_mediate(d, c).on_side == *h)) return false;
    }
    return true;
  });
}

void check_polynomial(Suite& s, const std::string& name, const Polynomial& p, Rng& rng,
                      const Budget& b) {
  if (one_point(p)) {
    CountingPoly c = counting_polynomial(p);
    s.add(name + ": extension matches counting polynomial", [&] {
      for (std::size_t n = 0; n <= 3; ++n) {
        if (extension_size(p, n, b) != c.evaluate(n)) return false;
      }
      return true;
    });
    s.add(name + ": derivative matches formal derivative", [&] {
      return counting_polynomial(candidate_derivative(p, b).poly) == c.derivative();
    });
    s.add(name + ": terms reassemble and homterm = n! classical", [&] {
      std::size_t top = c.is_zero() ? 0 : c.coefficients().rbegin()->first;
      CountingPoly sum;
      for (std::size_t n = 0; n <= top; ++n) {
        CountingPoly classical = counting_polynomial(classical_term(p, TermSpec::arity(n)));
        CountingPoly strict = counting_polynomial(homterm(p, n, b).term);
        sum = sum + classical;
        CountingPoly::Coeff fact = 1;
        for (std::size_t k = 2; k <= n; ++k) fact *= k;
        if (strict.coefficient(n) != fact * classical.coefficient(n)) return false;
      }
      return sum == c;
    });
  }
  if (p.is_one_variable()) {
    s.add(name + ": derivative adjunction", [&] {
      DerivativeResult d = derivative(p, b);
      if (d.witness) return d.witness->triangle_left && d.witness->triangle_right;
      LocalizedDerivative l = localized_derivative(p, b);
      return l.comparison_invertible && l.counit_pullback_localized && l.triangle_left &&
             l.triangle_right;
    });
  }
  s.add(name + ": n-fibre pullbacks mediate random competitors", [&] {
    for (std::size_t n = 0; n <= 2; ++n) {
      NFibreResult r = n_fibre_pullback(p.p(), n, b);
      for (int i = 0; i < 5; ++i) {
        Diagram a = random_diagram(p.poset(), rng, 2);
        std::optional<DiagMap> h = random_map(a, r.term_base, rng);
        if (!h) continue;
        NFibreCompetitor c{a, {}, compose(*h, r.base_to_b)};
        for (std::size_t k = 0; k < n; ++k) {
          c.legs.push_back(compose(*h, compose(r.copies.injection(k), r.left)));
        }
        if (!(n_fibre_mediate(r, p.p(), c, b) == *h)) return false;
      }
    }
    return true;
  });
}

Result check(const Model& m, const Args& a, const Budget& b) {
  if (!a.seed) throw UnknownName("check needs --seed");
  Rng rng(*a.seed);
  Suite s;
  for (const auto& [name, entry] : m.morphisms) check_morphism(s, name, entry.map, b);
  for (const auto& [un, u] : m.morphisms) {
    for (const auto& [pn, p] : m.morphisms) {
      if (u.cod == p.dom) check_dpb(s, "dpb(" + un + ", " + pn + ")", u.map, p.map, rng, b);
    }
  }
  for (const auto& [name, entry] : m.polynomials) check_polynomial(s, name, entry.poly, rng, b);
  Result r;
  r.json = Json{{"command", "check"}, {"seed", *a.seed}, {"checks", s.checks()},
                {"passed", !s.failed()}};
  r.exit_code = s.failed() ? kCheckFailed : kOk;
  return r;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"eval", eval},
      {"compose", compose_cmd},
      {"product", product_cmd},
      {"derive", derive},
      {"negate", negate_cmd},
      {"factorize", factorize},
      {"homterm", homterm_cmd},
      {"classical-term", classical_cmd},
      {"constant", constant_cmd},
      {"nfpb", nfpb},
      {"decidability", decidability_cmd},
      {"localize-invert", localize_invert},
      {"localized-derive", localized_derive},
      {"check", check},
      {"report", report_cmd},
  };
  return table;
}

void write_error(std::ostream& err, const char* kind, const std::string& message,
                 const std::string* location = nullptr) {
  Json e{{"error", kind}, {"message", message}};
  if (location != nullptr) e["location"] = *location;
  err << e.dump() << "\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Result run_command(const std::string& command, const Model& model, const Args& args,
                   const Budget& budget) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw UnknownName("unknown command '" + command + "'");
  return it->second(model, args, budget);
}

int execute(const std::string& command, const std::string& model_text, const Args& args,
            const Budget& budget, std::ostream& out, std::ostream& err) {
  try {
    Model model = parse_model(model_text);
    Result r = run_command(command, model, args, budget);
    if (args.dot && !r.dot.empty()) {
      out << r.dot;
    } else {
      out << r.json.dump(2) << "\n";
    }
    return r.exit_code;
  } catch (const UnknownName& e) {
    write_error(err, "unknown-name", e.what());
    return kUnknownName;
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what(), &e.location());
    return kInvalid;
  } catch (const ResourceError& e) {
    write_error(err, "resource", e.what());
    return kResource;
  } catch (const Error& e) {
    write_error(err, "validation", e.what());
    return kInvalid;
  }
}

Budget budget_from_environment() {
  Budget b;
  if (const char* raw = std::getenv("POLYFUN_MAX_ELEMS")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(raw, &used);
      if (used == std::string(raw).size()) b.max_elements = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // Unparsable values leave the default in place.
    }
  }
  return b;
}

}  // namespace polyfun::cli
