#include "polyfun_cli/report.hpp"

#include "polyfun/derivative.hpp"
#include "polyfun/terms.hpp"

namespace polyfun::cli {

namespace {

Polynomial model_a() {
  PosetPtr point = FinPoset::point();
  Diagram three(point, {3}, {});
  return Polynomial::one_variable(DiagMap(three, three, {{0, 0, 1}}));
}

CountingPoly::Coeff factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Json term_entry(const std::string& name, const Polynomial& p, std::size_t n,
                const Budget& budget) {
  CountingPoly strict = counting_polynomial(homterm(p, n, budget).term);
  CountingPoly classical = counting_polynomial(classical_term(p, TermSpec::arity(n)));
  return Json{{"polynomial", name},
              {"n", n},
              {"strict", counting_json(strict)},
              {"classical", counting_json(classical)},
              {"strict_coefficient", strict.coefficient(n)},
              {"classical_coefficient", classical.coefficient(n)},
              {"factorial", factorial(n)},
              {"factorial_relation", strict.coefficient(n) == factorial(n) * classical.coefficient(n)},
              {"agree", strict == classical}};
}

Json order_entry(const std::string& name, const Polynomial& p, std::size_t f,
                 const Budget& budget) {
  Diagram order = Diagram::constant(p.poset(), f);
  CountingPoly candidate = counting_polynomial(candidate_derivative_order(p, order, budget).poly);
  Polynomial iterated = p;
  CountingPoly formal = counting_polynomial(p);
  for (std::size_t i = 0; i < f; ++i) {
    iterated = candidate_derivative(iterated, budget).poly;
    formal = formal.derivative();
  }
  CountingPoly built = counting_polynomial(iterated);
  return Json{{"polynomial", name},
              {"F", f},
              {"candidate", counting_json(candidate)},
              {"iterated_derivative", counting_json(built)},
              {"formal_derivative", counting_json(formal)},
              {"agree", candidate == built}};
}

}  // namespace

Json counting_json(const CountingPoly& c) {
  Json out = Json::array();
  for (const auto& [e, k] : c.terms()) out.push_back({e, k});
  return out;
}

CountingPoly counting_from_json(const Json& j) {
  std::map<std::size_t, CountingPoly::Coeff> coeffs;
  for (const Json& term : j) coeffs[term.at(0).get<std::size_t>()] += term.at(1).get<CountingPoly::Coeff>();
  return CountingPoly(coeffs);
}

Json discrepancy_report(const std::vector<std::pair<std::string, Polynomial>>& polys,
                        const Budget& budget) {
  std::vector<std::pair<std::string, Polynomial>> all{{"model-a", model_a()}};
  for (const auto& entry : polys) {
    if (entry.second.poset()->size() == 1 && entry.second.is_one_variable()) all.push_back(entry);
  }
  Json terms = Json::array();
  Json orders = Json::array();
  for (const auto& [name, p] : all) {
    terms.push_back(term_entry(name, p, 2, budget));
    for (std::size_t f : {1, 2}) orders.push_back(order_entry(name, p, f, budget));
  }
  Json report{{"homterm_vs_classical", terms}, {"order_f_vs_iterated_derivative", orders}};
  report["consistent"] = report_consistent(report);
  return report;
}

bool report_consistent(const Json& report) {
  if (!report.contains("homterm_vs_classical") ||
      !report.contains("order_f_vs_iterated_derivative")) {
    return false;
  }
  for (const Json& t : report.at("homterm_vs_classical")) {
    std::size_t n = t.at("n").get<std::size_t>();
    CountingPoly strict = counting_from_json(t.at("strict"));
    CountingPoly classical = counting_from_json(t.at("classical"));
    auto sc = t.at("strict_coefficient").get<CountingPoly::Coeff>();
    auto cc = t.at("classical_coefficient").get<CountingPoly::Coeff>();
    if (strict.coefficient(n) != sc || classical.coefficient(n) != cc) return false;
    if (t.at("factorial").get<CountingPoly::Coeff>() != factorial(n)) return false;
    if (t.at("factorial_relation").get<bool>() != (sc == factorial(n) * cc)) return false;
    if (t.at("agree").get<bool>() != (strict == classical)) return false;
  }
  for (const Json& o : report.at("order_f_vs_iterated_derivative")) {
    CountingPoly candidate = counting_from_json(o.at("candidate"));
    CountingPoly built = counting_from_json(o.at("iterated_derivative"));
    CountingPoly formal = counting_from_json(o.at("formal_derivative"));
    if (o.at("agree").get<bool>() != (candidate == built)) return false;
    if (!(built == formal)) return false;
  }
  return true;
}

}  // namespace polyfun::cli
