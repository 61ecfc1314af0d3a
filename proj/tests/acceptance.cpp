// Acceptance run: one PASS/FAIL line per criterion. Seeds and case counts are
// fixed so that every run is reproducible.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "laws.hpp"
#include "polyfun/random.hpp"
#include "polyfun_cli/report.hpp"

namespace {

using polyfun::laws::Outcome;

struct Part {
  std::string name;
  Outcome outcome;
};

int failures = 0;

void criterion(int number, const std::string& title, const std::vector<Part>& parts) {
  bool ok = true;
  std::string summary;
  for (const Part& p : parts) {
    ok = ok && p.outcome.pass();
    if (!summary.empty()) summary += "; ";
    summary += p.name + " " + std::to_string(p.outcome.cases - p.outcome.failures) + "/" +
               std::to_string(p.outcome.cases);
    if (!p.outcome.detail.empty()) summary += " (" + p.outcome.detail + ")";
    if (!p.outcome.pass() && !p.outcome.first_failure.empty()) {
      summary += " first failure: " + p.outcome.first_failure;
    }
  }
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s [%s]\n", ok ? "PASS" : "FAIL", number, title.c_str(),
              summary.c_str());
  std::fflush(stdout);
}

Outcome discrepancy(const std::string& path) {
  using namespace polyfun;
  Outcome out;
  std::vector<std::pair<std::string, Polynomial>> polys;
  Rng rng(15);
  for (int i = 0; i < 8; ++i) {
    polys.emplace_back("random-" + std::to_string(i), random_one_point_polynomial(rng, 4, 3));
  }
  try {
    cli::Json report = cli::discrepancy_report(polys);
    std::string text = report.dump(2);
    cli::Json reparsed = cli::Json::parse(text);
    out.cases = 3;
    if (!cli::report_consistent(report)) {
      ++out.failures;
      out.first_failure = "report flags disagree with recomputation";
    }
    if (reparsed != report || reparsed.dump(2) != text) {
      ++out.failures;
      out.first_failure = "report does not round-trip";
    }
    if (!report.value("consistent", false)) {
      ++out.failures;
      out.first_failure = "report marks itself inconsistent";
    }
    if (!path.empty()) std::ofstream(path) << text << "\n";
    out.detail = std::to_string(report["homterm_vs_classical"].size()) + " term entries, " +
                 std::to_string(report["order_f_vs_iterated_derivative"].size()) +
                 " order entries";
  } catch (const std::exception& e) {
    out.cases = 1;
    out.failures = 1;
    out.first_failure = e.what();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace polyfun::laws;
  std::string report_path = argc > 1 ? argv[1] : "";

  criterion(1, "Pi adjunction hom counts", {{"adjunction", adjunction(1, 200)}});
  criterion(2, "negation idempotence and disjointness", {{"negation", negation(2, 200)}});
  criterion(3, "dense/closed factorization system",
            {{"factorization", factorization(3, 200)},
             {"uniqueness", factorization_uniqueness(4, 200)},
             {"pullback stability", pullback_stability(5, 200)}});
  criterion(4, "Lawvere-Tierney laws", {{"closure", lawvere_tierney(6, 200)}});
  criterion(5, "counting battery", {{"battery", counting_battery(7, 200)}});
  criterion(6, "classical order-2 coefficients", {{"classical", classical_coefficients(8, 50)}});
  criterion(7, "decidability", {{"decidability", decidability(9, 200)}});
  criterion(8, "localization",
            {{"inversion", dense_monos_invert(10, 200)},
             {"span category", span_category(11, 200)},
             {"localized derivative", localized_derivative_sierpinski()}});
  criterion(9, "terminality",
            {{"dpb", dpb_terminality(12, 100)},
             {"composite", composite_terminality(13, 100)},
             {"n-fibre", nfibre_terminality(14, 100)}});
  criterion(10, "discrepancy report", {{"report", discrepancy(report_path)}});
  return failures == 0 ? 0 : 1;
}
