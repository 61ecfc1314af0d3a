#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyfun/polynomial.hpp"
#include "polyfun_cli/model_io.hpp"

namespace polyfun::cli {

/// [[exponent, coefficient], ...] in descending exponent order.
Json counting_json(const CountingPoly& c);
CountingPoly counting_from_json(const Json& j);

/// Strict versus classical order-2 terms and order-F candidates versus
/// iterated derivatives, for one-point one-variable polynomials. The fibre
/// sizes (2, 1, 0) example is always included under the name "model-a".
Json discrepancy_report(const std::vector<std::pair<std::string, Polynomial>>& polys,
                        const Budget& budget = {});

/// Recomputes every flag of a report from the numbers it lists.
bool report_consistent(const Json& report);

}  // namespace polyfun::cli
