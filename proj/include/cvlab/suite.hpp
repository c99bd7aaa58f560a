#ifndef CVLAB_SUITE_HPP
#define CVLAB_SUITE_HPP

#include "cvlab/report_json.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cvlab {

/// Runs one checker described by a JSON item, e.g.
///   {"id":"eq8","caps":[2,1],"z":["1","0+1i"],"m":2}
/// and returns the checker's JSON report (always carrying a "verdict" key).
///
/// Known ids: the scalar identities (eq8, eq12, eq13, eq14, eq15_16, eq17,
/// eq21, eq22, eq26, eq27, remark22), the matrix identities (eq28, eq29,
/// eq30, with "matrices": [matrix objects]), and the congruences (glaisher,
/// eq18, eq20, keyed by "p"/"s" plus optional "k"/"direct").
///
/// Unknown ids and malformed params throw std::invalid_argument; domain
/// preconditions surface as std::domain_error; oversized enumerations as
/// BudgetExceeded.
nlohmann::json run_suite_item(const nlohmann::json& item,
                              std::uint64_t budget = kDefaultBudget);

/// All ids run_suite_item accepts, in suite-documentation order.
const std::vector<std::string>& known_suite_ids();

}  // namespace cvlab

#endif
