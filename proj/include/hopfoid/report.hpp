#pragma once

#include <string>

#include <json.hpp>

#include "hopfoid/suite.hpp"

namespace hopfoid {

/// Sparse vector as [[index, "p/q"], ...] in increasing index order.
nlohmann::ordered_json vec_json(const Vec& v);
nlohmann::ordered_json check_json(const CheckReport& r);
/// Timing is left out unless asked for, so that repeated runs are byte-identical.
nlohmann::ordered_json report_json(const SuiteReport& r, bool with_timing = false);
/// Aligned text table of the whole check tree with witnesses under failing leaves.
std::string render_table(const SuiteReport& r, bool with_timing = false);

}  // namespace hopfoid
