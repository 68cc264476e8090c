#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "agility/framework.hpp"

namespace agility::example {

/// Shipped framework: the eight assessed practices spread over five
/// placeholder levels, items covering all 21 characteristics.
std::string_view framework_json();

/// Synthetic team of 2 managers and 5 developers whose answers are low on
/// collaborative planning (developer side), task volunteering (both roles)
/// and the managers' side of reflect-and-tune.
std::string_view team_a_csv();

/// Every respondent gives the same answer to every item of their role.
std::string uniform_responses_csv(const Framework& framework, std::size_t managers, std::size_t developers,
                                  int answer);

}  // namespace agility::example
