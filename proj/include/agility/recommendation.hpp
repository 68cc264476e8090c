#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agility/framework.hpp"
#include "agility/scoring.hpp"

namespace agility {

enum class RoleScope { Manager, Developer, Both };

std::string_view to_string(RoleScope scope);
RoleScope parse_role_scope(std::string_view text);

/// Advice keyed by characteristic id (1..21) and by practice name.
/// Practice templates may use the placeholders {team} and {scope}.
struct RecommendationCatalog {
    std::map<int, std::string> by_characteristic;
    std::map<std::string, std::string> by_practice;
};

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const RecommendationCatalog& default_catalog();
RecommendationCatalog load_catalog(std::string_view document);
std::string serialize_catalog(const RecommendationCatalog& catalog);

/// Missing characteristic / practice entries for the given framework.
std::vector<std::string> catalog_gaps(const RecommendationCatalog& catalog, const Framework& framework);

struct FocusArea {
    std::string practice;
    RoleScope scope = RoleScope::Both;
    double combined_midpoint = 0.0;
    std::vector<int> characteristics;
    std::size_t rank = 1;

    bool operator==(const FocusArea&) const = default;
};

/// Either a midpoint cutoff (default: the high classification threshold) or
/// the k lowest practices.
struct FocusPolicy {
    std::optional<double> cutoff;
    std::optional<std::size_t> top_k;
};

std::vector<FocusArea> select_focus_areas(const AssessmentResult& result, const Framework& framework,
                                          const FocusPolicy& policy = {});

/// Markdown recommendations, one section per focus area in rank order.
std::string render_recommendations(std::string_view team, const std::vector<FocusArea>& areas,
                                   const RecommendationCatalog& catalog, const Framework& framework);

}  // namespace agility
