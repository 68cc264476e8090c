#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agility/framework.hpp"

namespace agility {

struct RespondentRecord {
    std::string respondent_id;  // opaque, never echoed into reports
    Role role = Role::Developer;
    std::map<std::string, int> answers;  // item id -> answer index 1..scale_size

    bool operator==(const RespondentRecord&) const = default;
};

struct ResponseSet {
    std::string framework_id;
    std::vector<RespondentRecord> respondents;  // first-appearance order

    std::size_t count(Role role) const;
    bool operator==(const ResponseSet&) const = default;
};

struct RowError {
    std::size_t row = 0;  // 1-based line number in the file, header is row 1
    std::string message;
};

class IngestionError : public std::runtime_error {
public:
    explicit IngestionError(std::vector<RowError> errors);
    const std::vector<RowError>& errors() const noexcept { return errors_; }

private:
    std::vector<RowError> errors_;
};

/// Parses `respondent_id,role,item_id,answer` CSV against a framework.
/// Throws IngestionError listing every bad row.
ResponseSet parse_responses(std::string_view csv, const Framework& framework);

struct CoverageEntry {
    std::string practice;
    Role role = Role::Developer;
    double fraction = 0.0;
};

/// Answered share of each practice's role-specific item weight. Pairs where the
/// practice has no items for a role are omitted.
std::vector<CoverageEntry> coverage_report(const ResponseSet& responses, const Framework& framework);

}  // namespace agility
