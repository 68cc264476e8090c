#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agility/framework.hpp"
#include "agility/ingestion.hpp"
#include "agility/recommendation.hpp"
#include "agility/scoring.hpp"

namespace agility {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Markdown, Csv, Json };
ReportFormat parse_report_format(std::string_view text);

struct WeightOverride {
    std::string practice;
    std::string item_id;
    double weight = 0.0;

    bool operator==(const WeightOverride&) const = default;
};

/// "practice:item:weight"; the practice name may itself contain spaces.
WeightOverride parse_weight_override(std::string_view text);

struct EffectiveWeights {
    std::string practice;
    std::vector<WeightedItem> weights;

    bool operator==(const EffectiveWeights&) const = default;
};

struct OverrideOutcome {
    Framework framework;
    std::vector<EffectiveWeights> effective;  // one entry per overridden practice
};

/// Pins the named item weights and rescales the practice's other items
/// proportionally so the weights still sum to 1. Throws std::invalid_argument
/// on unknown practice/item or a weight outside (0,1].
OverrideOutcome apply_weight_overrides(const Framework& framework, const std::vector<WeightOverride>& overrides);

struct PracticeRow {
    std::string practice;
    std::optional<AchievementInterval> manager;
    std::optional<AchievementInterval> developer;
    std::optional<AchievementInterval> combined;
    std::optional<ConfidenceInterval> ci;
    std::optional<AchievementStatus> status;
    std::vector<int> notes;  // characteristic ids

    bool operator==(const PracticeRow&) const = default;
};

struct RollupRow {
    std::string tier;  // "principle" | "level"
    std::string name;
    std::optional<AchievementInterval> interval;
    std::optional<AchievementStatus> status;

    bool operator==(const RollupRow&) const = default;
};

struct ReportDocument {
    int schema_version = kReportSchemaVersion;
    std::string team;
    std::string framework;
    int scale_size = 5;
    double confidence_level = 0.95;
    Thresholds thresholds;
    double focus_cutoff = 2.0 / 3.0;
    std::size_t managers = 0;
    std::size_t developers = 0;
    std::vector<WeightOverride> overrides;
    std::vector<EffectiveWeights> effective_weights;
    std::vector<PracticeRow> rows;
    std::vector<RollupRow> rollups;
    std::vector<FocusArea> focus_areas;
    std::vector<Characteristic> notes;
    std::string recommendations;
    std::vector<std::string> warnings;

    bool operator==(const ReportDocument&) const = default;
};

struct ReportOptions {
    std::string team = "team";
    ScoringConfig config;
    FocusPolicy focus;
    std::vector<WeightOverride> overrides;
};

ReportDocument build_report(const Framework& framework, const ResponseSet& responses,
                            const RecommendationCatalog& catalog, const ReportOptions& options);

std::string report_to_json(const ReportDocument& report);
ReportDocument report_from_json(std::string_view document);
std::string report_to_markdown(const ReportDocument& report);
std::string report_to_csv(const ReportDocument& report);
std::string render_report(const ReportDocument& report, ReportFormat format);

struct CompareRow {
    std::string practice;
    std::vector<std::optional<double>> midpoints;  // one per team
    std::optional<double> range;

    bool operator==(const CompareRow&) const = default;
};

struct ComparisonTable {
    std::vector<std::string> teams;
    std::vector<CompareRow> rows;
};

struct TeamInput {
    std::string label;
    ResponseSet responses;
};

/// Combined midpoints per practice side by side. Requires >= 2 teams.
/// Teams are scored concurrently.
ComparisonTable compare_teams(const Framework& framework, const std::vector<TeamInput>& teams,
                              const ScoringConfig& config = {});

std::string render_comparison(const ComparisonTable& table, ReportFormat format);

/// One-decimal percentage, e.g. 0.625 -> "62.5%".
std::string format_percent(double fraction);

}  // namespace agility
