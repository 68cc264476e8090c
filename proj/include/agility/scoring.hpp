#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agility/framework.hpp"
#include "agility/ingestion.hpp"

namespace agility {

/// [pessimistic, optimistic] achievement bounds on [0,1].
struct AchievementInterval {
    double pessimistic = 0.0;
    double optimistic = 0.0;

    double midpoint() const { return 0.5 * (pessimistic + optimistic); }
    bool operator==(const AchievementInterval&) const = default;
};

struct ConfidenceInterval {
    double mean = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;
    std::size_t n = 0;
    bool degenerate = true;  // n < 2

    double width() const { return upper - lower; }
    bool operator==(const ConfidenceInterval&) const = default;
};

enum class AchievementStatus { NotAchieved, PartiallyAchieved, Achieved };

std::string_view to_string(AchievementStatus status);
AchievementStatus parse_status(std::string_view text);

struct Thresholds {
    double low = 1.0 / 3.0;
    double high = 2.0 / 3.0;

    bool operator==(const Thresholds&) const = default;
};

/// Likert answer -> interval lookup. Uniform bands by default; a custom table
/// may replace them as long as every band is a sub-interval of [0,1] and the
/// bands are non-decreasing in both bounds.
class BandTable {
public:
    static BandTable uniform(int scale_size);
    static BandTable custom(std::vector<AchievementInterval> bands);

    int scale_size() const { return static_cast<int>(bands_.size()); }
    const AchievementInterval& operator[](int answer) const;
    std::span<const AchievementInterval> bands() const { return bands_; }

private:
    explicit BandTable(std::vector<AchievementInterval> bands) : bands_(std::move(bands)) {}
    std::vector<AchievementInterval> bands_;
};

struct ScoringConfig {
    double confidence_level = 0.95;
    Thresholds thresholds;
    std::optional<BandTable> bands;  // uniform over the framework's scale when unset
};

/// Uniform banding: answer k on an L-point scale maps to [(k-1)/L, k/L].
AchievementInterval likert_interval(int answer, int scale_size);

/// Weighted interval of one respondent over the practice items matching their
/// role that they answered. Weights of answered items are renormalized to 1.
std::optional<AchievementInterval> respondent_practice_interval(const Framework& framework,
                                                                const RespondentRecord& record,
                                                                const Practice& practice,
                                                                const BandTable& bands);
std::optional<AchievementInterval> respondent_practice_interval(const Framework& framework,
                                                                const RespondentRecord& record,
                                                                const Practice& practice);

/// Component-wise mean of the per-respondent intervals of one role.
std::optional<AchievementInterval> role_interval(const Framework& framework, const ResponseSet& responses,
                                                 const Practice& practice, Role role, const BandTable& bands);

/// Two-sided Student-t interval for the mean, clamped to [0,1].
ConfidenceInterval confidence_interval(std::span<const double> midpoints, double level);

/// Quantile of Student's t distribution.
double student_t_quantile(double probability, double degrees_of_freedom);

AchievementStatus classify(double combined_midpoint, Thresholds thresholds = {});

/// Component-wise mean of the child intervals.
AchievementInterval rollup(std::span<const AchievementInterval> children);

struct RoleScore {
    std::optional<AchievementInterval> interval;
    std::optional<ConfidenceInterval> ci;
};

struct PracticeResult {
    std::string practice;
    RoleScore manager;
    RoleScore developer;
    std::optional<AchievementInterval> combined_interval;  // mean over all respondents
    std::optional<ConfidenceInterval> combined;           // pooled manager+developer midpoints
    std::optional<AchievementStatus> status;              // empty means no evidence

    const RoleScore& by_role(Role role) const { return role == Role::Manager ? manager : developer; }
    bool has_evidence() const { return combined.has_value(); }
};

struct RollupResult {
    std::string name;
    std::optional<AchievementInterval> interval;
    std::optional<AchievementStatus> status;
};

struct AssessmentResult {
    std::string team;
    std::size_t managers = 0;
    std::size_t developers = 0;
    ScoringConfig config;
    std::vector<PracticeResult> practices;  // framework declaration order
    std::vector<RollupResult> principles;
    std::vector<RollupResult> levels;
    std::vector<std::string> warnings;

    const PracticeResult* find(std::string_view practice) const;
};

/// Share of answered practice weight below which a coverage warning is raised.
inline constexpr double kLowCoverageFraction = 0.7;

AssessmentResult assess(const Framework& framework, const ResponseSet& responses, const ScoringConfig& config = {},
                        std::string team = "team");

void validate_config(const ScoringConfig& config, const Framework& framework);

}  // namespace agility
