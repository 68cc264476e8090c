#include "agility/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace agility {

std::string_view to_string(AchievementStatus status) {
    switch (status) {
        case AchievementStatus::NotAchieved: return "Not achieved";
        case AchievementStatus::PartiallyAchieved: return "Partially achieved";
        case AchievementStatus::Achieved: return "Achieved";
    }
    return "?";
}

AchievementStatus parse_status(std::string_view text) {
    for (auto s : {AchievementStatus::NotAchieved, AchievementStatus::PartiallyAchieved, AchievementStatus::Achieved}) {
        if (to_string(s) == text) return s;
    }
    throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

BandTable BandTable::uniform(int scale_size) {
    if (scale_size < 2) throw std::invalid_argument("scale size must be >= 2");
    std::vector<AchievementInterval> bands;
    bands.reserve(static_cast<std::size_t>(scale_size));
    for (int k = 1; k <= scale_size; ++k) bands.push_back(likert_interval(k, scale_size));
    return BandTable(std::move(bands));
}

BandTable BandTable::custom(std::vector<AchievementInterval> bands) {
    if (bands.size() < 2) throw std::invalid_argument("band table needs at least 2 bands");
    for (std::size_t i = 0; i < bands.size(); ++i) {
        const auto& b = bands[i];
        if (!(0.0 <= b.pessimistic && b.pessimistic <= b.optimistic && b.optimistic <= 1.0)) {
            throw std::invalid_argument("band " + std::to_string(i + 1) + " is not a sub-interval of [0,1]");
        }
        if (i > 0 && (b.pessimistic < bands[i - 1].pessimistic || b.optimistic < bands[i - 1].optimistic)) {
            throw std::invalid_argument("band " + std::to_string(i + 1) + " decreases relative to its predecessor");
        }
    }
    return BandTable(std::move(bands));
}

const AchievementInterval& BandTable::operator[](int answer) const {
    if (answer < 1 || answer > scale_size()) {
        throw std::out_of_range("answer " + std::to_string(answer) + " outside [1," + std::to_string(scale_size()) +
                                "]");
    }
    return bands_[static_cast<std::size_t>(answer - 1)];
}

AchievementInterval likert_interval(int answer, int scale_size) {
    if (scale_size < 2) throw std::invalid_argument("scale size must be >= 2");
    if (answer < 1 || answer > scale_size) {
        throw std::out_of_range("answer " + std::to_string(answer) + " outside [1," + std::to_string(scale_size) +
                                "]");
    }
    const double l = static_cast<double>(scale_size);
    return {static_cast<double>(answer - 1) / l, static_cast<double>(answer) / l};
}

std::optional<AchievementInterval> respondent_practice_interval(const Framework& framework,
                                                                const RespondentRecord& record,
                                                                const Practice& practice,
                                                                const BandTable& bands) {
    double answered_weight = 0.0;
    double pess = 0.0;
    double opt = 0.0;
    for (const auto& wi : practice.weighted_items) {
        if (framework.item(wi.item_id).role != record.role) continue;
        auto it = record.answers.find(wi.item_id);
        if (it == record.answers.end()) continue;
        const auto& band = bands[it->second];
        answered_weight += wi.weight;
        pess += wi.weight * band.pessimistic;
        opt += wi.weight * band.optimistic;
    }
    if (answered_weight <= 0.0) return std::nullopt;
    pess /= answered_weight;
    opt /= answered_weight;
    // Renormalization can overshoot by an ulp.
    pess = std::clamp(pess, 0.0, 1.0);
    opt = std::clamp(opt, pess, 1.0);
    return AchievementInterval{pess, opt};
}

std::optional<AchievementInterval> respondent_practice_interval(const Framework& framework,
                                                                const RespondentRecord& record,
                                                                const Practice& practice) {
    return respondent_practice_interval(framework, record, practice, BandTable::uniform(framework.scale_size));
}

namespace {

std::optional<AchievementInterval> mean_interval(std::span<const AchievementInterval> intervals) {
    if (intervals.empty()) return std::nullopt;
    return rollup(intervals);
}

}  // namespace

std::optional<AchievementInterval> role_interval(const Framework& framework, const ResponseSet& responses,
                                                 const Practice& practice, Role role, const BandTable& bands) {
    std::vector<AchievementInterval> per_respondent;
    for (const auto& record : responses.respondents) {
        if (record.role != role) continue;
        if (auto iv = respondent_practice_interval(framework, record, practice, bands)) per_respondent.push_back(*iv);
    }
    return mean_interval(per_respondent);
}

double student_t_quantile(double probability, double degrees_of_freedom) {
    boost::math::students_t dist(degrees_of_freedom);
    return boost::math::quantile(dist, probability);
}

ConfidenceInterval confidence_interval(std::span<const double> midpoints, double level) {
    if (midpoints.empty()) throw std::invalid_argument("confidence_interval: no observations");
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must lie in (0,1)");

    ConfidenceInterval ci;
    ci.level = level;
    ci.n = midpoints.size();
    ci.degenerate = ci.n < 2;

    double sum = 0.0;
    for (double m : midpoints) sum += m;
    const double n = static_cast<double>(ci.n);
    ci.mean = std::clamp(sum / n, 0.0, 1.0);

    auto [lo, hi] = std::minmax_element(midpoints.begin(), midpoints.end());
    if (ci.n < 2 || *lo == *hi) {
        ci.lower = ci.upper = ci.mean;
        return ci;
    }

    double ss = 0.0;
    for (double m : midpoints) ss += (m - sum / n) * (m - sum / n);
    const double sd = std::sqrt(ss / (n - 1.0));
    const double t = student_t_quantile(1.0 - (1.0 - level) / 2.0, n - 1.0);
    const double half = t * sd / std::sqrt(n);
    ci.lower = std::clamp(ci.mean - half, 0.0, 1.0);
    ci.upper = std::clamp(ci.mean + half, 0.0, 1.0);
    return ci;
}

AchievementStatus classify(double combined_midpoint, Thresholds thresholds) {
    if (!(0.0 <= thresholds.low && thresholds.low < thresholds.high && thresholds.high <= 1.0)) {
        throw std::invalid_argument("thresholds must satisfy 0 <= low < high <= 1");
    }
    if (combined_midpoint < thresholds.low) return AchievementStatus::NotAchieved;
    if (combined_midpoint < thresholds.high) return AchievementStatus::PartiallyAchieved;
    return AchievementStatus::Achieved;
}

AchievementInterval rollup(std::span<const AchievementInterval> children) {
    if (children.empty()) throw std::invalid_argument("rollup: no child intervals");
    double p = 0.0;
    double o = 0.0;
    for (const auto& c : children) {
        p += c.pessimistic;
        o += c.optimistic;
    }
    const double n = static_cast<double>(children.size());
    p = std::clamp(p / n, 0.0, 1.0);
    o = std::clamp(o / n, p, 1.0);
    return {p, o};
}

const PracticeResult* AssessmentResult::find(std::string_view practice) const {
    for (const auto& p : practices) {
        if (p.practice == practice) return &p;
    }
    return nullptr;
}

void validate_config(const ScoringConfig& config, const Framework& framework) {
    if (!(config.confidence_level > 0.0 && config.confidence_level < 1.0)) {
        throw std::invalid_argument("confidence level must lie in (0,1)");
    }
    const auto& t = config.thresholds;
    if (!(0.0 <= t.low && t.low < t.high && t.high <= 1.0)) {
        throw std::invalid_argument("thresholds must satisfy 0 <= low < high <= 1");
    }
    if (config.bands && config.bands->scale_size() != framework.scale_size) {
        throw std::invalid_argument("band table has " + std::to_string(config.bands->scale_size()) +
                                    " bands but the framework scale has " + std::to_string(framework.scale_size));
    }
}

namespace {

RollupResult make_rollup(std::string name, std::span<const AchievementInterval> children, Thresholds thresholds) {
    RollupResult r{std::move(name), std::nullopt, std::nullopt};
    if (!children.empty()) {
        r.interval = rollup(children);
        r.status = classify(r.interval->midpoint(), thresholds);
    }
    return r;
}

}  // namespace

AssessmentResult assess(const Framework& framework, const ResponseSet& responses, const ScoringConfig& config,
                        std::string team) {
    validate_config(config, framework);
    const BandTable bands = config.bands ? *config.bands : BandTable::uniform(framework.scale_size);

    AssessmentResult result;
    result.team = std::move(team);
    result.config = config;
    result.managers = responses.count(Role::Manager);
    result.developers = responses.count(Role::Developer);

    for (Role role : {Role::Manager, Role::Developer}) {
        const auto n = responses.count(role);
        if (n < 2) {
            result.warnings.push_back("only " + std::to_string(n) + " " + std::string(to_string(role)) +
                                      " respondent(s); " + std::string(to_string(role)) +
                                      " results carry little statistical weight");
        }
    }
    for (const auto& entry : coverage_report(responses, framework)) {
        if (entry.fraction < kLowCoverageFraction) {
            std::ostringstream os;
            os.precision(3);
            os << "low evidence for '" << entry.practice << "' (" << to_string(entry.role)
               << "): answered weight fraction " << entry.fraction;
            result.warnings.push_back(os.str());
        }
    }

    for (const auto& level : framework.levels) {
        std::vector<AchievementInterval> level_children;
        for (const auto& principle : level.principles) {
            std::vector<AchievementInterval> principle_children;
            for (const auto& practice : principle.practices) {
                PracticeResult pr;
                pr.practice = practice.name;

                std::vector<AchievementInterval> all_intervals;
                std::vector<double> pooled;
                for (Role role : {Role::Manager, Role::Developer}) {
                    std::vector<AchievementInterval> intervals;
                    std::vector<double> mids;
                    for (const auto& record : responses.respondents) {
                        if (record.role != role) continue;
                        auto iv = respondent_practice_interval(framework, record, practice, bands);
                        if (!iv) continue;
                        intervals.push_back(*iv);
                        mids.push_back(iv->midpoint());
                    }
                    auto& score = role == Role::Manager ? pr.manager : pr.developer;
                    score.interval = mean_interval(intervals);
                    if (!mids.empty()) score.ci = confidence_interval(mids, config.confidence_level);
                    all_intervals.insert(all_intervals.end(), intervals.begin(), intervals.end());
                    pooled.insert(pooled.end(), mids.begin(), mids.end());
                }

                if (!pooled.empty()) {
                    pr.combined_interval = mean_interval(all_intervals);
                    pr.combined = confidence_interval(pooled, config.confidence_level);
                    pr.status = classify(pr.combined->mean, config.thresholds);
                    principle_children.push_back(*pr.combined_interval);
                }
                result.practices.push_back(std::move(pr));
            }
            auto rolled = make_rollup(principle.name, principle_children, config.thresholds);
            if (rolled.interval) level_children.push_back(*rolled.interval);
            result.principles.push_back(std::move(rolled));
        }
        result.levels.push_back(make_rollup(level.name, level_children, config.thresholds));
    }
    return result;
}

}  // namespace agility
