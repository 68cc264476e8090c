#pragma once

// Brute-force re-computation of practice scores, written without touching the
// scoring engine. Used as the reference in equivalence tests.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "agility/framework.hpp"
#include "agility/ingestion.hpp"

namespace oracle {

// P(|T| < t) for Student's t with integer df, via the closed-form
// trigonometric series.
inline double t_two_sided_mass(double t, int df) {
    const double theta = std::atan(t / std::sqrt(static_cast<double>(df)));
    const double c2 = std::cos(theta) * std::cos(theta);
    if (df % 2 == 1) {
        double sum = 0.0;
        if (df > 1) {
            double term = 1.0;
            sum = 1.0;
            for (int k = 3; k <= df - 2; k += 2) {
                term *= c2 * static_cast<double>(k - 1) / static_cast<double>(k);
                sum += term;
            }
        }
        return 2.0 / std::numbers::pi * (theta + std::sin(theta) * std::cos(theta) * sum);
    }
    double term = 1.0;
    double sum = 1.0;
    for (int k = 2; k <= df - 2; k += 2) {
        term *= c2 * static_cast<double>(k - 1) / static_cast<double>(k);
        sum += term;
    }
    return std::sin(theta) * sum;
}

// Two-sided critical value: P(|T| < t) = level. Bisection on the series.
inline double t_critical(double level, int df) {
    double lo = 0.0;
    double hi = 1.0;
    while (t_two_sided_mass(hi, df) < level) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (t_two_sided_mass(mid, df) < level) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Interval {
    double p = 0.0;
    double o = 0.0;
};

struct Ci {
    double mean = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct PracticeScore {
    std::optional<Interval> manager;
    std::optional<Interval> developer;
    std::optional<Interval> combined;
    std::optional<Ci> combined_ci;
    std::optional<Ci> manager_ci;
    std::optional<Ci> developer_ci;
};

inline Ci ci_of(const std::vector<double>& xs, double level) {
    double total = 0.0;
    for (double x : xs) total += x;
    const double n = static_cast<double>(xs.size());
    const double mean = total / n;
    bool all_same = true;
    for (double x : xs) all_same = all_same && x == xs.front();
    if (xs.size() < 2 || all_same) return {mean, mean, mean};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double half = t_critical(level, static_cast<int>(xs.size()) - 1) * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    return {mean, std::max(0.0, mean - half), std::min(1.0, mean + half)};
}

inline std::map<std::string, PracticeScore> score(const agility::Framework& fw, const agility::ResponseSet& rs,
                                                  double level) {
    std::map<std::string, PracticeScore> out;
    const double L = fw.scale_size;
    for (const auto& lv : fw.levels) {
        for (const auto& pr : lv.principles) {
            for (const auto& practice : pr.practices) {
                std::vector<Interval> per_role[2];
                std::vector<double> mids_role[2];
                std::vector<double> mids_all;
                for (const auto& resp : rs.respondents) {
                    const int r = resp.role == agility::Role::Manager ? 0 : 1;
                    double w_total = 0.0;
                    double p_sum = 0.0;
                    double o_sum = 0.0;
                    for (const auto& wi : practice.weighted_items) {
                        if (fw.items.at(wi.item_id).role != resp.role) continue;
                        auto a = resp.answers.find(wi.item_id);
                        if (a == resp.answers.end()) continue;
                        w_total += wi.weight;
                        p_sum += wi.weight * (a->second - 1) / L;
                        o_sum += wi.weight * a->second / L;
                    }
                    if (w_total == 0.0) continue;
                    Interval iv{p_sum / w_total, o_sum / w_total};
                    per_role[r].push_back(iv);
                    mids_role[r].push_back((iv.p + iv.o) / 2.0);
                    mids_all.push_back((iv.p + iv.o) / 2.0);
                }
                PracticeScore s;
                auto mean_of = [](const std::vector<Interval>& v) {
                    Interval m;
                    for (const auto& x : v) {
                        m.p += x.p / v.size();
                        m.o += x.o / v.size();
                    }
                    return m;
                };
                if (!per_role[0].empty()) {
                    s.manager = mean_of(per_role[0]);
                    s.manager_ci = ci_of(mids_role[0], level);
                }
                if (!per_role[1].empty()) {
                    s.developer = mean_of(per_role[1]);
                    s.developer_ci = ci_of(mids_role[1], level);
                }
                if (!mids_all.empty()) {
                    std::vector<Interval> all = per_role[0];
                    all.insert(all.end(), per_role[1].begin(), per_role[1].end());
                    s.combined = mean_of(all);
                    s.combined_ci = ci_of(mids_all, level);
                }
                out[practice.name] = s;
            }
        }
    }
    return out;
}

}  // namespace oracle
