#pragma once

// Random small frameworks and response sets for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "agility/framework.hpp"
#include "agility/ingestion.hpp"

namespace gen {

struct Limits {
    int max_items_per_practice = 3;
    int max_respondents = 3;
    std::vector<int> scales = {3, 5, 7};
};

inline agility::Framework framework(std::mt19937_64& rng, const Limits& limits = {}) {
    auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    agility::Framework fw;
    fw.name = "generated";
    fw.scale_size = limits.scales[static_cast<std::size_t>(uniform(0, static_cast<int>(limits.scales.size()) - 1))];

    const int pool = uniform(2, 6);
    for (int i = 0; i < pool; ++i) {
        agility::Item item;
        item.id = "I" + std::to_string(i);
        item.text = "item " + std::to_string(i);
        item.role = uniform(0, 1) ? agility::Role::Manager : agility::Role::Developer;
        item.characteristic = uniform(1, 21);
        fw.items.emplace(item.id, item);
    }

    int practice_no = 0;
    const int levels = uniform(1, 2);
    for (int l = 0; l < levels; ++l) {
        agility::AgileLevel level{"L" + std::to_string(l + 1), l + 1, {}};
        const int principles = uniform(1, 2);
        for (int p = 0; p < principles; ++p) {
            agility::Principle principle{"P" + std::to_string(l) + "." + std::to_string(p), {}};
            const int practices = uniform(1, 3);
            for (int q = 0; q < practices; ++q) {
                agility::Practice practice{"Q" + std::to_string(practice_no++), {}};
                const int n = uniform(1, std::min(limits.max_items_per_practice, pool));
                std::vector<int> ids(static_cast<std::size_t>(pool));
                for (int i = 0; i < pool; ++i) ids[static_cast<std::size_t>(i)] = i;
                std::shuffle(ids.begin(), ids.end(), rng);
                std::vector<double> raw;
                double total = 0.0;
                for (int i = 0; i < n; ++i) {
                    raw.push_back(std::uniform_real_distribution<double>(0.1, 1.0)(rng));
                    total += raw.back();
                }
                double head = 0.0;
                for (int i = 0; i < n; ++i) {
                    double w = (i + 1 == n) ? 1.0 - head : raw[static_cast<std::size_t>(i)] / total;
                    head += w;
                    practice.weighted_items.push_back({"I" + std::to_string(ids[static_cast<std::size_t>(i)]), w});
                }
                principle.practices.push_back(std::move(practice));
            }
            level.principles.push_back(std::move(principle));
        }
        fw.levels.push_back(std::move(level));
    }
    return fw;
}

inline agility::ResponseSet responses(std::mt19937_64& rng, const agility::Framework& fw, const Limits& limits = {},
                                      double answer_probability = 0.8) {
    auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    agility::ResponseSet rs;
    rs.framework_id = fw.name;
    const int n = uniform(1, limits.max_respondents);
    for (int r = 0; r < n; ++r) {
        agility::RespondentRecord rec;
        rec.respondent_id = "r" + std::to_string(r);
        rec.role = uniform(0, 1) ? agility::Role::Manager : agility::Role::Developer;
        for (const auto& [id, item] : fw.items) {
            if (item.role != rec.role) continue;
            if (std::bernoulli_distribution(answer_probability)(rng)) rec.answers[id] = uniform(1, fw.scale_size);
        }
        rs.respondents.push_back(std::move(rec));
    }
    return rs;
}

inline std::string to_csv(const agility::ResponseSet& rs) {
    std::string out = "respondent_id,role,item_id,answer\n";
    for (const auto& r : rs.respondents) {
        for (const auto& [id, a] : r.answers) {
            out += r.respondent_id + "," + std::string(agility::to_string(r.role)) + "," + id + "," +
                   std::to_string(a) + "\n";
        }
    }
    return out;
}

}  // namespace gen
