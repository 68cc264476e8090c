#include <cmath>
#include <random>

#include "agility/scoring.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracle.hpp"

using namespace agility;

namespace {

constexpr double kTol = 1e-9;

bool close(double a, double b) { return std::abs(a - b) <= kTol; }

}  // namespace

TEST_CASE("assess agrees with the brute-force oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto fw = gen::framework(rng);
        const auto rs = gen::responses(rng, fw);
        const auto result = assess(fw, rs);
        const auto expected = oracle::score(fw, rs, 0.95);
        for (const auto& p : result.practices) {
            const auto& e = expected.at(p.practice);
            REQUIRE(p.manager.interval.has_value() == e.manager.has_value());
            REQUIRE(p.developer.interval.has_value() == e.developer.has_value());
            REQUIRE(p.combined.has_value() == e.combined_ci.has_value());
            if (e.manager) {
                CHECK(close(p.manager.interval->pessimistic, e.manager->p));
                CHECK(close(p.manager.interval->optimistic, e.manager->o));
                CHECK(close(p.manager.ci->lower, e.manager_ci->lower));
                CHECK(close(p.manager.ci->upper, e.manager_ci->upper));
            }
            if (e.developer) {
                CHECK(close(p.developer.interval->pessimistic, e.developer->p));
                CHECK(close(p.developer.interval->optimistic, e.developer->o));
            }
            if (e.combined_ci) {
                CHECK(close(p.combined_interval->pessimistic, e.combined->p));
                CHECK(close(p.combined_interval->optimistic, e.combined->o));
                CHECK(close(p.combined->mean, e.combined_ci->mean));
                CHECK(close(p.combined->lower, e.combined_ci->lower));
                CHECK(close(p.combined->upper, e.combined_ci->upper));
            }
        }
    }
}

TEST_CASE("interval sanity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const auto fw = gen::framework(rng, {3, 6, {2, 3, 4, 5, 7, 10}});
        const auto rs = gen::responses(rng, fw, {3, 6, {}});
        const auto result = assess(fw, rs);
        auto sane = [](const std::optional<AchievementInterval>& iv) {
            if (!iv) return true;
            return 0.0 <= iv->pessimistic && iv->pessimistic <= iv->optimistic && iv->optimistic <= 1.0;
        };
        for (const auto& p : result.practices) {
            CHECK(sane(p.manager.interval));
            CHECK(sane(p.developer.interval));
            CHECK(sane(p.combined_interval));
            if (p.combined) {
                CHECK(0.0 <= p.combined->lower);
                CHECK(p.combined->lower <= p.combined->mean);
                CHECK(p.combined->mean <= p.combined->upper);
                CHECK(p.combined->upper <= 1.0);
                CHECK(p.combined->degenerate == (p.combined->n < 2));
            }
        }
        for (const auto& r : result.principles) CHECK(sane(r.interval));
        for (const auto& r : result.levels) CHECK(sane(r.interval));
        for (int k = 1; k <= fw.scale_size; ++k) {
            const auto b = likert_interval(k, fw.scale_size);
            CHECK(b.optimistic - b.pessimistic <= 1.0 / fw.scale_size + 1e-15);
        }
    }
}

TEST_CASE("weight invariance under equal answers") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto fw = gen::framework(rng);
        const int k = std::uniform_int_distribution<int>(1, fw.scale_size)(rng);
        for (Role role : {Role::Manager, Role::Developer}) {
            RespondentRecord rec{"r", role, {}};
            for (const auto& [id, item] : fw.items) {
                if (item.role == role) rec.answers[id] = k;
            }
            const auto expected = likert_interval(k, fw.scale_size);
            for (const auto* practice : fw.practices()) {
                const auto iv = respondent_practice_interval(fw, rec, *practice);
                if (!iv) continue;
                CHECK(close(iv->pessimistic, expected.pessimistic));
                CHECK(close(iv->optimistic, expected.optimistic));
            }
        }
    }
}

TEST_CASE("CI width is non-increasing in n at constant variance") {
    // Samples alternate 0.5 +/- d; rescale d so every sample has sd 0.05.
    for (double level : {0.9, 0.95, 0.99}) {
        double previous = 2.0;
        for (std::size_t n = 2; n <= 40; ++n) {
            std::vector<double> xs;
            for (std::size_t i = 0; i < n; ++i) xs.push_back(i % 2 ? 1.0 : -1.0);
            double mean = 0.0;
            for (double x : xs) mean += x / n;
            double ss = 0.0;
            for (double x : xs) ss += (x - mean) * (x - mean);
            const double scale = 0.05 / std::sqrt(ss / (n - 1));
            for (double& x : xs) x = 0.5 + x * scale;
            const auto ci = confidence_interval(xs, level);
            CHECK(ci.width() <= previous + 1e-12);
            previous = ci.width();
        }
    }
}

TEST_CASE("CI bounds stay in [0,1] for extreme samples") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> xs(std::uniform_int_distribution<std::size_t>(1, 6)(rng));
        for (double& x : xs) x = unit(rng) < 0.5 ? unit(rng) * 0.05 : 1.0 - unit(rng) * 0.05;
        const auto ci = confidence_interval(xs, 0.99);
        CHECK(0.0 <= ci.lower);
        CHECK(ci.lower <= ci.mean);
        CHECK(ci.mean <= ci.upper);
        CHECK(ci.upper <= 1.0);
    }
}

TEST_CASE("raising one answer never lowers any affected score") {
    std::mt19937_64 rng(4242);
    int checked = 0;
    while (checked < 500) {
        const auto fw = gen::framework(rng);
        auto rs = gen::responses(rng, fw);
        // Pick a random answered item below the top of the scale.
        std::vector<std::pair<std::size_t, std::string>> candidates;
        for (std::size_t r = 0; r < rs.respondents.size(); ++r) {
            for (const auto& [id, a] : rs.respondents[r].answers) {
                if (a < fw.scale_size) candidates.emplace_back(r, id);
            }
        }
        if (candidates.empty()) continue;
        const auto [r, id] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];

        const auto before = assess(fw, rs);
        auto raised = rs;
        raised.respondents[r].answers[id] += 1;
        const auto after = assess(fw, raised);

        for (std::size_t i = 0; i < before.practices.size(); ++i) {
            const auto& b = before.practices[i];
            const auto& a = after.practices[i];
            const auto& role_b = b.by_role(rs.respondents[r].role);
            const auto& role_a = a.by_role(rs.respondents[r].role);
            if (role_b.interval) {
                CHECK(role_a.interval->pessimistic >= role_b.interval->pessimistic - 1e-12);
                CHECK(role_a.interval->optimistic >= role_b.interval->optimistic - 1e-12);
            }
            if (b.combined) CHECK(a.combined->mean >= b.combined->mean - 1e-12);
        }
        ++checked;
    }
}
