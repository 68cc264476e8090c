#include <algorithm>
#include <random>

#include "agility/example_data.hpp"
#include "agility/recommendation.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace agility;

namespace {

struct TeamA {
    Framework framework = load_framework(example::framework_json());
    AssessmentResult result = assess(framework, parse_responses(example::team_a_csv(), framework), {}, "Team A");
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("Team-A focus areas") {
    TeamA a;
    const auto areas = select_focus_areas(a.result, a.framework);
    REQUIRE(areas.size() == 3);
    CHECK(areas[0].practice == "Task volunteering");
    CHECK(areas[0].scope == RoleScope::Both);
    CHECK(areas[1].practice == "Collaborative planning");
    CHECK(areas[1].scope == RoleScope::Developer);
    CHECK(areas[2].practice == "Reflect and tune process");
    CHECK(areas[2].scope == RoleScope::Manager);
    for (std::size_t i = 0; i < areas.size(); ++i) CHECK(areas[i].rank == i + 1);
    CHECK(areas[0].characteristics == std::vector<int>{14, 15});
    CHECK(areas[2].characteristics == std::vector<int>{19, 20, 21});
}

TEST_CASE("focus policies") {
    TeamA a;
    SUBCASE("tighter cutoff") {
        const auto areas = select_focus_areas(a.result, a.framework, {0.3, std::nullopt});
        REQUIRE(areas.size() == 1);
        CHECK(areas[0].practice == "Task volunteering");
    }
    SUBCASE("top-k includes practices above the cutoff") {
        const auto areas = select_focus_areas(a.result, a.framework, {std::nullopt, 5});
        REQUIRE(areas.size() == 5);
        for (std::size_t i = 1; i < areas.size(); ++i) {
            CHECK(areas[i - 1].combined_midpoint <= areas[i].combined_midpoint);
        }
    }
}

TEST_CASE("all practices achieved -> no focus areas") {
    const auto fw = load_framework(example::framework_json());
    const auto rs = parse_responses(example::uniform_responses_csv(fw, 2, 5, 5), fw);
    const auto areas = select_focus_areas(assess(fw, rs), fw);
    CHECK(areas.empty());
    const auto text = render_recommendations("Team", areas, default_catalog(), fw);
    CHECK(contains(text, "No focus areas"));
}

TEST_CASE("single practice at zero") {
    const auto fw = load_framework(R"({
      "levels": [{"name": "L1", "rank": 1, "principles": [{"name": "P", "practices": [
        {"name": "Task volunteering", "items": ["A"]}, {"name": "Customer commitment", "items": ["B"]}]}]}],
      "items": [{"id": "A", "text": "", "role": "developer", "characteristic": 15},
                {"id": "B", "text": "", "role": "developer", "characteristic": 21}]})");
    // Two-point band table where answer 1 maps to exactly [0,0].
    ScoringConfig config;
    config.bands = BandTable::custom({{0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}});
    const auto rs = parse_responses("respondent_id,role,item_id,answer\nd,developer,A,1\nd,developer,B,5\n", fw);
    const auto areas = select_focus_areas(assess(fw, rs, config), fw);
    REQUIRE(areas.size() == 1);
    CHECK(areas[0].rank == 1);
    CHECK(areas[0].combined_midpoint == 0.0);
    CHECK(areas[0].scope == RoleScope::Developer);
}

TEST_CASE("ties are broken by practice name") {
    const auto fw = load_framework(R"({
      "levels": [{"name": "L1", "rank": 1, "principles": [{"name": "P", "practices": [
        {"name": "Zeta", "items": ["A"]}, {"name": "Alpha", "items": ["A"]}]}]}],
      "items": [{"id": "A", "text": "", "role": "developer", "characteristic": 1}]})");
    const auto rs = parse_responses("respondent_id,role,item_id,answer\nd,developer,A,1\n", fw);
    const auto areas = select_focus_areas(assess(fw, rs), fw);
    REQUIRE(areas.size() == 2);
    CHECK(areas[0].practice == "Alpha");
    CHECK(areas[1].practice == "Zeta");
}

TEST_CASE("focus areas are sorted with consecutive ranks") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto fw = gen::framework(rng);
        const auto areas = select_focus_areas(assess(fw, gen::responses(rng, fw)), fw);
        for (std::size_t i = 0; i < areas.size(); ++i) {
            CHECK(areas[i].rank == i + 1);
            if (i) CHECK(areas[i - 1].combined_midpoint <= areas[i].combined_midpoint);
        }
    }
}

TEST_CASE("rendered recommendations quote the characteristic list") {
    TeamA a;
    const auto areas = select_focus_areas(a.result, a.framework);
    const auto text = render_recommendations("Team A", areas, default_catalog(), a.framework);
    CHECK(contains(text, "(14) Whether or not management will be willing to buy into and can see benefits from "
                         "employees volunteering for tasks instead of being assigned."));
    CHECK(contains(text, "(15) Whether or not developers are willing to see the benefits from volunteering for tasks."));
    CHECK(contains(text, "(19) Whether or not developers are willing to commit to reflecting"));
    CHECK(contains(text, "(20) Whether or not management is willing to commit to reflecting"));
    CHECK(contains(text, "(4) Whether or not people are intimidated/afraid to give honest feedback"));
    CHECK(contains(text, "(1) Whether or not a collaborative or a command-control relation exists"));

    const auto tv = text.find("### 1. Task volunteering");
    const auto cp = text.find("### 2. Collaborative planning");
    const auto rt = text.find("### 3. Reflect and tune process");
    CHECK(tv != std::string::npos);
    CHECK(tv < cp);
    CHECK(cp < rt);
    CHECK(text == render_recommendations("Team A", areas, default_catalog(), a.framework));
    CHECK_FALSE(contains(text, "{team}"));
}

TEST_CASE("catalog coverage and overrides") {
    const auto fw = load_framework(example::framework_json());
    CHECK(catalog_gaps(default_catalog(), fw).empty());

    const auto custom = load_catalog(R"({"by_practice": {"Task volunteering": "Custom {team} advice."},
                                          "by_characteristic": {"14": "Custom tip."}})");
    CHECK(custom.by_practice.at("Task volunteering") == "Custom {team} advice.");
    CHECK(custom.by_characteristic.at(14) == "Custom tip.");
    CHECK(custom.by_characteristic.size() == 21);

    CHECK_THROWS_AS(load_catalog("{"), CatalogError);
    CHECK_THROWS_AS(load_catalog(R"({"by_characteristic": {"22": "x"}})"), CatalogError);
    CHECK_THROWS_AS(load_catalog(R"({"by_characteristic": {"one": "x"}})"), CatalogError);
    CHECK(load_catalog(serialize_catalog(default_catalog())).by_practice == default_catalog().by_practice);

    RecommendationCatalog empty;
    CHECK(catalog_gaps(empty, fw).size() == 21 + 8);
    std::vector<FocusArea> areas = {{"Task volunteering", RoleScope::Both, 0.1, {14}, 1}};
    CHECK_THROWS_AS(render_recommendations("T", areas, empty, fw), CatalogError);
}
