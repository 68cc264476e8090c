#include "agility/recommendation.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace agility {

using nlohmann::json;

std::string_view to_string(RoleScope scope) {
    switch (scope) {
        case RoleScope::Manager: return "manager";
        case RoleScope::Developer: return "developer";
        case RoleScope::Both: return "both";
    }
    return "?";
}

RoleScope parse_role_scope(std::string_view text) {
    if (text == "manager") return RoleScope::Manager;
    if (text == "developer") return RoleScope::Developer;
    if (text == "both") return RoleScope::Both;
    throw std::invalid_argument("unknown role scope '" + std::string(text) + "'");
}

const RecommendationCatalog& default_catalog() {
    static const RecommendationCatalog catalog = [] {
        RecommendationCatalog c;
        c.by_characteristic = {
            {1, "Move from directing work to agreeing on it: let managers and developers set goals together."},
            {2, "Ask management to state openly that collaboration is expected and to remove obstacles to it."},
            {3, "Share plans, constraints and customer feedback with the whole team instead of filtering them."},
            {4, "Lower the power distance in meetings: ask for developer input before managers give their view, "
                "and make it safe to disagree."},
            {5, "Give developers an active role in planning sessions rather than presenting finished plans."},
            {6, "Establish a light but regular planning routine for every project."},
            {7, "Create regular touch points (stand-ups, pairing, shared reviews) between team members."},
            {8, "Recognise help given to colleagues, not only individual output."},
            {9, "Organise work around shared team goals rather than individual assignments."},
            {10, "Make the effect of each member's contribution on team results visible."},
            {11, "Agree on coding standards as a team and automate checks where possible."},
            {12, "Give developers easy access to project information, for example via a shared board or wiki."},
            {13, "Have managers publish project information to the whole team by default."},
            {14, "Let management trial a period where team members pick their own tasks and review the outcome."},
            {15, "Encourage developers to pull work from a shared backlog and commit to it in front of the team."},
            {16, "Delegate concrete decisions (estimates, technical approach, task order) to the team."},
            {17, "Look at how recognition, workload and autonomy affect motivation in the team."},
            {18, "Back the team's technical decisions and let them own the outcome."},
            {19, "Reserve time at the end of each iteration for a developer-led retrospective."},
            {20, "Have managers attend retrospectives and follow through on the process changes agreed there."},
            {21, "Define how process changes are introduced mid-project so that adaptation is routine."},
        };
        c.by_practice = {
            {"Collaborative planning",
             "Planning at {team} appears to be led from the top ({scope} scored low), with a noticeable distance "
             "between management and team members. Bring developers into estimation and scheduling, and run "
             "planning sessions where their input is asked for before decisions are made."},
            {"Collaborative teams",
             "Team work at {team} needs strengthening ({scope} scored low). Build shared goals and routines that "
             "make helping each other part of the normal work."},
            {"Empowered and motivated teams",
             "Empowerment at {team} scored low ({scope}). Hand decision authority for day-to-day work to the team "
             "and check whether people feel trusted."},
            {"Working standards/procedures",
             "Shared working standards at {team} scored low ({scope}). Agree on a small set of standards the team "
             "actually values and keep them up to date together."},
            {"Knowledge sharing tools",
             "Knowledge sharing at {team} scored low ({scope}). Make project information visible to everyone and "
             "agree on where it lives."},
            {"Task volunteering",
             "Task volunteering at {team} scored low ({scope}). Try a few iterations where work is pulled from a "
             "shared backlog instead of assigned, then review with the team how ownership and estimates changed."},
            {"Reflect and tune process",
             "Reflecting on and tuning the process scored low at {team} ({scope}). Retrospectives only pay off "
             "when their outcomes are acted on. Consider an introductory session for managers on running "
             "retrospectives, and agree on a fixed slot at the end of every iteration or release to review and "
             "adjust the way the team works."},
            {"Customer commitment",
             "Customer commitment at {team} scored low ({scope}). Bring customers closer to the team and agree on "
             "how they take part in reviews and changes of direction."},
        };
        return c;
    }();
    return catalog;
}

RecommendationCatalog load_catalog(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw CatalogError(std::string("malformed catalog document: ") + e.what());
    }
    if (!doc.is_object()) throw CatalogError("catalog document must be a JSON object");

    // Overrides are layered on top of the shipped catalog.
    RecommendationCatalog catalog = default_catalog();
    if (auto it = doc.find("by_characteristic"); it != doc.end()) {
        if (!it->is_object()) throw CatalogError("by_characteristic must be an object");
        for (const auto& [key, value] : it->items()) {
            int id = 0;
            try {
                std::size_t used = 0;
                id = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw CatalogError("by_characteristic key '" + key + "' is not an integer");
            }
            if (id < 1 || id > kCharacteristicCount) {
                throw CatalogError("by_characteristic key " + key + " out of range [1,21]");
            }
            if (!value.is_string()) throw CatalogError("by_characteristic[" + key + "] must be a string");
            catalog.by_characteristic[id] = value.get<std::string>();
        }
    }
    if (auto it = doc.find("by_practice"); it != doc.end()) {
        if (!it->is_object()) throw CatalogError("by_practice must be an object");
        for (const auto& [key, value] : it->items()) {
            if (!value.is_string()) throw CatalogError("by_practice['" + key + "'] must be a string");
            catalog.by_practice[key] = value.get<std::string>();
        }
    }
    return catalog;
}

std::string serialize_catalog(const RecommendationCatalog& catalog) {
    json doc = json::object();
    json chars = json::object();
    for (const auto& [id, text] : catalog.by_characteristic) chars[std::to_string(id)] = text;
    json practices = json::object();
    for (const auto& [name, text] : catalog.by_practice) practices[name] = text;
    doc["by_characteristic"] = std::move(chars);
    doc["by_practice"] = std::move(practices);
    return doc.dump(2) + "\n";
}

std::vector<std::string> catalog_gaps(const RecommendationCatalog& catalog, const Framework& framework) {
    std::vector<std::string> gaps;
    for (int id = 1; id <= kCharacteristicCount; ++id) {
        if (!catalog.by_characteristic.count(id)) gaps.push_back("characteristic " + std::to_string(id));
    }
    for (const auto* practice : framework.practices()) {
        if (!catalog.by_practice.count(practice->name)) gaps.push_back("practice '" + practice->name + "'");
    }
    return gaps;
}

std::vector<FocusArea> select_focus_areas(const AssessmentResult& result, const Framework& framework,
                                          const FocusPolicy& policy) {
    const double cutoff = policy.cutoff.value_or(result.config.thresholds.high);

    std::vector<FocusArea> areas;
    for (const auto& pr : result.practices) {
        if (!pr.has_evidence()) continue;
        const double mid = pr.combined->mean;
        if (!policy.top_k && !(mid < cutoff)) continue;

        FocusArea area;
        area.practice = pr.practice;
        area.combined_midpoint = mid;
        if (const auto* practice = framework.find_practice(pr.practice)) {
            area.characteristics = practice_characteristics(framework, *practice);
        }

        const auto& m = pr.manager.ci;
        const auto& d = pr.developer.ci;
        const bool m_low = m && m->mean < cutoff;
        const bool d_low = d && d->mean < cutoff;
        if (m_low && d_low) {
            area.scope = RoleScope::Both;
        } else if (m_low) {
            area.scope = RoleScope::Manager;
        } else if (d_low) {
            area.scope = RoleScope::Developer;
        } else if (m && d) {
            // Above the cutoff (top-k mode): point at the weaker side.
            area.scope = m->mean <= d->mean ? RoleScope::Manager : RoleScope::Developer;
        } else {
            area.scope = m ? RoleScope::Manager : RoleScope::Developer;
        }
        areas.push_back(std::move(area));
    }

    std::sort(areas.begin(), areas.end(), [](const FocusArea& a, const FocusArea& b) {
        if (a.combined_midpoint != b.combined_midpoint) return a.combined_midpoint < b.combined_midpoint;
        return a.practice < b.practice;
    });
    if (policy.top_k && areas.size() > *policy.top_k) areas.resize(*policy.top_k);
    for (std::size_t i = 0; i < areas.size(); ++i) areas[i].rank = i + 1;
    return areas;
}

namespace {

std::string scope_phrase(RoleScope scope) {
    switch (scope) {
        case RoleScope::Manager: return "managers";
        case RoleScope::Developer: return "developers";
        case RoleScope::Both: return "managers and developers";
    }
    return "";
}

std::string fill_template(std::string text, std::string_view team, RoleScope scope) {
    auto replace_all = [&text](std::string_view key, const std::string& value) {
        for (auto pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + value.size())) {
            text.replace(pos, key.size(), value);
        }
    };
    replace_all("{team}", std::string(team));
    replace_all("{scope}", scope_phrase(scope));
    return text;
}

}  // namespace

std::string render_recommendations(std::string_view team, const std::vector<FocusArea>& areas,
                                   const RecommendationCatalog& catalog, const Framework& framework) {
    std::ostringstream md;
    md << "## Recommendations for " << team << "\n\n";
    if (areas.empty()) {
        md << "No focus areas: every practice scored at or above the cutoff.\n";
        return md.str();
    }

    md << "Suggested focus areas, lowest score first:\n\n";
    for (const auto& area : areas) {
        md << "(" << area.rank << ") " << area.practice << " (" << scope_phrase(area.scope) << ")\n";
    }
    md << "\n";

    for (const auto& area : areas) {
        auto advice = catalog.by_practice.find(area.practice);
        if (advice == catalog.by_practice.end()) {
            throw CatalogError("catalog has no advice for practice '" + area.practice + "'");
        }
        md << "### " << area.rank << ". " << area.practice << "\n\n";
        md << fill_template(advice->second, team, area.scope) << "\n\n";
        if (!area.characteristics.empty()) {
            md << "Characteristics involved:\n\n";
            for (int id : area.characteristics) {
                auto tip = catalog.by_characteristic.find(id);
                if (tip == catalog.by_characteristic.end()) {
                    throw CatalogError("catalog has no advice for characteristic " + std::to_string(id));
                }
                md << "- (" << id << ") " << framework.characteristic(id).description << "\n";
                md << "  - " << tip->second << "\n";
            }
            md << "\n";
        }
    }
    return md.str();
}

}  // namespace agility
