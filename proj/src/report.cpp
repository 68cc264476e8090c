#include "agility/report.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>

#include "json.hpp"

namespace agility {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view text) {
    if (text == "md" || text == "markdown") return ReportFormat::Markdown;
    if (text == "csv") return ReportFormat::Csv;
    if (text == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected md|csv|json)");
}

std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", fraction * 100.0);
    return buf;
}

// ---------------------------------------------------------------------------
// What-if weight overrides

WeightOverride parse_weight_override(std::string_view text) {
    const auto last = text.rfind(':');
    if (last == std::string_view::npos || last == 0) {
        throw std::invalid_argument("weight override '" + std::string(text) + "' must be practice:item:weight");
    }
    const auto middle = text.rfind(':', last - 1);
    if (middle == std::string_view::npos) {
        throw std::invalid_argument("weight override '" + std::string(text) + "' must be practice:item:weight");
    }
    WeightOverride o;
    o.practice = std::string(text.substr(0, middle));
    o.item_id = std::string(text.substr(middle + 1, last - middle - 1));
    const std::string number(text.substr(last + 1));
    try {
        std::size_t used = 0;
        o.weight = std::stod(number, &used);
        if (used != number.size()) throw std::invalid_argument(number);
    } catch (const std::exception&) {
        throw std::invalid_argument("weight override '" + std::string(text) + "': '" + number +
                                    "' is not a number");
    }
    if (o.practice.empty() || o.item_id.empty()) {
        throw std::invalid_argument("weight override '" + std::string(text) + "' must be practice:item:weight");
    }
    return o;
}

OverrideOutcome apply_weight_overrides(const Framework& framework, const std::vector<WeightOverride>& overrides) {
    OverrideOutcome outcome{framework, {}};

    // practice name -> (item -> pinned weight), in first-mention order
    std::vector<std::pair<std::string, std::map<std::string, double>>> pinned;
    for (const auto& o : overrides) {
        const Practice* practice = framework.find_practice(o.practice);
        if (!practice) throw std::invalid_argument("override names unknown practice '" + o.practice + "'");
        const bool in_practice = std::any_of(practice->weighted_items.begin(), practice->weighted_items.end(),
                                             [&](const WeightedItem& wi) { return wi.item_id == o.item_id; });
        if (!in_practice) {
            throw std::invalid_argument("practice '" + o.practice + "' has no item '" + o.item_id + "'");
        }
        if (!(o.weight > 0.0 && o.weight <= 1.0)) {
            throw std::invalid_argument("override weight for '" + o.item_id + "' must be in (0,1]");
        }
        auto it = std::find_if(pinned.begin(), pinned.end(), [&](const auto& p) { return p.first == o.practice; });
        if (it == pinned.end()) {
            pinned.emplace_back(o.practice, std::map<std::string, double>{});
            it = std::prev(pinned.end());
        }
        it->second[o.item_id] = o.weight;
    }

    for (auto& level : outcome.framework.levels) {
        for (auto& principle : level.principles) {
            for (auto& practice : principle.practices) {
                auto it = std::find_if(pinned.begin(), pinned.end(),
                                       [&](const auto& p) { return p.first == practice.name; });
                if (it == pinned.end()) continue;
                const auto& pins = it->second;

                const bool unchanged = std::all_of(pins.begin(), pins.end(), [&](const auto& pin) {
                    return practice.weight_of(pin.first) == pin.second;
                });
                if (!unchanged) {
                    double pinned_sum = 0.0;
                    double free_sum = 0.0;
                    for (const auto& wi : practice.weighted_items) {
                        if (pins.count(wi.item_id)) {
                            pinned_sum += pins.at(wi.item_id);
                        } else {
                            free_sum += wi.weight;
                        }
                    }
                    if (free_sum > 0.0) {
                        if (pinned_sum >= 1.0) {
                            throw std::invalid_argument("overrides for practice '" + practice.name +
                                                        "' sum to >= 1 and leave no weight for its other items");
                        }
                        const double scale = (1.0 - pinned_sum) / free_sum;
                        for (auto& wi : practice.weighted_items) {
                            wi.weight = pins.count(wi.item_id) ? pins.at(wi.item_id) : wi.weight * scale;
                        }
                    } else {
                        for (auto& wi : practice.weighted_items) wi.weight = pins.at(wi.item_id) / pinned_sum;
                    }
                }
                outcome.effective.push_back({practice.name, practice.weighted_items});
            }
        }
    }
    validate(outcome.framework);
    return outcome;
}

// ---------------------------------------------------------------------------
// Report assembly

ReportDocument build_report(const Framework& base, const ResponseSet& responses, const RecommendationCatalog& catalog,
                            const ReportOptions& options) {
    auto overridden = apply_weight_overrides(base, options.overrides);
    const Framework& framework = overridden.framework;

    const AssessmentResult result = assess(framework, responses, options.config, options.team);
    const auto areas = select_focus_areas(result, framework, options.focus);

    ReportDocument doc;
    doc.team = options.team;
    doc.framework = framework.name;
    doc.scale_size = framework.scale_size;
    doc.confidence_level = options.config.confidence_level;
    doc.thresholds = options.config.thresholds;
    doc.focus_cutoff = options.focus.cutoff.value_or(options.config.thresholds.high);
    doc.managers = result.managers;
    doc.developers = result.developers;
    doc.overrides = options.overrides;
    doc.effective_weights = std::move(overridden.effective);

    const auto practices = framework.practices();
    for (std::size_t i = 0; i < practices.size(); ++i) {
        const auto& pr = result.practices[i];
        doc.rows.push_back({pr.practice, pr.manager.interval, pr.developer.interval, pr.combined_interval,
                            pr.combined, pr.status, practice_characteristics(framework, *practices[i])});
    }
    for (const auto& p : result.principles) doc.rollups.push_back({"principle", p.name, p.interval, p.status});
    for (const auto& l : result.levels) doc.rollups.push_back({"level", l.name, l.interval, l.status});

    doc.focus_areas = areas;
    doc.notes = framework.characteristics;
    std::sort(doc.notes.begin(), doc.notes.end(),
              [](const Characteristic& a, const Characteristic& b) { return a.id < b.id; });
    doc.recommendations = render_recommendations(options.team, areas, catalog, framework);
    doc.warnings = result.warnings;
    return doc;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json interval_json(const std::optional<AchievementInterval>& iv) {
    if (!iv) return nullptr;
    return {{"pessimistic", iv->pessimistic}, {"optimistic", iv->optimistic}};
}

std::optional<AchievementInterval> interval_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return AchievementInterval{j.at("pessimistic").get<double>(), j.at("optimistic").get<double>()};
}

json ci_json(const std::optional<ConfidenceInterval>& ci) {
    if (!ci) return nullptr;
    return {{"mean", ci->mean},   {"lower", ci->lower}, {"upper", ci->upper},
            {"level", ci->level}, {"n", ci->n},         {"degenerate", ci->degenerate}};
}

std::optional<ConfidenceInterval> ci_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    ConfidenceInterval ci;
    ci.mean = j.at("mean").get<double>();
    ci.lower = j.at("lower").get<double>();
    ci.upper = j.at("upper").get<double>();
    ci.level = j.at("level").get<double>();
    ci.n = j.at("n").get<std::size_t>();
    ci.degenerate = j.at("degenerate").get<bool>();
    return ci;
}

json status_json(const std::optional<AchievementStatus>& s) {
    if (!s) return nullptr;
    return std::string(to_string(*s));
}

std::optional<AchievementStatus> status_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_status(j.get<std::string>());
}

}  // namespace

std::string report_to_json(const ReportDocument& r) {
    json doc = json::object();
    doc["schema_version"] = r.schema_version;
    doc["team"] = r.team;
    doc["framework"] = r.framework;
    doc["scale_size"] = r.scale_size;
    doc["config"] = {{"confidence_level", r.confidence_level},
                     {"thresholds", {{"low", r.thresholds.low}, {"high", r.thresholds.high}}},
                     {"focus_cutoff", r.focus_cutoff}};
    doc["respondents"] = {{"managers", r.managers}, {"developers", r.developers}};

    json overrides = json::array();
    for (const auto& o : r.overrides) {
        overrides.push_back({{"practice", o.practice}, {"item", o.item_id}, {"weight", o.weight}});
    }
    doc["overrides"] = std::move(overrides);

    json effective = json::array();
    for (const auto& e : r.effective_weights) {
        json weights = json::array();
        for (const auto& wi : e.weights) weights.push_back({{"item", wi.item_id}, {"weight", wi.weight}});
        effective.push_back({{"practice", e.practice}, {"weights", std::move(weights)}});
    }
    doc["effective_weights"] = std::move(effective);

    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"practice", row.practice},
                        {"manager", interval_json(row.manager)},
                        {"developer", interval_json(row.developer)},
                        {"combined", interval_json(row.combined)},
                        {"ci", ci_json(row.ci)},
                        {"status", status_json(row.status)},
                        {"notes", row.notes}});
    }
    doc["practices"] = std::move(rows);

    json rollups = json::array();
    for (const auto& row : r.rollups) {
        rollups.push_back({{"tier", row.tier},
                           {"name", row.name},
                           {"interval", interval_json(row.interval)},
                           {"status", status_json(row.status)}});
    }
    doc["rollups"] = std::move(rollups);

    json areas = json::array();
    for (const auto& a : r.focus_areas) {
        areas.push_back({{"rank", a.rank},
                         {"practice", a.practice},
                         {"scope", std::string(to_string(a.scope))},
                         {"combined_midpoint", a.combined_midpoint},
                         {"characteristics", a.characteristics}});
    }
    doc["focus_areas"] = std::move(areas);

    json notes = json::array();
    for (const auto& c : r.notes) notes.push_back({{"id", c.id}, {"description", c.description}});
    doc["notes"] = std::move(notes);
    doc["recommendations"] = r.recommendations;
    doc["warnings"] = r.warnings;
    return doc.dump(2) + "\n";
}

ReportDocument report_from_json(std::string_view document) {
    try {
        const json doc = json::parse(document);
        ReportDocument r;
        r.schema_version = doc.at("schema_version").get<int>();
        if (r.schema_version != kReportSchemaVersion) {
            throw ParseError("unsupported report schema_version " + std::to_string(r.schema_version));
        }
        r.team = doc.at("team").get<std::string>();
        r.framework = doc.at("framework").get<std::string>();
        r.scale_size = doc.at("scale_size").get<int>();
        const auto& config = doc.at("config");
        r.confidence_level = config.at("confidence_level").get<double>();
        r.thresholds.low = config.at("thresholds").at("low").get<double>();
        r.thresholds.high = config.at("thresholds").at("high").get<double>();
        r.focus_cutoff = config.at("focus_cutoff").get<double>();
        r.managers = doc.at("respondents").at("managers").get<std::size_t>();
        r.developers = doc.at("respondents").at("developers").get<std::size_t>();

        for (const auto& o : doc.at("overrides")) {
            r.overrides.push_back(
                {o.at("practice").get<std::string>(), o.at("item").get<std::string>(), o.at("weight").get<double>()});
        }
        for (const auto& e : doc.at("effective_weights")) {
            EffectiveWeights ew{e.at("practice").get<std::string>(), {}};
            for (const auto& w : e.at("weights")) {
                ew.weights.push_back({w.at("item").get<std::string>(), w.at("weight").get<double>()});
            }
            r.effective_weights.push_back(std::move(ew));
        }
        for (const auto& row : doc.at("practices")) {
            r.rows.push_back({row.at("practice").get<std::string>(), interval_from(row.at("manager")),
                              interval_from(row.at("developer")), interval_from(row.at("combined")),
                              ci_from(row.at("ci")), status_from(row.at("status")),
                              row.at("notes").get<std::vector<int>>()});
        }
        for (const auto& row : doc.at("rollups")) {
            r.rollups.push_back({row.at("tier").get<std::string>(), row.at("name").get<std::string>(),
                                 interval_from(row.at("interval")), status_from(row.at("status"))});
        }
        for (const auto& a : doc.at("focus_areas")) {
            FocusArea area;
            area.rank = a.at("rank").get<std::size_t>();
            area.practice = a.at("practice").get<std::string>();
            area.scope = parse_role_scope(a.at("scope").get<std::string>());
            area.combined_midpoint = a.at("combined_midpoint").get<double>();
            area.characteristics = a.at("characteristics").get<std::vector<int>>();
            r.focus_areas.push_back(std::move(area));
        }
        for (const auto& c : doc.at("notes")) {
            r.notes.push_back({c.at("id").get<int>(), c.at("description").get<std::string>()});
        }
        r.recommendations = doc.at("recommendations").get<std::string>();
        r.warnings = doc.at("warnings").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed report document: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Markdown / CSV projections

namespace {

std::string interval_text(const std::optional<AchievementInterval>& iv) {
    if (!iv) return "n/a";
    return "[" + format_percent(iv->pessimistic) + ", " + format_percent(iv->optimistic) + "]";
}

std::string status_text(const std::optional<AchievementStatus>& s) {
    return s ? std::string(to_string(*s)) : "no evidence";
}

std::string join_ints(const std::vector<int>& ids, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string scope_label(RoleScope scope) {
    switch (scope) {
        case RoleScope::Manager: return "managers";
        case RoleScope::Developer: return "developers";
        case RoleScope::Both: return "managers and developers";
    }
    return "";
}

}  // namespace

std::string report_to_markdown(const ReportDocument& r) {
    std::ostringstream md;
    md << "# Agility assessment: " << r.team << "\n\n";
    md << "- Framework: " << r.framework << " (" << r.scale_size << "-point scale)\n";
    md << "- Respondents: " << r.managers << " manager(s), " << r.developers << " developer(s)\n";
    md << "- Confidence level: " << format_percent(r.confidence_level) << "\n";
    md << "- Thresholds: not achieved < " << format_percent(r.thresholds.low) << " <= partially achieved < "
       << format_percent(r.thresholds.high) << " <= achieved\n";

    if (!r.overrides.empty()) {
        md << "\n## Weight overrides\n\n";
        for (const auto& o : r.overrides) {
            md << "- " << o.practice << " / " << o.item_id << " = " << o.weight << "\n";
        }
        md << "\nEffective weights:\n\n";
        for (const auto& e : r.effective_weights) {
            md << "- " << e.practice << ":";
            for (const auto& wi : e.weights) md << " " << wi.item_id << "=" << wi.weight;
            md << "\n";
        }
    }

    md << "\n## Results\n\n";
    md << "| Practice | Managers | Developers | Combined | Mean [" << format_percent(r.confidence_level)
       << " CI] | Status | Notes |\n";
    md << "|---|---|---|---|---|---|---|\n";
    for (const auto& row : r.rows) {
        md << "| " << md_cell(row.practice) << " | " << interval_text(row.manager) << " | "
           << interval_text(row.developer) << " | " << interval_text(row.combined) << " | ";
        if (row.ci) {
            md << format_percent(row.ci->mean) << " [" << format_percent(row.ci->lower) << ", "
               << format_percent(row.ci->upper) << "] (n=" << row.ci->n << ")";
        } else {
            md << "n/a";
        }
        md << " | " << status_text(row.status) << " | " << join_ints(row.notes, ", ") << " |\n";
    }

    md << "\n## Rollups\n\n";
    md << "| Tier | Name | Interval | Status |\n";
    md << "|---|---|---|---|\n";
    for (const auto& row : r.rollups) {
        md << "| " << row.tier << " | " << md_cell(row.name) << " | " << interval_text(row.interval) << " | "
           << status_text(row.status) << " |\n";
    }

    md << "\n## Focus areas\n\n";
    if (r.focus_areas.empty()) {
        md << "None.\n";
    } else {
        for (const auto& a : r.focus_areas) {
            md << a.rank << ". " << a.practice << " (" << scope_label(a.scope) << ", "
               << format_percent(a.combined_midpoint) << ")\n";
        }
    }

    md << "\n" << r.recommendations;

    md << "\n## Notes\n\n";
    for (const auto& c : r.notes) md << "(" << c.id << ") " << c.description << "\n";

    if (!r.warnings.empty()) {
        md << "\n## Warnings\n\n";
        for (const auto& w : r.warnings) md << "- " << w << "\n";
    }
    return md.str();
}

std::string report_to_csv(const ReportDocument& r) {
    std::ostringstream csv;
    csv << "section,rank,name,scope,manager,developer,combined,mean,ci_lower,ci_upper,status,notes\n";
    auto pct = [](const std::optional<double>& v) { return v ? format_percent(*v) : std::string(); };
    auto iv = [](const std::optional<AchievementInterval>& v) {
        return v ? format_percent(v->pessimistic) + "-" + format_percent(v->optimistic) : std::string();
    };
    for (const auto& row : r.rows) {
        std::optional<double> mean, lo, hi;
        if (row.ci) {
            mean = row.ci->mean;
            lo = row.ci->lower;
            hi = row.ci->upper;
        }
        csv << "practice,," << csv_field(row.practice) << ",," << iv(row.manager) << "," << iv(row.developer) << ","
            << iv(row.combined) << "," << pct(mean) << "," << pct(lo) << "," << pct(hi) << ","
            << (row.status ? std::string(to_string(*row.status)) : "") << "," << join_ints(row.notes, ";")
            << "\n";
    }
    for (const auto& row : r.rollups) {
        csv << row.tier << ",," << csv_field(row.name) << ",,,," << iv(row.interval) << ",,,,"
            << (row.status ? std::string(to_string(*row.status)) : "") << ",\n";
    }
    for (const auto& a : r.focus_areas) {
        csv << "focus," << a.rank << "," << csv_field(a.practice) << "," << to_string(a.scope) << ",,,,"
            << format_percent(a.combined_midpoint) << ",,,," << join_ints(a.characteristics, ";") << "\n";
    }
    return csv.str();
}

std::string render_report(const ReportDocument& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Markdown: return report_to_markdown(report);
        case ReportFormat::Csv: return report_to_csv(report);
        case ReportFormat::Json: return report_to_json(report);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Team comparison

ComparisonTable compare_teams(const Framework& framework, const std::vector<TeamInput>& teams,
                              const ScoringConfig& config) {
    if (teams.size() < 2) throw std::invalid_argument("compare needs at least 2 teams");
    validate_config(config, framework);

    std::vector<std::future<AssessmentResult>> jobs;
    jobs.reserve(teams.size());
    for (const auto& team : teams) {
        jobs.push_back(std::async(std::launch::async,
                                  [&framework, &team, &config] { return assess(framework, team.responses, config, team.label); }));
    }
    std::vector<AssessmentResult> results;
    results.reserve(jobs.size());
    for (auto& job : jobs) results.push_back(job.get());

    ComparisonTable table;
    for (const auto& team : teams) table.teams.push_back(team.label);
    for (const auto* practice : framework.practices()) {
        CompareRow row{practice->name, {}, std::nullopt};
        std::optional<double> lo, hi;
        for (const auto& result : results) {
            const auto* pr = result.find(practice->name);
            std::optional<double> mid;
            if (pr && pr->combined) mid = pr->combined->mean;
            row.midpoints.push_back(mid);
            if (mid) {
                lo = lo ? std::min(*lo, *mid) : *mid;
                hi = hi ? std::max(*hi, *mid) : *mid;
            }
        }
        if (lo) row.range = *hi - *lo;
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string render_comparison(const ComparisonTable& table, ReportFormat format) {
    auto cell = [](const std::optional<double>& v) { return v ? format_percent(*v) : std::string("n/a"); };
    std::ostringstream out;
    switch (format) {
        case ReportFormat::Json: {
            json rows = json::array();
            for (const auto& row : table.rows) {
                json mids = json::array();
                for (const auto& m : row.midpoints) mids.push_back(m ? json(*m) : json(nullptr));
                rows.push_back({{"practice", row.practice},
                                {"midpoints", std::move(mids)},
                                {"range", row.range ? json(*row.range) : json(nullptr)}});
            }
            json doc = {{"schema_version", kReportSchemaVersion}, {"teams", table.teams}, {"practices", rows}};
            return doc.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            out << "practice";
            for (const auto& t : table.teams) out << "," << csv_field(t);
            out << ",range\n";
            for (const auto& row : table.rows) {
                out << csv_field(row.practice);
                for (const auto& m : row.midpoints) out << "," << (m ? format_percent(*m) : "");
                out << "," << (row.range ? format_percent(*row.range) : "") << "\n";
            }
            return out.str();
        }
        case ReportFormat::Markdown: {
            out << "| Practice |";
            for (const auto& t : table.teams) out << " " << md_cell(t) << " |";
            out << " Range |\n|---|";
            for (std::size_t i = 0; i < table.teams.size(); ++i) out << "---|";
            out << "---|\n";
            for (const auto& row : table.rows) {
                out << "| " << md_cell(row.practice) << " |";
                for (const auto& m : row.midpoints) out << " " << cell(m) << " |";
                out << " " << cell(row.range) << " |\n";
            }
            return out.str();
        }
    }
    return {};
}

}  // namespace agility
