#include "agility/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "agility/example_data.hpp"
#include "agility/report.hpp"
#include "json.hpp"

namespace agility::cli {

namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes via a sibling temp file so a failed run never leaves a partial report.
void write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + path + "'");
        out << content;
        if (!out.flush()) throw IoError("cannot write '" + path + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot write '" + path + "'");
    }
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
    } else {
        write_file(out_path, content);
    }
}

Thresholds parse_thresholds(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--thresholds expects 'low,high'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("--thresholds expects two numbers 'low,high'");
    }
}

// Defaults from the file named by AGILITY_CONFIG, if any.
ScoringConfig config_from_environment() {
    ScoringConfig config;
    const char* path = std::getenv("AGILITY_CONFIG");
    if (!path || !*path) return config;
    const std::string text = read_file(path);
    try {
        const auto doc = nlohmann::json::parse(text);
        if (auto it = doc.find("confidence"); it != doc.end()) config.confidence_level = it->get<double>();
        if (auto it = doc.find("thresholds"); it != doc.end()) {
            const auto values = it->get<std::vector<double>>();
            if (values.size() != 2) throw std::invalid_argument("thresholds must hold two numbers");
            config.thresholds = {values[0], values[1]};
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("AGILITY_CONFIG '" + std::string(path) + "': " + e.what());
    }
    return config;
}

struct ScoreArgs {
    std::string framework;
    std::string responses;
    double confidence = 0.95;
    std::string thresholds;
    std::string format = "md";
    std::string out;
    std::string team;
    std::string catalog;
    double cutoff = 0.0;
    std::size_t top_k = 0;
    std::vector<std::string> set_weight;
};

void add_score_options(CLI::App& cmd, ScoreArgs& a) {
    cmd.add_option("framework", a.framework, "Framework definition (JSON)")->required();
    cmd.add_option("responses", a.responses, "Response file (CSV)")->required();
    cmd.add_option("--confidence", a.confidence, "Confidence level in (0,1)");
    cmd.add_option("--thresholds", a.thresholds, "Classification thresholds 'low,high'");
    cmd.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
    cmd.add_option("--out", a.out, "Output file (stdout when omitted)");
    cmd.add_option("--team", a.team, "Team label (default: response file stem)");
    cmd.add_option("--catalog", a.catalog, "Recommendation catalog overrides (JSON)");
    cmd.add_option("--cutoff", a.cutoff, "Focus-area midpoint cutoff");
    cmd.add_option("--top-k", a.top_k, "Report the k lowest practices as focus areas");
}

ScoringConfig resolve_config(const CLI::App& cmd, const ScoreArgs& a) {
    ScoringConfig config = config_from_environment();
    if (cmd.count("--confidence")) config.confidence_level = a.confidence;
    if (cmd.count("--thresholds")) config.thresholds = parse_thresholds(a.thresholds);
    return config;
}

Framework read_framework(const std::string& path) {
    return load_framework(read_file(path));
}

RecommendationCatalog read_catalog(const std::string& path) {
    return path.empty() ? default_catalog() : load_catalog(read_file(path));
}

int cmd_validate(const std::string& framework_path, const std::string& catalog_path, std::ostream& out,
                 std::ostream& err) {
    const std::string text = read_file(framework_path);
    try {
        const Framework framework = load_framework(text);
        const auto catalog = read_catalog(catalog_path);
        const auto gaps = catalog_gaps(catalog, framework);
        if (!gaps.empty()) {
            for (const auto& g : gaps) err << "catalog missing entry for " << g << "\n";
            return kValidationError;
        }
        out << "OK: " << framework.levels.size() << " levels, " << framework.practices().size() << " practices, "
            << framework.items.size() << " items\n";
        return kOk;
    } catch (const ValidationError& e) {
        for (const auto& v : e.violations()) err << "error: " << v << "\n";
        return kValidationError;
    }
}

int cmd_score(const CLI::App& cmd, const ScoreArgs& a, std::ostream& out) {
    const Framework framework = read_framework(a.framework);
    const ResponseSet responses = parse_responses(read_file(a.responses), framework);
    const auto catalog = read_catalog(a.catalog);
    if (auto gaps = catalog_gaps(catalog, framework); !gaps.empty()) {
        throw CatalogError("catalog missing entry for " + gaps.front());
    }

    ReportOptions options;
    options.team = a.team.empty() ? fs::path(a.responses).stem().string() : a.team;
    options.config = resolve_config(cmd, a);
    if (cmd.count("--cutoff")) options.focus.cutoff = a.cutoff;
    if (cmd.count("--top-k")) options.focus.top_k = a.top_k;
    for (const auto& text : a.set_weight) options.overrides.push_back(parse_weight_override(text));

    const auto report = build_report(framework, responses, catalog, options);
    emit(render_report(report, parse_report_format(a.format)), a.out, out);
    return kOk;
}

struct CompareArgs {
    std::string framework;
    std::vector<std::string> teams;
    double confidence = 0.95;
    std::string format = "md";
    std::string out;
};

int cmd_compare(const CLI::App& cmd, const CompareArgs& a, std::ostream& out) {
    if (a.teams.size() < 2) throw UsageError("compare needs at least 2 teams");
    const Framework framework = read_framework(a.framework);
    ScoringConfig config = config_from_environment();
    if (cmd.count("--confidence")) config.confidence_level = a.confidence;

    std::vector<TeamInput> teams;
    for (const auto& spec : a.teams) {
        // LABEL=PATH, or a bare path labelled by its stem
        const auto eq = spec.find('=');
        std::string label = eq == std::string::npos ? fs::path(spec).stem().string() : spec.substr(0, eq);
        std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
        teams.push_back({std::move(label), parse_responses(read_file(path), framework)});
    }
    const auto table = compare_teams(framework, teams, config);
    emit(render_comparison(table, parse_report_format(a.format)), a.out, out);
    return kOk;
}

int cmd_init_example(const std::string& dir, bool force, std::ostream& out) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir + "'");

    const Framework framework = load_framework(example::framework_json());
    const std::vector<std::pair<std::string, std::string>> files = {
        {"framework.json", serialize_framework(framework)},
        {"catalog.json", serialize_catalog(default_catalog())},
        {"team_a.csv", std::string(example::team_a_csv())},
    };
    if (!force) {
        for (const auto& [name, content] : files) {
            if (fs::exists(fs::path(dir) / name)) {
                throw IoError("'" + (fs::path(dir) / name).string() + "' exists (use --force to overwrite)");
            }
        }
    }
    for (const auto& [name, content] : files) {
        write_file((fs::path(dir) / name).string(), content);
        out << "wrote " << (fs::path(dir) / name).string() << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Survey-based agility assessment", "agility"};
    app.require_subcommand(1);

    std::string validate_framework;
    std::string validate_catalog;
    auto* validate = app.add_subcommand("validate", "Check a framework definition");
    validate->add_option("framework", validate_framework, "Framework definition (JSON)")->required();
    validate->add_option("--catalog", validate_catalog, "Also check catalog coverage");

    ScoreArgs score_args;
    auto* score = app.add_subcommand("score", "Score one team's responses");
    add_score_options(*score, score_args);

    ScoreArgs whatif_args;
    auto* whatif = app.add_subcommand("whatif", "Score with overridden item weights");
    add_score_options(*whatif, whatif_args);
    whatif->add_option("--set-weight", whatif_args.set_weight, "practice:item:weight (repeatable)")
        ->required()
        ->take_all();

    CompareArgs compare_args;
    auto* compare = app.add_subcommand("compare", "Compare teams side by side");
    compare->add_option("framework", compare_args.framework, "Framework definition (JSON)")->required();
    compare->add_option("teams", compare_args.teams, "LABEL=responses.csv (two or more)")->required();
    compare->add_option("--confidence", compare_args.confidence, "Confidence level in (0,1)");
    compare->add_option("--format", compare_args.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
    compare->add_option("--out", compare_args.out, "Output file (stdout when omitted)");

    std::string init_dir = ".";
    bool init_force = false;
    auto* init = app.add_subcommand("init-example", "Write the example framework, catalog and team data");
    init->add_option("dir", init_dir, "Target directory");
    init->add_flag("--force", init_force, "Overwrite existing files");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        if (*validate) return cmd_validate(validate_framework, validate_catalog, out, err);
        if (*score) return cmd_score(*score, score_args, out);
        if (*whatif) return cmd_score(*whatif, whatif_args, out);
        if (*compare) return cmd_compare(*compare, compare_args, out);
        if (*init) return cmd_init_example(init_dir, init_force, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ValidationError& e) {
        for (const auto& v : e.violations()) err << "error: " << v << "\n";
        return kValidationError;
    } catch (const IngestionError& e) {
        for (const auto& row : e.errors()) err << "error: row " << row.row << ": " << row.message << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        // ParseError, CatalogError and invalid arguments (overrides, thresholds, confidence)
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }
    return kUsageError;
}

}  // namespace agility::cli
