#include "agility/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>

namespace agility {

namespace {

std::string format_errors(const std::vector<RowError>& errors) {
    std::string out = "response file rejected:";
    for (const auto& e : errors) {
        out += "\n  row " + std::to_string(e.row) + ": " + e.message;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

IngestionError::IngestionError(std::vector<RowError> errors)
    : std::runtime_error(format_errors(errors)), errors_(std::move(errors)) {}

std::size_t ResponseSet::count(Role role) const {
    return static_cast<std::size_t>(std::count_if(respondents.begin(), respondents.end(),
                                                  [role](const RespondentRecord& r) { return r.role == role; }));
}

ResponseSet parse_responses(std::string_view csv, const Framework& framework) {
    ResponseSet set;
    set.framework_id = framework.name;
    std::vector<RowError> errors;
    std::unordered_map<std::string, std::size_t> index_of;

    std::size_t row = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto nl = csv.find('\n', pos);
        std::string_view line = csv.substr(pos, nl == std::string_view::npos ? csv.npos : nl - pos);
        pos = (nl == std::string_view::npos) ? csv.size() + 1 : nl + 1;
        ++row;
        if (trim(line).empty()) continue;

        auto fields = split_fields(line);
        if (!header_seen) {
            header_seen = true;
            static const std::vector<std::string> expected = {"respondent_id", "role", "item_id", "answer"};
            bool ok = fields.size() == expected.size();
            for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = lower(fields[i]) == expected[i];
            if (!ok) {
                errors.push_back({row, "header must be 'respondent_id,role,item_id,answer'"});
                break;
            }
            continue;
        }

        if (fields.size() != 4) {
            errors.push_back({row, "expected 4 fields, got " + std::to_string(fields.size())});
            continue;
        }
        const std::string respondent(fields[0]);
        const std::string item_id(fields[2]);
        if (respondent.empty()) {
            errors.push_back({row, "empty respondent_id"});
            continue;
        }

        Role role{};
        try {
            role = parse_role(fields[1]);
        } catch (const std::invalid_argument& e) {
            errors.push_back({row, e.what()});
            continue;
        }

        int answer = 0;
        auto answer_text = fields[3];
        auto [end, ec] = std::from_chars(answer_text.data(), answer_text.data() + answer_text.size(), answer);
        if (ec != std::errc{} || end != answer_text.data() + answer_text.size()) {
            errors.push_back({row, "answer '" + std::string(answer_text) + "' is not an integer"});
            continue;
        }
        if (answer < 1 || answer > framework.scale_size) {
            errors.push_back({row, "answer " + std::to_string(answer) + " out of range [1," +
                                       std::to_string(framework.scale_size) + "]"});
            continue;
        }

        if (!framework.has_item(item_id)) {
            errors.push_back({row, "unknown item id '" + item_id + "'"});
            continue;
        }
        const Item& item = framework.item(item_id);
        if (item.role != role) {
            errors.push_back({row, std::string(to_string(role)) + " answered " + std::string(to_string(item.role)) +
                                       " item '" + item_id + "'"});
            continue;
        }

        auto [it, inserted] = index_of.try_emplace(respondent, set.respondents.size());
        if (inserted) {
            set.respondents.push_back({respondent, role, {}});
        }
        auto& record = set.respondents[it->second];
        if (record.role != role) {
            errors.push_back({row, "respondent appears with conflicting roles"});
            continue;
        }
        if (!record.answers.emplace(item_id, answer).second) {
            errors.push_back({row, "duplicate answer for item '" + item_id + "' by the same respondent"});
        }
    }
    if (!header_seen) errors.push_back({1, "missing header row"});

    if (!errors.empty()) throw IngestionError(std::move(errors));
    return set;
}

std::vector<CoverageEntry> coverage_report(const ResponseSet& responses, const Framework& framework) {
    std::set<std::string> answered_by[2];
    for (const auto& r : responses.respondents) {
        auto& bucket = answered_by[r.role == Role::Manager ? 0 : 1];
        for (const auto& [item_id, answer] : r.answers) bucket.insert(item_id);
    }

    std::vector<CoverageEntry> out;
    for (const auto* practice : framework.practices()) {
        for (Role role : {Role::Manager, Role::Developer}) {
            double total = 0.0;
            double answered = 0.0;
            const auto& bucket = answered_by[role == Role::Manager ? 0 : 1];
            for (const auto& wi : practice->weighted_items) {
                if (framework.item(wi.item_id).role != role) continue;
                total += wi.weight;
                if (bucket.count(wi.item_id)) answered += wi.weight;
            }
            if (total <= 0.0) continue;
            out.push_back({practice->name, role, std::clamp(answered / total, 0.0, 1.0)});
        }
    }
    return out;
}

}  // namespace agility
