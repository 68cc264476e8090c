#include "agility/framework.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

namespace agility {

using nlohmann::json;

std::string_view to_string(Role role) {
    return role == Role::Manager ? "manager" : "developer";
}

Role parse_role(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "manager") return Role::Manager;
    if (lower == "developer") return Role::Developer;
    throw std::invalid_argument("unknown role '" + std::string(text) + "' (expected manager|developer)");
}

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
    std::string out = "framework validation failed:";
    for (const auto& v : violations) {
        out += "\n  - ";
        out += v;
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

double Practice::weight_of(std::string_view item_id) const {
    for (const auto& wi : weighted_items) {
        if (wi.item_id == item_id) return wi.weight;
    }
    return 0.0;
}

const Item& Framework::item(std::string_view id) const {
    auto it = items.find(std::string(id));
    if (it == items.end()) throw UnknownItemError("unknown item id '" + std::string(id) + "'");
    return it->second;
}

bool Framework::has_item(std::string_view id) const {
    return items.count(std::string(id)) != 0;
}

std::vector<const Practice*> Framework::practices() const {
    std::vector<const Practice*> out;
    for (const auto& level : levels) {
        for (const auto& principle : level.principles) {
            for (const auto& practice : principle.practices) out.push_back(&practice);
        }
    }
    return out;
}

const Practice* Framework::find_practice(std::string_view practice_name) const {
    for (const auto* p : practices()) {
        if (p->name == practice_name) return p;
    }
    return nullptr;
}

const Characteristic& Framework::characteristic(int id) const {
    for (const auto& c : characteristics) {
        if (c.id == id) return c;
    }
    throw std::out_of_range("unknown characteristic id " + std::to_string(id));
}

bool is_valid_item_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_' || c == '-';
    });
}

std::vector<std::string> validation_errors(const Framework& framework) {
    std::vector<std::string> errors;

    if (framework.scale_size < 2) {
        errors.push_back("scale_size must be >= 2 (got " + std::to_string(framework.scale_size) + ")");
    }
    if (framework.levels.empty()) errors.push_back("framework has no levels");

    for (const auto& [id, item] : framework.items) {
        if (!is_valid_item_id(id)) errors.push_back("item id '" + id + "' must match [A-Za-z0-9_-]+");
        if (item.id != id) errors.push_back("item '" + id + "' is catalogued under a different key");
        if (item.characteristic < 1 || item.characteristic > kCharacteristicCount) {
            errors.push_back("item '" + id + "': characteristic " + std::to_string(item.characteristic) +
                             " out of range [1,21]");
        }
    }

    std::set<std::string> practice_names;
    for (std::size_t li = 0; li < framework.levels.size(); ++li) {
        const auto& level = framework.levels[li];
        if (level.rank != static_cast<int>(li) + 1) {
            errors.push_back("level '" + level.name + "': rank " + std::to_string(level.rank) + ", expected " +
                             std::to_string(li + 1));
        }
        if (level.principles.empty()) errors.push_back("level '" + level.name + "' has no principles");
        for (const auto& principle : level.principles) {
            if (principle.practices.empty()) {
                errors.push_back("principle '" + principle.name + "' has no practices");
            }
            for (const auto& practice : principle.practices) {
                if (!practice_names.insert(practice.name).second) {
                    errors.push_back("duplicate practice name '" + practice.name + "'");
                }
                if (practice.weighted_items.empty()) {
                    errors.push_back("practice '" + practice.name + "' has no items");
                    continue;
                }
                double sum = 0.0;
                std::set<std::string> seen;
                for (const auto& wi : practice.weighted_items) {
                    sum += wi.weight;
                    if (!seen.insert(wi.item_id).second) {
                        errors.push_back("practice '" + practice.name + "' references item '" + wi.item_id +
                                         "' more than once");
                    }
                    if (!framework.has_item(wi.item_id)) {
                        errors.push_back("practice '" + practice.name + "' references unknown item '" +
                                         wi.item_id + "'");
                    }
                    if (!(wi.weight > 0.0 && wi.weight <= 1.0)) {
                        std::ostringstream os;
                        os << "practice '" << practice.name << "': weight of '" << wi.item_id << "' is "
                           << wi.weight << ", must be in (0,1]";
                        errors.push_back(os.str());
                    }
                }
                if (std::abs(sum - 1.0) > kWeightSumTolerance) {
                    std::ostringstream os;
                    os.precision(12);
                    os << "practice '" << practice.name << "': weights sum to " << sum << ", expected 1";
                    errors.push_back(os.str());
                }
            }
        }
    }

    if (framework.characteristics.size() != static_cast<std::size_t>(kCharacteristicCount)) {
        errors.push_back("expected exactly 21 characteristics, got " +
                         std::to_string(framework.characteristics.size()));
    }
    std::set<int> char_ids;
    for (const auto& c : framework.characteristics) {
        if (c.id < 1 || c.id > kCharacteristicCount) {
            errors.push_back("characteristic id " + std::to_string(c.id) + " out of range [1,21]");
        }
        if (!char_ids.insert(c.id).second) {
            errors.push_back("duplicate characteristic id " + std::to_string(c.id));
        }
    }
    return errors;
}

void validate(const Framework& framework) {
    auto errors = validation_errors(framework);
    if (!errors.empty()) throw ValidationError(std::move(errors));
}

std::vector<double> equal_weights(std::size_t n) {
    if (n == 0) throw std::domain_error("equal_weights: n must be >= 1");
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    // 1/n is not exact for most n; push the rounding residue into the last weight.
    double head = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) head += weights[i];
    double last = 1.0 - head;
    if (std::abs(last - weights.back()) < 1e-15) weights.back() = last;
    return weights;
}

namespace {

// Collects structural problems instead of throwing on the first one.
class Reader {
public:
    std::vector<std::string> errors;

    const json* field(const json& obj, const char* key, const std::string& where, bool required = true) {
        if (!obj.is_object()) {
            errors.push_back(where + ": expected an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) errors.push_back(where + ": missing key '" + key + "'");
            return nullptr;
        }
        return &*it;
    }

    std::string string(const json& obj, const char* key, const std::string& where) {
        const json* v = field(obj, key, where);
        if (!v) return {};
        if (!v->is_string()) {
            errors.push_back(where + "." + key + ": expected a string");
            return {};
        }
        return v->get<std::string>();
    }

    int integer(const json& obj, const char* key, const std::string& where) {
        const json* v = field(obj, key, where);
        if (!v) return 0;
        if (!v->is_number_integer()) {
            errors.push_back(where + "." + key + ": expected an integer");
            return 0;
        }
        return v->get<int>();
    }

    const json* array(const json& obj, const char* key, const std::string& where, bool required = true) {
        const json* v = field(obj, key, where, required);
        if (!v) return nullptr;
        if (!v->is_array()) {
            errors.push_back(where + "." + key + ": expected an array");
            return nullptr;
        }
        return v;
    }
};

Practice read_practice(Reader& r, const json& node, const std::string& where) {
    Practice practice;
    practice.name = r.string(node, "name", where);
    const std::string here = "practice '" + practice.name + "'";
    const json* items = r.array(node, "items", here);
    if (!items) return practice;

    std::size_t with_weight = 0;
    for (const auto& entry : *items) {
        WeightedItem wi;
        if (entry.is_string()) {
            wi.item_id = entry.get<std::string>();
        } else {
            wi.item_id = r.string(entry, "id", here + " item");
            if (const json* w = r.field(entry, "weight", here, false)) {
                if (w->is_number()) {
                    wi.weight = w->get<double>();
                    ++with_weight;
                } else {
                    r.errors.push_back(here + ": weight of '" + wi.item_id + "' must be a number");
                    ++with_weight;
                }
            }
        }
        practice.weighted_items.push_back(std::move(wi));
    }
    if (with_weight == 0 && !practice.weighted_items.empty()) {
        auto weights = equal_weights(practice.weighted_items.size());
        for (std::size_t i = 0; i < weights.size(); ++i) practice.weighted_items[i].weight = weights[i];
    } else if (with_weight != practice.weighted_items.size()) {
        r.errors.push_back(here + ": either every item or no item must carry a weight");
    }
    return practice;
}

}  // namespace

Framework load_framework(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed framework document: ") + e.what());
    }

    Reader r;
    Framework fw;
    if (!doc.is_object()) throw ParseError("framework document must be a JSON object");

    if (auto it = doc.find("name"); it != doc.end() && it->is_string()) fw.name = it->get<std::string>();
    if (auto it = doc.find("scale_size"); it != doc.end()) {
        if (it->is_number_integer()) {
            fw.scale_size = it->get<int>();
        } else {
            r.errors.push_back("scale_size: expected an integer");
        }
    }

    if (const json* items = r.array(doc, "items", "document")) {
        for (std::size_t i = 0; i < items->size(); ++i) {
            const json& node = (*items)[i];
            const std::string where = "items[" + std::to_string(i) + "]";
            Item item;
            item.id = r.string(node, "id", where);
            item.text = r.string(node, "text", where);
            item.characteristic = r.integer(node, "characteristic", where);
            const std::string role = r.string(node, "role", where);
            try {
                item.role = parse_role(role);
            } catch (const std::invalid_argument& e) {
                r.errors.push_back(where + ": " + e.what());
            }
            if (fw.items.count(item.id)) {
                r.errors.push_back("duplicate item id '" + item.id + "'");
                continue;
            }
            fw.items.emplace(item.id, std::move(item));
        }
    }

    if (const json* levels = r.array(doc, "levels", "document")) {
        for (std::size_t li = 0; li < levels->size(); ++li) {
            const json& lnode = (*levels)[li];
            const std::string where = "levels[" + std::to_string(li) + "]";
            AgileLevel level;
            level.name = r.string(lnode, "name", where);
            level.rank = r.integer(lnode, "rank", where);
            if (const json* principles = r.array(lnode, "principles", where)) {
                for (std::size_t pi = 0; pi < principles->size(); ++pi) {
                    const json& pnode = (*principles)[pi];
                    const std::string pwhere = where + ".principles[" + std::to_string(pi) + "]";
                    Principle principle;
                    principle.name = r.string(pnode, "name", pwhere);
                    if (const json* practices = r.array(pnode, "practices", pwhere)) {
                        for (std::size_t qi = 0; qi < practices->size(); ++qi) {
                            principle.practices.push_back(
                                read_practice(r, (*practices)[qi], pwhere + ".practices[" + std::to_string(qi) + "]"));
                        }
                    }
                    level.principles.push_back(std::move(principle));
                }
            }
            fw.levels.push_back(std::move(level));
        }
    }

    if (const json* chars = r.array(doc, "characteristics", "document", false)) {
        fw.characteristics.clear();
        for (std::size_t i = 0; i < chars->size(); ++i) {
            const std::string where = "characteristics[" + std::to_string(i) + "]";
            Characteristic c;
            c.id = r.integer((*chars)[i], "id", where);
            c.description = r.string((*chars)[i], "description", where);
            fw.characteristics.push_back(std::move(c));
        }
    }

    auto errors = std::move(r.errors);
    auto semantic = validation_errors(fw);
    errors.insert(errors.end(), semantic.begin(), semantic.end());
    if (!errors.empty()) throw ValidationError(std::move(errors));
    return fw;
}

std::string serialize_framework(const Framework& framework) {
    json doc = json::object();
    doc["name"] = framework.name;
    doc["scale_size"] = framework.scale_size;

    json levels = json::array();
    for (const auto& level : framework.levels) {
        json principles = json::array();
        for (const auto& principle : level.principles) {
            json practices = json::array();
            for (const auto& practice : principle.practices) {
                json items = json::array();
                for (const auto& wi : practice.weighted_items) {
                    items.push_back({{"id", wi.item_id}, {"weight", wi.weight}});
                }
                practices.push_back({{"name", practice.name}, {"items", std::move(items)}});
            }
            principles.push_back({{"name", principle.name}, {"practices", std::move(practices)}});
        }
        levels.push_back({{"name", level.name}, {"rank", level.rank}, {"principles", std::move(principles)}});
    }
    doc["levels"] = std::move(levels);

    // Catalog order follows first reference in the hierarchy, then any unreferenced items.
    json items = json::array();
    std::set<std::string> written;
    auto write_item = [&](const Item& item) {
        if (!written.insert(item.id).second) return;
        items.push_back({{"id", item.id},
                         {"text", item.text},
                         {"role", std::string(to_string(item.role))},
                         {"characteristic", item.characteristic}});
    };
    for (const auto* practice : framework.practices()) {
        for (const auto& wi : practice->weighted_items) {
            if (framework.has_item(wi.item_id)) write_item(framework.item(wi.item_id));
        }
    }
    for (const auto& [id, item] : framework.items) write_item(item);
    doc["items"] = std::move(items);

    json chars = json::array();
    for (const auto& c : framework.characteristics) {
        chars.push_back({{"id", c.id}, {"description", c.description}});
    }
    doc["characteristics"] = std::move(chars);
    return doc.dump(2) + "\n";
}

std::vector<PracticeWeight> practices_of_item(const Framework& framework, std::string_view item_id) {
    if (!framework.has_item(item_id)) {
        throw UnknownItemError("unknown item id '" + std::string(item_id) + "'");
    }
    std::vector<PracticeWeight> out;
    for (const auto* practice : framework.practices()) {
        for (const auto& wi : practice->weighted_items) {
            if (wi.item_id == item_id) out.push_back({practice->name, wi.weight});
        }
    }
    return out;
}

std::vector<int> practice_characteristics(const Framework& framework, const Practice& practice) {
    std::set<int> ids;
    for (const auto& wi : practice.weighted_items) {
        if (framework.has_item(wi.item_id)) ids.insert(framework.item(wi.item_id).characteristic);
    }
    return {ids.begin(), ids.end()};
}

}  // namespace agility
