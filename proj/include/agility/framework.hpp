#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agility {

enum class Role { Manager, Developer };

std::string_view to_string(Role role);
/// Case-insensitive "manager" / "developer". Throws std::invalid_argument otherwise.
Role parse_role(std::string_view text);

inline constexpr int kCharacteristicCount = 21;
inline constexpr double kWeightSumTolerance = 1e-9;

struct Characteristic {
    int id = 0;
    std::string description;

    bool operator==(const Characteristic&) const = default;
};

/// The 21 agile characteristics, ids 1..21, in list order.
const std::vector<Characteristic>& default_characteristics();

struct Item {
    std::string id;
    std::string text;
    Role role = Role::Developer;
    int characteristic = 0;

    bool operator==(const Item&) const = default;
};

struct WeightedItem {
    std::string item_id;
    double weight = 0.0;

    bool operator==(const WeightedItem&) const = default;
};

struct Practice {
    std::string name;
    std::vector<WeightedItem> weighted_items;  // declaration order

    double weight_of(std::string_view item_id) const;
    bool operator==(const Practice&) const = default;
};

struct Principle {
    std::string name;
    std::vector<Practice> practices;

    bool operator==(const Principle&) const = default;
};

struct AgileLevel {
    std::string name;
    int rank = 0;
    std::vector<Principle> principles;

    bool operator==(const AgileLevel&) const = default;
};

/// Level -> principle -> practice -> item hierarchy. Immutable once loaded;
/// construct through load_framework() or validate() a hand-built value.
struct Framework {
    std::string name = "framework";
    int scale_size = 5;
    std::vector<AgileLevel> levels;
    std::map<std::string, Item> items;
    std::vector<Characteristic> characteristics = default_characteristics();

    const Item& item(std::string_view id) const;
    bool has_item(std::string_view id) const;

    /// All practices in declaration order (level, principle, practice).
    std::vector<const Practice*> practices() const;
    const Practice* find_practice(std::string_view name) const;
    const Characteristic& characteristic(int id) const;

    bool operator==(const Framework&) const = default;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Carries every violated invariant, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

class UnknownItemError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Empty when the framework satisfies all invariants.
std::vector<std::string> validation_errors(const Framework& framework);
void validate(const Framework& framework);

/// Parses and validates a framework JSON document.
Framework load_framework(std::string_view document);
std::string serialize_framework(const Framework& framework);

/// n weights of 1/n. Throws std::domain_error for n == 0.
std::vector<double> equal_weights(std::size_t n);

struct PracticeWeight {
    std::string practice;
    double weight = 0.0;

    bool operator==(const PracticeWeight&) const = default;
};

/// Every practice that references item_id, with the item's weight there.
std::vector<PracticeWeight> practices_of_item(const Framework& framework, std::string_view item_id);

/// Characteristic ids of the practice's items, ascending and unique.
std::vector<int> practice_characteristics(const Framework& framework, const Practice& practice);

bool is_valid_item_id(std::string_view id);

}  // namespace agility
