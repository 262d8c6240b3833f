#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace semgrid {

using ClassId = std::uint8_t;

inline constexpr int kNumClasses = 10;

// Label value for pixels that carry no projectable class (sky, out of range).
// Never a valid grid cell value.
inline constexpr ClassId kInvalidLabel = 255;

enum class Class : ClassId {
    Unknown = 0,
    Road = 1,
    Sidewalk = 2,
    Building = 3,
    Vegetation = 4,
    PoleSign = 5,
    Car = 6,
    LargeVehicle = 7,
    Person = 8,
    Bicycle = 9,
};

// Collision priority ascends: a later category paints over an earlier one so
// that small and dynamic objects are never hidden by large static surfaces.
enum class Category : int {
    Static = 0,
    SmallStatic = 1,
    Vehicles = 2,
    SmallDynamic = 3,
};

inline constexpr int kNumCategories = 4;

struct Rgb {
    std::uint8_t r, g, b;
    bool operator==(const Rgb&) const = default;
};

struct ClassInfo {
    ClassId id;
    std::string_view name;
    Category category;
    Rgb color;
};

// id -> info table; ids are dense 0..9.
const std::array<ClassInfo, kNumClasses>& class_table();

const ClassInfo& class_info(ClassId id);

std::optional<ClassId> class_by_name(std::string_view name);

inline bool is_valid_class(ClassId id) { return id < kNumClasses; }

Category category_of(ClassId id);

int category_priority(ClassId id);

std::string_view category_name(Category c);

std::optional<Category> category_by_name(std::string_view name);

// Members of a category in ascending class id order.
std::array<ClassId, kNumClasses> category_members(Category c, int* count);

// True if `a` paints over `b` on a cell collision: higher category priority
// wins, ties broken by higher class id (equal classes: last write wins).
inline bool outranks(ClassId a, ClassId b) {
    const int pa = category_priority(a), pb = category_priority(b);
    if (pa != pb) return pa > pb;
    return a > b;
}

}  // namespace semgrid
