#include "semgrid/classes.hpp"

#include <cassert>

namespace semgrid {

const std::array<ClassInfo, kNumClasses>& class_table() {
    // Render palette: figure-legend colors where published, fixed constants
    // for the rest (pole_sign, car, bicycle). Colors affect rendering only.
    static const std::array<ClassInfo, kNumClasses> table{{
        {0, "unknown", Category::Static, {0, 0, 0}},
        {1, "road", Category::Static, {128, 64, 128}},
        {2, "sidewalk", Category::Static, {244, 32, 232}},
        {3, "building", Category::Static, {70, 70, 70}},
        {4, "vegetation", Category::Static, {107, 142, 35}},
        {5, "pole_sign", Category::SmallStatic, {220, 220, 0}},
        {6, "car", Category::Vehicles, {0, 0, 142}},
        {7, "large_vehicle", Category::Vehicles, {0, 60, 100}},
        {8, "person", Category::SmallDynamic, {220, 20, 60}},
        {9, "bicycle", Category::SmallDynamic, {119, 11, 32}},
    }};
    return table;
}

const ClassInfo& class_info(ClassId id) {
    assert(is_valid_class(id));
    return class_table()[id];
}

std::optional<ClassId> class_by_name(std::string_view name) {
    for (const auto& info : class_table()) {
        if (info.name == name) return info.id;
    }
    return std::nullopt;
}

Category category_of(ClassId id) { return class_info(id).category; }

int category_priority(ClassId id) { return static_cast<int>(class_info(id).category); }

std::string_view category_name(Category c) {
    switch (c) {
        case Category::Static: return "static";
        case Category::SmallStatic: return "small_static";
        case Category::Vehicles: return "vehicles";
        case Category::SmallDynamic: return "small_dynamic";
    }
    return "";
}

std::optional<Category> category_by_name(std::string_view name) {
    for (int c = 0; c < kNumCategories; ++c) {
        if (category_name(static_cast<Category>(c)) == name) return static_cast<Category>(c);
    }
    return std::nullopt;
}

std::array<ClassId, kNumClasses> category_members(Category c, int* count) {
    std::array<ClassId, kNumClasses> members{};
    int n = 0;
    for (const auto& info : class_table()) {
        if (info.category == c) members[n++] = info.id;
    }
    if (count) *count = n;
    return members;
}

}  // namespace semgrid
