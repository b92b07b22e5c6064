#pragma once

#include <string>
#include <vector>

#include "multrans/traversal.hpp"

namespace multrans {

// One edge line style. Plain styles leave on_off empty; custom dash
// sequences keep a standard style name for renderers that ignore the
// dasharray/dashoffset attributes.
struct DashPattern {
    std::string dot_style;
    nat offset = 0;
    std::vector<nat> on_off;

    bool operator==(const DashPattern&) const = default;
};

struct StyleConfig {
    std::vector<DashPattern> dash_patterns;
    std::vector<std::string> color_palette;
    nat readability_warning_threshold = 8;
};

// Eight pairwise distinct dash patterns and eight named colors.
StyleConfig default_style();
void validate(const StyleConfig& style);

// DOT digraph with one node per carry and one edge per transition, labeled
// "(r,w)", styled by read and colored by write. Styles wrap past the list
// ends; wrapping and dense graphs are flagged in comment lines.
std::string to_dot(const Transducer& t, const StyleConfig& style);

// Same graph with the loop's edges bold and every other edge grayed out.
std::string loop_overlay_dot(const Transducer& t, const Loop& loop,
                             const StyleConfig& style);

}  // namespace multrans
