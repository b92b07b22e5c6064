#include "multrans/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace multrans {

namespace {

void append_warnings(std::ostream& out, const Transducer& t,
                     const StyleConfig& style) {
    const nat b = t.spec().base;
    const nat m = t.spec().multiplier;
    if (b > style.dash_patterns.size())
        out << "  // warning: base " << b << " exceeds the "
            << style.dash_patterns.size() << " dash patterns; read styles wrap\n";
    if (b > style.color_palette.size())
        out << "  // warning: base " << b << " exceeds the "
            << style.color_palette.size() << " colors; write colors wrap\n";
    if (m >= style.readability_warning_threshold)
        out << "  // warning: " << m << " states with " << b
            << " edges each renders densely; readable below "
            << style.readability_warning_threshold << " states\n";
}

void append_dash(std::ostream& out, const DashPattern& dash) {
    out << "style=" << dash.dot_style;
    if (!dash.on_off.empty()) {
        out << ", dasharray=\"";
        for (std::size_t i = 0; i < dash.on_off.size(); ++i)
            out << (i == 0 ? "" : " ") << dash.on_off[i];
        out << "\"";
        if (dash.offset != 0)
            out << ", dashoffset=\"" << dash.offset << "\"";
    }
}

std::string render(const Transducer& t, const StyleConfig& style,
                   const Loop* overlay) {
    validate(style);
    const nat b = t.spec().base;
    const nat m = t.spec().multiplier;

    std::ostringstream out;
    out << "digraph multiplication_transducer {\n";
    append_warnings(out, t, style);
    for (nat c = 0; c < m; ++c)
        out << "  " << c << ";\n";
    for (nat c = 0; c < m; ++c) {
        for (nat r = 0; r < b; ++r) {
            const StepRecord s = t.transition(c, r);
            bool on_loop = false;
            if (overlay != nullptr) {
                for (std::size_t i = 0; i < overlay->reads.size(); ++i) {
                    if (overlay->carries[i] == c && overlay->reads[i] == r)
                        on_loop = true;
                }
            }
            out << "  " << c << " -> " << s.carry_out << " [label=\"(" << r
                << "," << s.write << ")\", ";
            if (on_loop) {
                out << "style=bold, color="
                    << style.color_palette[s.write % style.color_palette.size()];
            } else if (overlay != nullptr) {
                append_dash(out, style.dash_patterns[r % style.dash_patterns.size()]);
                out << ", color=gray";
            } else {
                append_dash(out, style.dash_patterns[r % style.dash_patterns.size()]);
                out << ", color="
                    << style.color_palette[s.write % style.color_palette.size()];
            }
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace

StyleConfig default_style() {
    StyleConfig style;
    style.dash_patterns = {
        {"solid", 0, {}},
        {"dotted", 0, {}},
        {"dashed", 0, {}},
        {"dashed", 0, {2, 7, 1, 14}},
        {"dashed", 0, {4, 2}},
        {"dashed", 0, {1, 3}},
        {"dashed", 2, {6, 2, 1, 2}},
        {"dashed", 0, {8, 1, 1, 1}},
    };
    style.color_palette = {"red",    "green", "blue",    "orange",
                           "purple", "brown", "magenta", "cyan"};
    return style;
}

void validate(const StyleConfig& style) {
    if (style.dash_patterns.empty())
        throw std::invalid_argument("style needs at least one dash pattern");
    if (style.color_palette.empty())
        throw std::invalid_argument("style needs at least one color");
    for (std::size_t i = 0; i < style.dash_patterns.size(); ++i) {
        for (std::size_t j = i + 1; j < style.dash_patterns.size(); ++j) {
            if (style.dash_patterns[i] == style.dash_patterns[j])
                throw std::invalid_argument("dash patterns must be distinct");
        }
    }
    for (std::size_t i = 0; i < style.color_palette.size(); ++i) {
        for (std::size_t j = i + 1; j < style.color_palette.size(); ++j) {
            if (style.color_palette[i] == style.color_palette[j])
                throw std::invalid_argument("colors must be distinct");
        }
    }
}

std::string to_dot(const Transducer& t, const StyleConfig& style) {
    return render(t, style, nullptr);
}

std::string loop_overlay_dot(const Transducer& t, const Loop& loop,
                             const StyleConfig& style) {
    if (!loop_valid(t, loop))
        throw std::domain_error("loop does not replay through this transducer");
    return render(t, style, &loop);
}

}  // namespace multrans
