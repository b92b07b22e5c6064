#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multrans/render.hpp"

using namespace multrans;

namespace {

struct ParsedEdge {
    nat tail = 0;
    nat head = 0;
    nat read = 0;
    nat write = 0;
    std::string attrs;
};

// Pulls node ids and edge lines back out of the emitted text; enough of a
// DOT reader for the fixed shape this module writes.
struct ParsedDot {
    std::vector<nat> nodes;
    std::vector<ParsedEdge> edges;
    std::vector<std::string> warnings;
};

ParsedDot parse_dot(const std::string& text) {
    ParsedDot parsed;
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "digraph multiplication_transducer {");
    while (std::getline(in, line)) {
        if (line == "}")
            break;
        REQUIRE(line.substr(0, 2) == "  ");
        line = line.substr(2);
        if (line.substr(0, 2) == "//") {
            parsed.warnings.push_back(line);
            continue;
        }
        const auto arrow = line.find(" -> ");
        if (arrow == std::string::npos) {
            REQUIRE(line.back() == ';');
            parsed.nodes.push_back(std::stoull(line.substr(0, line.size() - 1)));
            continue;
        }
        ParsedEdge e;
        e.tail = std::stoull(line.substr(0, arrow));
        const auto attr_start = line.find(" [label=\"(", arrow);
        REQUIRE(attr_start != std::string::npos);
        e.head = std::stoull(line.substr(arrow + 4, attr_start - arrow - 4));
        auto cursor = attr_start + 10;
        const auto comma = line.find(',', cursor);
        e.read = std::stoull(line.substr(cursor, comma - cursor));
        const auto close = line.find(")\"", comma);
        e.write = std::stoull(line.substr(comma + 1, close - comma - 1));
        REQUIRE(line.substr(line.size() - 2) == "];");
        e.attrs = line.substr(close + 4, line.size() - 2 - (close + 4));
        parsed.edges.push_back(e);
    }
    return parsed;
}

}  // namespace

TEST_CASE("default style is internally distinct") {
    CHECK_NOTHROW(validate(default_style()));
    CHECK(default_style().dash_patterns.size() == 8);
    CHECK(default_style().color_palette.size() == 8);
    CHECK(default_style().readability_warning_threshold == 8);
}

TEST_CASE("style validation rejects duplicates and empty lists") {
    StyleConfig dup_color = default_style();
    dup_color.color_palette[3] = dup_color.color_palette[0];
    CHECK_THROWS_AS(validate(dup_color), std::invalid_argument);

    StyleConfig dup_dash = default_style();
    dup_dash.dash_patterns[5] = dup_dash.dash_patterns[2];
    CHECK_THROWS_AS(validate(dup_dash), std::invalid_argument);

    StyleConfig empty = default_style();
    empty.dash_patterns.clear();
    CHECK_THROWS_AS(validate(empty), std::invalid_argument);
}

TEST_CASE("dot export of the four-state example") {
    const Transducer t = build(TransducerSpec{3, 4});
    const std::string text = to_dot(t, default_style());
    const ParsedDot parsed = parse_dot(text);

    CHECK(parsed.nodes == std::vector<nat>{0, 1, 2, 3});
    CHECK(parsed.edges.size() == 12);
    CHECK(parsed.warnings.empty());

    bool found_example = false;
    for (const ParsedEdge& e : parsed.edges) {
        const StepRecord s = t.transition(e.tail, e.read);
        CHECK(s.carry_out == e.head);
        CHECK(s.write == e.write);
        if (e.tail == 0 && e.head == 2 && e.read == 2 && e.write == 2)
            found_example = true;
    }
    CHECK(found_example);
    CHECK(text.find("0 -> 2 [label=\"(2,2)\"") != std::string::npos);
}

TEST_CASE("dot export is byte deterministic") {
    const Transducer t = build(TransducerSpec{3, 4});
    CHECK(to_dot(t, default_style()) == to_dot(t, default_style()));

    const Transducer big = build(TransducerSpec{7, 10});
    CHECK(to_dot(big, default_style()) == to_dot(big, default_style()));
}

TEST_CASE("smallest transducer renders two nodes and four edges") {
    const ParsedDot parsed =
        parse_dot(to_dot(build(TransducerSpec{2, 2}), default_style()));
    CHECK(parsed.nodes.size() == 2);
    CHECK(parsed.edges.size() == 4);
}

TEST_CASE("dense transducers carry a readability warning") {
    const Transducer t = build(TransducerSpec{7, 10});
    const ParsedDot parsed = parse_dot(to_dot(t, default_style()));
    CHECK(parsed.nodes.size() == 10);
    CHECK(parsed.edges.size() == 70);
    REQUIRE(!parsed.warnings.empty());
    bool mentions_density = false;
    for (const std::string& w : parsed.warnings) {
        if (w.find("renders densely") != std::string::npos)
            mentions_density = true;
    }
    CHECK(mentions_density);
}

TEST_CASE("styles wrap with a warning when the base is large") {
    const Transducer t = build(TransducerSpec{12, 2});
    const ParsedDot parsed = parse_dot(to_dot(t, default_style()));
    CHECK(parsed.edges.size() == 24);
    REQUIRE(parsed.warnings.size() == 2);
    CHECK(parsed.warnings[0].find("dash patterns") != std::string::npos);
    CHECK(parsed.warnings[1].find("colors") != std::string::npos);

    // read 9 wraps onto the second pattern (dotted), like read 1
    bool read1_dotted = false;
    bool read9_dotted = false;
    for (const ParsedEdge& e : parsed.edges) {
        if (e.read == 1 && e.attrs.find("style=dotted") != std::string::npos)
            read1_dotted = true;
        if (e.read == 9 && e.attrs.find("style=dotted") != std::string::npos)
            read9_dotted = true;
    }
    CHECK(read1_dotted);
    CHECK(read9_dotted);
}

TEST_CASE("custom dash sequences serialize their points") {
    const Transducer t = build(TransducerSpec{5, 3});
    const std::string text = to_dot(t, default_style());
    CHECK(text.find("dasharray=\"2 7 1 14\"") != std::string::npos);
}

TEST_CASE("loop overlay bolds exactly the loop edges") {
    const Transducer t = build(TransducerSpec{3, 10});
    const Loop loop = shortest_zero_loop_bfs(t);
    const std::string text = loop_overlay_dot(t, loop, default_style());
    const ParsedDot parsed = parse_dot(text);
    CHECK(parsed.edges.size() == 30);

    nat bold = 0;
    for (const ParsedEdge& e : parsed.edges) {
        const bool is_bold = e.attrs.find("style=bold") != std::string::npos;
        const bool on_loop = (e.tail == 0 && e.head == 3 && e.read == 1) ||
                             (e.tail == 3 && e.head == 1 && e.read == 0) ||
                             (e.tail == 1 && e.head == 0 && e.read == 0);
        CHECK(is_bold == on_loop);
        if (is_bold)
            ++bold;
        else
            CHECK(e.attrs.find("color=gray") != std::string::npos);
    }
    CHECK(bold == 3);
}

TEST_CASE("single step loop overlay") {
    const Transducer t = build(TransducerSpec{3, 2});
    const Loop loop = shortest_zero_loop_bfs(t);
    REQUIRE(loop.carries == std::vector<nat>{0, 0});
    const std::string text = loop_overlay_dot(t, loop, default_style());
    CHECK(text.find("0 -> 0 [label=\"(1,2)\", style=bold") != std::string::npos);
}

TEST_CASE("foreign loops are rejected") {
    const Transducer t = build(TransducerSpec{3, 10});
    const Loop foreign = shortest_zero_loop_bfs(build(TransducerSpec{2, 8}));
    CHECK_THROWS_AS(loop_overlay_dot(t, foreign, default_style()),
                    std::domain_error);
}
