#include "doctest.h"

#include <cmath>

#include "diamond/draw.hpp"
#include "diamond/generators.hpp"

using namespace diamond;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Pull the numeric attributes out of every occurrence of `tag` in index order.
std::vector<std::vector<double>> parse_elements(const std::string& svg, const std::string& tag,
                                                const std::vector<std::string>& attrs) {
    std::vector<std::vector<double>> out;
    std::size_t pos = 0;
    while ((pos = svg.find("<" + tag + " ", pos)) != std::string::npos) {
        std::size_t end = svg.find("/>", pos);
        REQUIRE(end != std::string::npos);
        std::string elem = svg.substr(pos, end - pos);
        std::vector<double> vals;
        for (const auto& a : attrs) {
            std::size_t ap = elem.find(a + "=\"");
            REQUIRE(ap != std::string::npos);
            vals.push_back(std::stod(elem.substr(ap + a.size() + 2)));
        }
        out.push_back(vals);
        pos = end;
    }
    return out;
}

}  // namespace

TEST_CASE("project_to_plane formulas") {
    auto o = project_to_plane({0, 0, 0});
    CHECK(o.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(o.y == doctest::Approx(0.0).epsilon(1e-15));

    auto e1 = project_to_plane({1, 0, 0});
    CHECK(e1.x == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(e1.y == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-15));

    // the three unit steps: equal length sqrt(2/3), pairwise 120 degrees
    PlanarPoint steps[3] = {project_to_plane({1, 0, 0}), project_to_plane({0, 1, 0}),
                            project_to_plane({0, 0, 1})};
    const double want = std::sqrt(2.0 / 3.0);
    for (const auto& p : steps)
        CHECK(std::hypot(p.x, p.y) == doctest::Approx(want).epsilon(1e-12));
    for (int i = 0; i < 3; ++i) {
        const auto& a = steps[i];
        const auto& b = steps[(i + 1) % 3];
        double cosang = (a.x * b.x + a.y * b.y) / (std::hypot(a.x, a.y) * std::hypot(b.x, b.y));
        CHECK(cosang == doctest::Approx(-0.5).epsilon(1e-12));
    }

    CHECK_THROWS_AS(project_to_plane({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(project_to_plane({1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("emit_svg draws C6 as a regular hexagon") {
    auto c6 = generate_named("c6");
    auto e = embed_minimum(c6);
    DrawingConfig cfg;
    auto svg = emit_svg(c6, e, cfg);

    auto lines = parse_elements(svg, "line", {"x1", "y1", "x2", "y2"});
    auto circles = parse_elements(svg, "circle", {"cx", "cy", "r"});
    CHECK(lines.size() == 6);
    CHECK(circles.size() == 6);

    const double want = cfg.scale * std::sqrt(2.0 / 3.0);
    for (const auto& l : lines) {
        double len = std::hypot(l[2] - l[0], l[3] - l[1]);
        CHECK(std::abs(len - want) / want < 1e-9);
    }

    // deterministic byte-for-byte
    CHECK(svg == emit_svg(c6, embed_minimum(c6), cfg));
}

TEST_CASE("emit_svg draws padded K2") {
    auto k2 = generate_named("p_2");
    auto e = pad_embedding(embed_minimum(k2), 2);
    auto svg = emit_svg(k2, e);
    CHECK(parse_elements(svg, "line", {"x1"}).size() == 1);
    CHECK(parse_elements(svg, "circle", {"cx"}).size() == 2);
}

TEST_CASE("emit_svg rejects other dimensions and bad embeddings") {
    auto desargues = generate_named("desargues");
    auto e5 = embed_minimum(desargues);  // dimension 4
    CHECK_THROWS_AS(emit_svg(desargues, e5), UnsupportedDimension);

    auto k2 = generate_named("p_2");
    CHECK_THROWS_AS(emit_svg(k2, embed_minimum(k2)), UnsupportedDimension);  // dimension 0

    auto c6 = generate_named("c6");
    auto broken = embed_minimum(c6);
    broken.coords[0][0] += 3;
    CHECK_THROWS_AS(emit_svg(c6, broken), std::invalid_argument);

    DrawingConfig bad;
    bad.scale = 0;
    CHECK_THROWS_AS(emit_svg(c6, embed_minimum(c6), bad), std::invalid_argument);
}

TEST_CASE("emit_svg respects the drawing config") {
    auto c6 = generate_named("c6");
    auto e = embed_minimum(c6);
    DrawingConfig cfg;
    cfg.scale = 40;
    cfg.vertex_radius = 7.5;
    auto svg = emit_svg(c6, e, cfg);
    auto circles = parse_elements(svg, "circle", {"cx", "cy", "r"});
    for (const auto& c : circles) CHECK(c[2] == doctest::Approx(7.5));
    auto lines = parse_elements(svg, "line", {"x1", "y1", "x2", "y2"});
    const double want = 40 * std::sqrt(2.0 / 3.0);
    for (const auto& l : lines)
        CHECK(std::hypot(l[2] - l[0], l[3] - l[1]) == doctest::Approx(want).epsilon(1e-9));
}
