#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "pdrecon/geometry.hpp"
#include "test_support.hpp"

using namespace pdrecon;
using namespace testsupport;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return errc::ok;
}

} // namespace

TEST_CASE("vertex_height is the left-to-right dot product") {
    CHECK(vertex_height(normalized2(0, 1), point{0.25, 0.0}) == 0.0);
    CHECK(vertex_height(normalized2(1, 0), point{0.0, 0.0}) == 0.0);

    const direction s = normalized2(-0.8, 0.6);
    const point v{1.0, 1.0};
    const double h = vertex_height(s, v);
    CHECK(h == doctest::Approx(-0.2).epsilon(1e-12));
    // Second implementation summing in reverse coordinate order.
    double reversed = 0.0;
    for (int i = 1; i >= 0; --i) reversed += v[i] * s[i];
    CHECK(h == doctest::Approx(reversed).epsilon(1e-15));

    CHECK(code_of([] { vertex_height(normalized2(1, 0), point{1.0, 2.0, 3.0}); }) ==
          errc::dimension_mismatch);
}

TEST_CASE("vertex_height antisymmetry under direction flip") {
    rng64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const direction s = random_direction(rng, 2 + static_cast<int>(i % 3));
        point v(s.dim());
        for (double& c : v) c = 4.0 * rng.next_double() - 2.0;
        CHECK(vertex_height(s, v) == -vertex_height(-s, v));
    }
}

TEST_CASE("simplex_height takes the max endpoint height") {
    const embedded_graph g = reference_graph();
    CHECK(simplex_height(normalized2(0, 1), g, edge{1, 3}) == 1.0); // ((0,-1),(1,1))
    CHECK(simplex_height(normalized2(1, 0), g, edge{0, 1}) == 0.0); // ((-1,2),(0,-1))
    const direction s = normalized2(0.3, -0.7);
    for (int i = 0; i < g.num_vertices(); ++i)
        CHECK(simplex_height(s, g, i) == vertex_height(s, g.vertex(i)));
    for (const edge& e : g.edges()) {
        CHECK(simplex_height(s, g, e) >= simplex_height(s, g, static_cast<int>(e.u)));
        CHECK(simplex_height(s, g, e) >= simplex_height(s, g, static_cast<int>(e.v)));
    }
    CHECK(code_of([&] { simplex_height(s, g, 99); }) == errc::index_out_of_range);
}

TEST_CASE("perpendicular_2d is the normalized counter-clockwise perpendicular") {
    const direction a = perpendicular_2d(std::array<double, 2>{2.0, 0.5});
    CHECK(a[0] == doctest::Approx(-0.243).epsilon(1e-3));
    CHECK(a[1] == doctest::Approx(0.970).epsilon(1e-3));

    const direction b = perpendicular_2d(std::array<double, 2>{1.0, 0.0});
    CHECK(b[0] == doctest::Approx(0.0));
    CHECK(b[1] == doctest::Approx(1.0));

    const direction c = perpendicular_2d(std::array<double, 2>{0.75, 1.0});
    CHECK(c[0] == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(0.6).epsilon(1e-12));

    CHECK(code_of([] { perpendicular_2d(std::array<double, 2>{0.0, 0.0}); }) == errc::zero_vector);

    rng64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const std::array<double, 2> vec{4 * rng.next_double() - 2, 4 * rng.next_double() - 2};
        if (vec[0] == 0 && vec[1] == 0) continue;
        const direction p = perpendicular_2d(vec);
        CHECK(std::abs(p[0] * vec[0] + p[1] * vec[1]) <= 1e-12 * std::hypot(vec[0], vec[1]));
        CHECK(std::abs(std::hypot(p[0], p[1]) - 1.0) <= 1e-12);
    }
}

TEST_CASE("rotate_2d is the standard counter-clockwise rotation") {
    const direction s = normalized2(-0.8, 0.6);
    // Tilting the perpendicular of the reference edge by +/- the bow-tie
    // half-angle 0.09 reproduces the reference test directions.
    const direction plus = rotate_2d(s, 0.09);
    CHECK(plus[0] == doctest::Approx(-0.851).epsilon(2e-3));
    CHECK(plus[1] == doctest::Approx(0.526).epsilon(2e-3));
    const direction minus = rotate_2d(s, -0.09);
    CHECK(minus[0] == doctest::Approx(-0.743).epsilon(2e-3));
    CHECK(minus[1] == doctest::Approx(0.669).epsilon(2e-3));

    const direction t = rotate_2d(normalized2(0.848, 0.530), 0.09);
    CHECK(t[0] == doctest::Approx(0.797).epsilon(2e-3));
    CHECK(t[1] == doctest::Approx(0.604).epsilon(2e-3));

    const direction id = rotate_2d(s, 0.0);
    CHECK(id[0] == s[0]);
    CHECK(id[1] == s[1]);

    rng64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const direction r = random_direction(rng, 2);
        const double angle = 6.2 * rng.next_double() - 3.1;
        const direction back = rotate_2d(rotate_2d(r, angle), -angle);
        CHECK(back[0] == doctest::Approx(r[0]).epsilon(1e-12));
        CHECK(back[1] == doctest::Approx(r[1]).epsilon(1e-12));
    }

    CHECK(code_of([] { rotate_2d(direction::axis(0, 3), 0.5); }) == errc::dimension_mismatch);
}

TEST_CASE("direction enforces the unit-norm invariant") {
    CHECK(code_of([] { direction d({0.5, 0.5}); }) == errc::invalid_argument);
    CHECK(code_of([] { direction d({1.0, 0.0}); }) == errc::ok);
    const direction n = direction::normalized(std::array<double, 3>{3.0, 4.0, 12.0});
    CHECK(n[0] == doctest::Approx(3.0 / 13.0).epsilon(1e-15));
    CHECK(code_of([] { direction::normalized(std::array<double, 2>{0.0, 0.0}); }) ==
          errc::zero_vector);
}

TEST_CASE("check_general_position accepts the reference graph") {
    CHECK(check_general_position(reference_graph()).ok());
}

TEST_CASE("check_general_position reports duplicate coordinates") {
    const embedded_graph g(2, {0.0, 0.0, 0.0, 1.0}, {});
    const auto report = check_general_position(g);
    REQUIRE(!report.ok());
    CHECK(report.violations.size() == 1);
    CHECK(report.violations[0].what == gp_violation::kind::duplicate_coordinate);
    CHECK(report.violations[0].axis == 0);
}

TEST_CASE("check_general_position reports collinear triples") {
    const embedded_graph g(2, {0.0, 0.0, 1.0, 1.0, 2.0, 2.0}, {});
    const auto report = check_general_position(g);
    REQUIRE(!report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        found |= v.what == gp_violation::kind::collinear_triple;
    CHECK(found);
}

TEST_CASE("check_general_position reports crossing edge interiors") {
    const embedded_graph g(2, {0.0, 0.0, 1.0, 1.0, 0.1, 0.9, 0.9, 0.15}, {{0, 1}, {2, 3}});
    const auto report = check_general_position(g);
    bool found = false;
    for (const auto& v : report.violations) found |= v.what == gp_violation::kind::edge_crossing;
    CHECK(found);
    CHECK(check_general_position(g, /*check_crossings=*/false).ok());
}

TEST_CASE("min_pairwise_angle matches the reference value and brute force") {
    const auto pts = reference_graph().vertex_points();
    CHECK(min_pairwise_angle(pts) == doctest::Approx(0.180).epsilon(2e-2));
    CHECK(min_pairwise_angle(pts) == doctest::Approx(0.1798534997924781).epsilon(1e-12));

    const std::vector<point> equilateral{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2}};
    CHECK(min_pairwise_angle(equilateral) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-12));

    rng64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<point> random_pts;
        for (int i = 0; i < 10; ++i)
            random_pts.push_back(point{rng.next_double(), rng.next_double()});
        CHECK(min_pairwise_angle(random_pts) == brute_min_line_angle(random_pts));
    }

    CHECK(code_of([] { min_pairwise_angle(std::vector<point>{{0, 0}, {1, 1}}); }) ==
          errc::too_few_points);
}

TEST_CASE("graph construction rejects structural violations") {
    CHECK(code_of([] { embedded_graph g(2, {0, 0, 0, 0}, {}); }) == errc::invalid_argument);
    CHECK(code_of([] { embedded_graph g(2, {0, 0, 1, 1}, {{0, 0}}); }) == errc::invalid_argument);
    CHECK(code_of([] { embedded_graph g(2, {0, 0, 1, 1}, {{0, 1}, {1, 0}}); }) ==
          errc::invalid_argument);
    CHECK(code_of([] { embedded_graph g(2, {0, 0, 1, 1}, {{0, 7}}); }) == errc::index_out_of_range);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(code_of([&] { embedded_graph g(2, {0, 0, 1, nan}, {}); }) == errc::invalid_argument);
}
