#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sextic/potential.hpp"
#include "sextic/rng.hpp"
#include "test_util.hpp"

using namespace sextic;

namespace {

const Couplings kBottomless{-1.0, -1.0, 0.0, 1.21};
const Couplings kPositive{1.0, 1.0, 1.0, 1.0};

double max_vertex_residual(const Couplings& c, const ContourSet& set) {
    double worst = 0.0;
    for (const auto& line : set.polylines)
        for (const auto& p : line.points)
            worst = std::max(worst,
                             std::abs(evaluate(c, p[0], p[1]) - set.energy));
    return worst;
}

std::size_t total_points(const ContourSet& set) {
    std::size_t n = 0;
    for (const auto& line : set.polylines) n += line.points.size();
    return n;
}

// multiset comparison of vertex sets under a point transform
bool vertex_set_matches(const ContourSet& set, double (*tx)(double, double),
                        double (*ty)(double, double)) {
    std::vector<std::pair<double, double>> a, b;
    for (const auto& line : set.polylines)
        for (const auto& p : line.points) {
            a.emplace_back(p[0], p[1]);
            b.emplace_back(tx(p[0], p[1]), ty(p[0], p[1]));
        }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i].first - b[i].first) > 1e-12 ||
            std::abs(a[i].second - b[i].second) > 1e-12)
            return false;
    return true;
}

} // namespace

TEST_SUITE_BEGIN("potential");

TEST_CASE("evaluate known values") {
    CHECK(evaluate(kBottomless, 2.0, 0.0) == -4.0);
    CHECK(close_rel(evaluate(kBottomless, 1.0, 1.0), 0.42, 1e-14));
    CHECK(evaluate(kBottomless, 0.0, 0.0) == 0.0);
    CHECK(evaluate(kPositive, 0.0, 0.0) == 0.0);
}

TEST_CASE("bottom profile is exactly A x^2") {
    SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Couplings c{rng.uniform(-3, 3), rng.uniform(-3, 3),
                          rng.uniform(-3, 3), rng.uniform(0, 3)};
        const double x = rng.uniform(-20.0, 20.0);
        CHECK(evaluate(c, x, 0.0) == c.A * (x * x));
    }
}

TEST_CASE("symmetries of the evaluation") {
    SplitMix64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const double a = rng.uniform(-3, 3);
        const Couplings c{a, a, rng.uniform(-3, 3), rng.uniform(0, 3)};
        const double x = rng.uniform(-5, 5), y = rng.uniform(-5, 5);
        CHECK(evaluate(c, x, y) == evaluate(c, -x, y));
        CHECK(evaluate(c, x, y) == evaluate(c, x, -y));
        CHECK(evaluate(c, x, y) == evaluate(c, y, x)); // needs A == B
    }
}

TEST_CASE("tube halfwidth at the reference point") {
    const auto y = tube_halfwidth(kBottomless, -2.25, 2.0);
    REQUIRE(y.has_value());
    CHECK(close_rel(*y, 0.30501509301019334, 1e-12));
    CHECK(close_rel(evaluate(kBottomless, 2.0, *y), -2.25, 1e-9));
}

TEST_CASE("tube narrows monotonically along the axis") {
    double prev = 1e300;
    for (double x : {10.0, 100.0, 1000.0}) {
        const auto y = tube_halfwidth(kBottomless, -2.25, x);
        REQUIRE(y.has_value());
        CHECK(*y < prev);
        CHECK(*y * x < 0.95); // width * distance stays bounded
        CHECK(close_rel(evaluate(kBottomless, x, *y), -2.25, 1e-9));
        prev = *y;
    }
}

TEST_CASE("tube halfwidth shrinks as the section energy drops") {
    double prev = 1e300;
    for (double e : {-2.25, -6.25, -12.25, -20.25}) {
        const auto y = tube_halfwidth(kBottomless, e, 6.0);
        REQUIRE(y.has_value());
        CHECK(*y < prev);
        prev = *y;
    }
}

TEST_CASE("tube halfwidth absence and domain errors") {
    CHECK_FALSE(tube_halfwidth(kPositive, -1.0, 1.0).has_value());
    CHECK_THROWS_AS(tube_halfwidth({1, 1, 1, 0.0}, -1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(tube_halfwidth(kBottomless, -1.0, 0.0),
                    std::domain_error);
}

TEST_CASE("window validation") {
    CHECK_THROWS_AS((Window{1, -1, 0, 1, 10, 10}).validate(),
                    std::domain_error);
    CHECK_THROWS_AS((Window{-1, 1, 0, 1, 1, 10}).validate(),
                    std::domain_error);
    const Window w{-2, 2, -2, 2, 41, 41};
    const auto xs = w.x_axis();
    REQUIRE(xs.size() == 41);
    CHECK(xs.front() == -2.0);
    CHECK(xs.back() == 2.0);
    CHECK(xs[20] == 0.0);
    for (int i = 0; i < 20; ++i) CHECK(xs[40 - i] == -xs[i]);
}

TEST_CASE("section of the bottomless potential: residuals and symmetry") {
    const Window w{-10, 10, -10, 10, 401, 401};
    const ContourSet set = extract_section(kBottomless, -2.25, w);
    REQUIRE_FALSE(set.polylines.empty());
    CHECK(max_vertex_residual(kBottomless, set) <=
          1e-9 * std::max(1.0, 2.25));
    int open_count = 0;
    for (const auto& line : set.polylines)
        if (!line.closed) ++open_count;
    CHECK(open_count >= 4); // escape-tube mouths reach the window boundary
    CHECK(vertex_set_matches(
        set, [](double, double y) { return y; },
        [](double x, double) { return x; })); // x <-> y
    CHECK(vertex_set_matches(
        set, [](double x, double) { return -x; },
        [](double, double y) { return y; })); // x -> -x
    CHECK(vertex_set_matches(
        set, [](double x, double) { return x; },
        [](double, double y) { return -y; })); // y -> -y
}

TEST_CASE("section of a positive potential at negative energy is empty") {
    const Window w{-10, 10, -10, 10, 101, 101};
    const ContourSet set = extract_section(kPositive, -1.0, w);
    CHECK(set.polylines.empty());
}

TEST_CASE("closed contour of the harmonic bowl") {
    const Couplings harmonic{1.0, 1.0, 0.0, 0.0};
    const Window w{-2, 2, -2, 2, 101, 101};
    const ContourSet set = extract_section(harmonic, 1.0, w);
    REQUIRE(set.polylines.size() == 1);
    CHECK(set.polylines[0].closed);
    for (const auto& p : set.polylines[0].points)
        CHECK(close_abs(p[0] * p[0] + p[1] * p[1], 1.0, 1e-8));
}

TEST_CASE("parallel extraction matches the serial reference exactly") {
    const Window sym{-10, 10, -10, 10, 201, 201};
    const Window skew{-9.5, 3.25, -2.0, 8.0, 173, 89};
    for (const Window& w : {sym, skew}) {
        const auto gp = sample_grid(kBottomless, w);
        const auto gs = sample_grid_serial(kBottomless, w);
        CHECK(gp == gs);
        const ContourSet a = extract_section(kBottomless, -2.25, w);
        const ContourSet b = extract_section_serial(kBottomless, -2.25, w);
        REQUIRE(a.polylines.size() == b.polylines.size());
        for (std::size_t i = 0; i < a.polylines.size(); ++i) {
            CHECK(a.polylines[i].closed == b.polylines[i].closed);
            CHECK(a.polylines[i].points == b.polylines[i].points);
        }
    }
}

TEST_CASE("csv serialization round-trips at full precision") {
    const Window w{-10, 10, -10, 10, 101, 101};
    const ContourSet set = extract_section(kBottomless, -2.25, w);
    std::ostringstream os;
    write_contour_csv(set, os);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "polyline_id,point_index,x,y");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(is, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        const std::size_t id = std::stoul(line.substr(0, c1));
        const std::size_t idx = std::stoul(line.substr(c1 + 1, c2 - c1 - 1));
        const double x = std::strtod(line.c_str() + c2 + 1, nullptr);
        const double y = std::strtod(line.c_str() + c3 + 1, nullptr);
        REQUIRE(id < set.polylines.size());
        REQUIRE(idx < set.polylines[id].points.size());
        CHECK(x == set.polylines[id].points[idx][0]);
        CHECK(y == set.polylines[id].points[idx][1]);
        ++rows;
    }
    CHECK(rows == total_points(set));
}

TEST_SUITE_END();
