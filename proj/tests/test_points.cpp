#include <catch_amalgamated.hpp>

#include <random>

#include "mpacm/points.hpp"

using namespace mpacm;

namespace {
PointSet grid_subset(unsigned mask) {
    std::vector<Point> pts;
    for (int cell = 0; cell < 9; ++cell)
        if (mask & (1u << cell))
            pts.push_back(make_point({{Rat(1), Rat(cell / 3)}, {Rat(1), Rat(cell % 3)}}));
    return make_point_set({1, 1}, std::move(pts));
}
}  // namespace

TEST_CASE("normalization is idempotent and scale invariant") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::vector<Rat>> coords(2);
        for (auto& f : coords) {
            f = {Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng))};
            if (is_zero(f[0]) && is_zero(f[1]) && is_zero(f[2])) f[0] = Rat(1);
        }
        Point p = make_point(coords);
        Point again = p;
        again.normalize();
        REQUIRE(p == again);
        // scaling each factor by a nonzero rational yields the same point
        auto scaled = coords;
        for (auto& f : scaled)
            for (auto& c : f) c *= rat(-3, 7);
        REQUIRE(make_point(scaled) == p);
    }
    REQUIRE_THROWS_AS(make_point({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}), std::invalid_argument);
}

TEST_CASE("point-set validation catches duplicates and shape errors") {
    Point a = make_point({{Rat(1), Rat(0)}, {Rat(1), Rat(0)}});
    Point b = make_point({{Rat(2), Rat(0)}, {Rat(3), Rat(0)}});  // same point after scaling
    REQUIRE_THROWS_AS(make_point_set({1, 1}, {a, b}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_point_set({1, 2}, {a}), std::invalid_argument);
}

TEST_CASE("projection returns distinct factor coordinates in first-appearance order") {
    PointSet x = grid_subset(0b000'001'111u);  // row 0 full, plus cell (1,0)
    REQUIRE(projection(x, 1).size() == 2);
    REQUIRE(projection(x, 2).size() == 3);
    REQUIRE_THROWS_AS(projection(x, 3), std::invalid_argument);
}

TEST_CASE("completion property and chain poset agree on every 3x3 grid subset") {
    for (unsigned mask = 1; mask < (1u << 9); ++mask) {
        PointSet x = grid_subset(mask);
        bool star = has_property_star(x).satisfied;
        bool chain = sx_poset(x).totally_ordered;
        INFO("mask " << mask);
        REQUIRE(star == chain);
        if (!star) {
            auto [a, b] = has_property_star(x).witness;
            REQUIRE(a < b);
            REQUIRE(star_witnesses(x).size() >= 1);
        }
    }
}

TEST_CASE("partition-shaped sets satisfy the completion property") {
    std::vector<std::vector<Rat>> ps, qs;
    for (long i = 1; i <= 4; ++i) ps.push_back({Rat(1), Rat(i)});
    for (long j = 1; j <= 5; ++j) qs.push_back({Rat(1), Rat(j), Rat(j * j)});
    PointSet x = ferrers_point_set({5, 3, 2, 2}, ps, qs);
    REQUIRE(x.size() == 12);
    REQUIRE(x.dims == MultiDegree{1, 2});
    REQUIRE(has_property_star(x).satisfied);
    REQUIRE(sx_poset(x).totally_ordered);
    REQUIRE_THROWS_AS(ferrers_point_set({2, 3}, ps, qs), std::invalid_argument);
    REQUIRE_THROWS_AS(ferrers_point_set({2, 0}, ps, qs), std::invalid_argument);
}

TEST_CASE("embedding pads coordinates and pins the spare factors") {
    std::vector<Point> pts = {make_point({{Rat(1), Rat(2), Rat(3)}, {Rat(1), Rat(4), Rat(5)}}),
                              make_point({{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(2)}})};
    PointSet x = make_point_set({2, 2}, pts);

    PointSet same = embed_points(x, {2, 2}, 1, 2);
    REQUIRE(same.points == x.points);

    PointSet big = embed_points(x, {1, 2, 3}, 2, 3);
    REQUIRE(big.size() == x.size());
    for (std::size_t t = 0; t < big.size(); ++t) {
        REQUIRE(big.points[t].coords[0] == std::vector<Rat>{Rat(1), Rat(0)});
        REQUIRE(big.points[t].coords[2].size() == 4);
        REQUIRE(is_zero(big.points[t].coords[2][3]));
    }
    REQUIRE_THROWS_AS(embed_points(x, {1, 2, 2}, 1, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(embed_points(x, {2, 2, 2}, 2, 2), std::invalid_argument);
}

TEST_CASE("general-position verifier") {
    std::vector<std::vector<Rat>> cubic;
    for (long i = 1; i <= 6; ++i) cubic.push_back({Rat(1), Rat(i), Rat(i * i * i)});
    REQUIRE(verify_general_position(cubic));

    // three collinear points fail
    auto collinear = cubic;
    collinear[2] = {Rat(1), Rat(3), Rat(0)};
    collinear[0] = {Rat(1), Rat(1), Rat(0)};
    collinear[1] = {Rat(1), Rat(2), Rat(0)};
    REQUIRE_FALSE(verify_general_position(collinear));

    // six points on the conic y z = x^2 fail the conic test
    std::vector<std::vector<Rat>> conic;
    for (long i = 1; i <= 6; ++i) conic.push_back({Rat(i), Rat(1), Rat(i * i)});
    REQUIRE_FALSE(verify_general_position(conic));
}
