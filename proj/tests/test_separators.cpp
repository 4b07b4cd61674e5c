#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mpacm/corpus.hpp"
#include "mpacm/separators.hpp"

using namespace mpacm;

namespace {

PointSet random_p1p1(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> dist(0, 3);
    std::set<std::pair<int, int>> seen;
    while (seen.size() < n) seen.insert({dist(rng), dist(rng)});
    std::vector<Point> pts;
    for (auto [a, b] : seen) pts.push_back(make_point({{Rat(1), Rat(a)}, {Rat(1), Rat(b)}}));
    return make_point_set({1, 1}, std::move(pts));
}

Rat form_value(const SeparatorForm<Rat>& f, const PointSet& x, std::size_t p) {
    auto mons = monomials_of_degree(f.degree, x.dims);
    Rat v(0);
    for (std::size_t t = 0; t < mons.size(); ++t)
        v += f.coeffs[t] * evaluate_monomial<Rat>(mons[t], x.points[p]);
    return v;
}

}  // namespace

TEST_CASE("removing a point drops the Hilbert function by at most one") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 20; ++t) {
        PointSet x = random_p1p1(rng, 2 + t % 6);
        for (std::size_t p = 0; p < x.size(); ++p) {
            // drop_locus validates the 0/-1 dichotomy internally (hard failure)
            UpSet s = drop_locus<Rat>(x, p);
            REQUIRE_FALSE(s.empty());
        }
    }
}

TEST_CASE("two-point drop loci") {
    // shared first coordinate: only the second factor separates
    PointSet shared = make_point_set(
        {1, 1}, {make_point({{Rat(1), Rat(0)}, {Rat(1), Rat(0)}}),
                 make_point({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}})});
    REQUIRE(drop_locus<Rat>(shared, 0).generators == std::vector<MultiDegree>{{0, 1}});

    PaperExample two = build_example("two-noncollinear");
    auto gens = drop_locus<Rat>(two.points, 0).generators;
    REQUIRE(gens == std::vector<MultiDegree>{{0, 1}, {1, 0}});
}

TEST_CASE("separator degrees of the 18-point configuration") {
    PaperExample ex = build_example("example4");
    auto deg = [&](const char* label) {
        return separator_degrees<Rat>(ex.points, label_index(ex, label)).degrees;
    };
    REQUIRE(deg("Q_{5,2}") == std::vector<MultiDegree>{{2, 2}});
    REQUIRE(deg("Q_{6,1}") == std::vector<MultiDegree>{{2, 2}});
    for (const char* l : {"Q_{1,1}", "Q_{2,2}", "Q_{3,1}", "Q_{4,2}"})
        REQUIRE(deg(l) == std::vector<MultiDegree>{{2, 1}});
    for (const char* l : {"Q_{5,3}", "Q_{5,6}", "Q_{6,4}", "Q_{6,6}"})
        REQUIRE(deg(l) == std::vector<MultiDegree>{{1, 2}});
}

TEST_CASE("minimal separators evaluate to one at their point and zero elsewhere") {
    PaperExample ex = build_example("example4");
    std::size_t p = label_index(ex, "Q_{5,2}");
    SeparatorForm<Rat> f = minimal_separator<Rat>(ex.points, p, {2, 2});
    REQUIRE(form_value(f, ex.points, p) == Rat(1));
    for (std::size_t q = 0; q < ex.points.size(); ++q)
        if (q != p) REQUIRE(is_zero(form_value(f, ex.points, q)));
    REQUIRE_THROWS_AS(minimal_separator<Rat>(ex.points, p, MultiDegree{1, 1}),
                      std::invalid_argument);
}

TEST_CASE("minimal separators are unique modulo the ideal slice") {
    PaperExample ex = build_example("example4");
    std::size_t p = label_index(ex, "Q_{6,1}");
    SeparatorForm<Rat> f = minimal_separator<Rat>(ex.points, p, {2, 2});

    // second extraction with the other points permuted
    PointSet perm;
    perm.dims = ex.points.dims;
    perm.points.push_back(ex.points.points[p]);
    for (std::size_t q = ex.points.size(); q-- > 0;)
        if (q != p) perm.points.push_back(ex.points.points[q]);
    SeparatorForm<Rat> g = minimal_separator<Rat>(perm, 0, {2, 2});

    std::vector<Rat> diff(f.coeffs.size());
    for (std::size_t t = 0; t < diff.size(); ++t) diff[t] = f.coeffs[t] - g.coeffs[t];
    auto ix = ideal_slice<Rat>(ex.points, {2, 2});
    REQUIRE(in_span(diff, ix.basis));
}

TEST_CASE("separator dimension bump") {
    SECTION("extracted separator satisfies it") {
        PaperExample ex = build_example("example4");
        std::size_t p = label_index(ex, "Q_{1,1}");
        SeparatorForm<Rat> f = minimal_separator<Rat>(ex.points, p, {2, 1});
        REQUIRE(check_colon_property<Rat>(ex.points, f));
    }
    SECTION("a form vanishing on all of X fails it") {
        PaperExample diag = build_example("three-collinear-diagonal");
        auto ix = ideal_slice<Rat>(diag.points, {1, 1});
        SeparatorForm<Rat> fake{{1, 1}, ix.basis.at(0)};
        REQUIRE_FALSE(check_colon_property<Rat>(diag.points, fake));
    }
    SECTION("corner of a small partition shape") {
        std::vector<std::vector<Rat>> ps = {{Rat(1), Rat(1)}, {Rat(1), Rat(2)}};
        std::vector<std::vector<Rat>> qs = {{Rat(1), Rat(1)}, {Rat(1), Rat(2)}};
        PointSet x = ferrers_point_set({2, 1}, ps, qs);
        std::size_t corner = 1;  // P_1 x Q_2
        SeparatorDegreeSet s = separator_degrees<Rat>(x, corner);
        REQUIRE(s.degrees.size() == 1);
        SeparatorForm<Rat> f = minimal_separator<Rat>(x, corner, s.degrees[0]);
        REQUIRE(check_colon_property<Rat>(x, f));
    }
}

TEST_CASE("uniqueness of separator degrees across verdicts") {
    REQUIRE(unique_degree_test<Rat>(build_example("example4").points).all_unique);
    REQUIRE(unique_degree_test<Rat>(build_example("example2").points).all_unique);
    UniqueDegreeVerdict v = unique_degree_test<Rat>(build_example("two-noncollinear").points);
    REQUIRE_FALSE(v.all_unique);
    REQUIRE(v.point == 0);
    REQUIRE(v.degrees == std::vector<MultiDegree>{{0, 1}, {1, 0}});
}

TEST_CASE("random extracted separators behave like separators") {
    std::mt19937_64 rng(62);
    int done = 0;
    while (done < 20) {
        PointSet x = random_p1p1(rng, 3 + done % 5);
        std::size_t p = rng() % x.size();
        SeparatorDegreeSet s = separator_degrees<Rat>(x, p);
        for (const auto& alpha : s.degrees) {
            SeparatorForm<Rat> f = minimal_separator<Rat>(x, p, alpha);
            REQUIRE(form_value(f, x, p) == Rat(1));
            for (std::size_t q = 0; q < x.size(); ++q)
                if (q != p) REQUIRE(is_zero(form_value(f, x, q)));
            REQUIRE(check_colon_property<Rat>(x, f));
        }
        ++done;
    }
}
