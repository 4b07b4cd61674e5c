#include <catch_amalgamated.hpp>

#include "mpacm/corpus.hpp"
#include "mpacm/io.hpp"

using namespace mpacm;

TEST_CASE("point-set JSON round-trips on the catalog") {
    for (const auto& name : example_names()) {
        PaperExample ex = build_example(name);
        json j = point_set_to_json(ex.points);
        PointSet back = point_set_from_json(j);
        INFO(name);
        REQUIRE(back.dims == ex.points.dims);
        REQUIRE(back.points == ex.points.points);
        // idempotent: serializing again yields the same document
        REQUIRE(point_set_to_json(back) == j);
    }
}

TEST_CASE("rational coordinate strings parse and normalize") {
    json j = {{"dims", {1, 1}},
              {"points", {{{"1/2", "1/4"}, {3, "6/4"}}, {{1, 1}, {1, 2}}}}};
    PointSet x = point_set_from_json(j);
    // [1/2 : 1/4] normalizes to [1 : 1/2], [3 : 3/2] to [1 : 1/2]
    REQUIRE(x.points[0].coords[0] == std::vector<Rat>{Rat(1), rat(1, 2)});
    REQUIRE(x.points[0].coords[1] == std::vector<Rat>{Rat(1), rat(1, 2)});
    // round-trip uses strings only for non-integers
    json back = point_set_to_json(x);
    REQUIRE(back["points"][0][0][0] == json(1));
    REQUIRE(back["points"][0][0][1] == json("1/2"));
}

TEST_CASE("malformed point-set documents are rejected") {
    REQUIRE_THROWS_AS(point_set_from_json(json::object()), std::invalid_argument);
    json zero = {{"dims", {1, 1}}, {"points", {{{0, 0}, {1, 1}}}}};
    REQUIRE_THROWS_AS(point_set_from_json(zero), std::invalid_argument);
    json badstr = {{"dims", {1, 1}}, {"points", {{{"x", 1}, {1, 1}}}}};
    REQUIRE_THROWS_AS(point_set_from_json(badstr), std::invalid_argument);
    json dup = {{"dims", {1, 1}}, {"points", {{{1, 2}, {1, 3}}, {{2, 4}, {2, 6}}}}};
    REQUIRE_THROWS_AS(point_set_from_json(dup), std::invalid_argument);
    json shape = {{"dims", {1, 2}}, {"points", {{{1, 2}, {1, 3}}}}};
    REQUIRE_THROWS_AS(point_set_from_json(shape), std::invalid_argument);
}

TEST_CASE("text rendering matches the frozen snapshot") {
    PaperExample diag = build_example("three-collinear-diagonal");
    HilbertTableOptions opt;
    opt.box = MultiDegree{3, 3};
    HilbertTable h = hilbert_table<Rat>(diag.points, opt);
    std::string expected =
        "H_X = 1 2 3 3 ⋯\n"
        "      2 3 3 3 ⋯\n"
        "      3 3 3 3 ⋯\n"
        "      3 3 3 3 ⋯\n"
        "      ⋮ ⋮ ⋮ ⋮ ⋱\n";
    REQUIRE(render_table_text(h.table, "H_X") == expected);
    REQUIRE(render_table_csv(h.table) == "1,2,3,3\n2,3,3,3\n3,3,3,3\n3,3,3,3\n");
}

TEST_CASE("table and report JSON carry the analysis data") {
    PaperExample diag = build_example("three-collinear-diagonal");
    HilbertTable h = hilbert_table<Rat>(diag.points);
    json jh = hilbert_table_to_json(h);
    REQUIRE(jh["npoints"] == 3);
    REQUIRE(jh["values"][0][0] == 1);
    REQUIRE(jh["stabilized"].size() == 2);

    DepthReport r = compute_depth<Rat>(diag.points);
    json jd = depth_report_to_json(r);
    REQUIRE(jd["depth"] == 1);
    REQUIRE(jd["acm"] == false);
    REQUIRE(jd["sequence"].size() == 1);
    REQUIRE(jd["witnesses"].size() >= 1);
    REQUIRE(jd["witnesses"][0].contains("kernel_dim"));

    AcmReport a = is_acm<Rat>(diag.points);
    json ja = acm_report_to_json(a);
    REQUIRE(ja["status"] == "NotACM");
    REQUIRE(ja.contains("certificate"));
}
