#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpacm/depth.hpp"
#include "mpacm/field.hpp"
#include "mpacm/hilbert.hpp"
#include "mpacm/points.hpp"
#include "mpacm/separators.hpp"

namespace mpacm {

using Block = std::vector<std::vector<long long>>;

struct ExpectedFixtures {
    std::optional<Block> h_block;      ///< leading block of H, rows = factor 1
    std::optional<Block> delta_block;  ///< leading block of the first difference
    std::optional<int> depth;
    std::optional<AcmStatus> acm;
    std::optional<bool> star;
    std::optional<DeltaScreen::Kind> screen;
    std::optional<bool> all_unique;
    /// per-label expected minimal separator degree antichains
    std::vector<std::pair<std::string, std::vector<MultiDegree>>> separator_degrees;
    /// label of a point whose removal has a reference H block
    std::optional<std::string> removal_label;
    std::optional<Block> removal_h_block;
};

struct PaperExample {
    std::string name;
    PointSet points;
    std::vector<std::string> labels;  ///< one per point
    ExpectedFixtures expected;
};

// ---------------------------------------------------------------------------
// Witness coordinates
// ---------------------------------------------------------------------------

/// Fixed six-point general-position witness in P^2: the twisted-cubic points
/// [1 : i : i^3], i = 1..6.  Machine-verified on every use.
inline std::vector<std::vector<Rat>> standard_general_position() {
    std::vector<std::vector<Rat>> pts;
    for (long i = 1; i <= 6; ++i) pts.push_back({Rat(1), Rat(i), Rat(i * i * i)});
    if (!verify_general_position(pts))
        throw std::logic_error("standard general-position witness failed verification");
    return pts;
}

/// A random verified general-position sextuple (coordinates [1:a:b] with
/// a, b uniform in [-20, 20]); used to confirm witness independence.
inline std::vector<std::vector<Rat>> random_general_position(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<Rat>> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({Rat(1), Rat(dist(rng)), Rat(dist(rng))});
        bool distinct = true;
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = a + 1; b < 6; ++b)
                if (pts[a] == pts[b]) distinct = false;
        if (distinct && verify_general_position(pts)) return pts;
    }
    throw std::runtime_error("random_general_position: no verified witness found");
}

namespace detail {

inline std::string pair_label(int i, int j) {
    return "Q_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

/// Product set from incidence rows: for each first index i, the listed
/// second indices j give points A_i x B_j labelled Q_{i,j}.
inline PaperExample product_example(std::string name, MultiDegree dims,
                                    const std::vector<std::vector<Rat>>& as,
                                    const std::vector<std::vector<Rat>>& bs,
                                    const std::map<int, std::vector<int>>& rows) {
    PaperExample ex;
    ex.name = std::move(name);
    std::vector<Point> pts;
    for (const auto& [i, js] : rows)
        for (int j : js) {
            pts.push_back(make_point({as[i - 1], bs[j - 1]}));
            ex.labels.push_back(pair_label(i, j));
        }
    ex.points = make_point_set(std::move(dims), std::move(pts));
    return ex;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

inline std::vector<std::string> example_names() {
    return {"example1",  "example2", "example3", "example4", "three-collinear-diagonal",
            "p1p2-11pts", "two-noncollinear"};
}

inline PaperExample build_example(const std::string& name,
                                  std::optional<std::uint64_t> witness_seed = std::nullopt) {
    auto gp = witness_seed ? random_general_position(*witness_seed) : standard_general_position();

    if (name == "example1") {
        std::map<int, std::vector<int>> rows = {{1, {1, 2, 3, 4, 5, 6}}, {2, {1, 3, 4, 6}},
                                                {3, {1, 2, 5, 6}},       {4, {1, 2, 5, 6}},
                                                {5, {1, 3, 6}},          {6, {1, 2, 3, 4, 5, 6}}};
        PaperExample ex = detail::product_example(name, {2, 2}, gp, gp, rows);
        ex.expected.h_block = Block{{1, 3, 6, 6}, {3, 9, 18, 18}, {6, 18, 27, 27}, {6, 18, 27, 27}};
        ex.expected.delta_block = Block{{1, 2, 3, 0}, {2, 4, 6, 0}, {3, 6, 0, 0}, {0, 0, 0, 0}};
        ex.expected.depth = 1;
        ex.expected.acm = AcmStatus::NotACM;
        ex.expected.screen = DeltaScreen::Kind::Passes;
        return ex;
    }

    if (name == "example2") {
        // P_{ij} = [1 : i : j]; points P_{ij} x P_{kl} for the listed quadruples
        static const int quads[][4] = {
            {1, 1, 2, 1}, {1, 1, 2, 2}, {1, 1, 3, 1}, {1, 2, 2, 1}, {1, 2, 2, 2}, {1, 2, 3, 1},
            {1, 3, 2, 1}, {1, 3, 2, 2}, {1, 3, 3, 1}, {2, 1, 1, 1}, {2, 1, 1, 2}, {2, 1, 1, 3},
            {2, 1, 2, 1}, {2, 1, 2, 2}, {2, 1, 3, 1}, {2, 2, 1, 1}, {2, 2, 1, 2}, {2, 2, 1, 3},
            {2, 2, 2, 1}, {2, 2, 2, 2}, {2, 2, 3, 1}, {3, 1, 1, 1}, {3, 1, 1, 2}, {3, 1, 1, 3},
            {3, 1, 2, 1}, {3, 1, 2, 2}, {3, 1, 3, 1}};
        PaperExample ex;
        ex.name = name;
        std::vector<Point> pts;
        for (const auto& q : quads) {
            auto pij = [](int a, int b) {
                return std::vector<Rat>{Rat(1), Rat(a), Rat(b)};
            };
            pts.push_back(make_point({pij(q[0], q[1]), pij(q[2], q[3])}));
            ex.labels.push_back("Q_{" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                                std::to_string(q[2]) + "," + std::to_string(q[3]) + "}");
        }
        ex.points = make_point_set({2, 2}, std::move(pts));
        ex.expected.h_block =
            Block{{1, 3, 6, 6}, {3, 9, 18, 18}, {6, 18, 27, 27}, {6, 18, 27, 27}};
        ex.expected.depth = 2;
        ex.expected.acm = AcmStatus::ACM;
        return ex;
    }

    if (name == "example3") {
        std::map<int, std::vector<int>> rows = {{1, {1, 2}},          {2, {1, 2, 3, 4, 5}},
                                                {3, {1, 2, 3, 4, 5}}, {4, {1, 2, 4, 5}},
                                                {5, {1, 2, 3, 4, 6}}, {6, {1, 2, 3, 4, 5, 6}}};
        std::vector<std::vector<Rat>> ps;
        for (long i = 1; i <= 6; ++i) ps.push_back({Rat(1), Rat(i)});
        PaperExample ex = detail::product_example(name, {1, 2}, ps, gp, rows);
        ex.expected.depth = 2;
        ex.expected.acm = AcmStatus::ACM;
        ex.expected.star = false;
        return ex;
    }

    if (name == "example4") {
        std::map<int, std::vector<int>> rows = {{1, {1, 2}},          {2, {1, 2}},
                                                {3, {1, 2}},          {4, {1, 2}},
                                                {5, {2, 3, 4, 5, 6}}, {6, {1, 3, 4, 5, 6}}};
        PaperExample ex = detail::product_example(name, {2, 2}, gp, gp, rows);
        ex.expected.h_block =
            Block{{1, 3, 6, 6}, {3, 8, 14, 14}, {6, 14, 18, 18}, {6, 14, 18, 18}};
        ex.expected.depth = 1;
        ex.expected.acm = AcmStatus::NotACM;
        ex.expected.all_unique = true;
        ex.expected.separator_degrees = {
            {"Q_{5,2}", {{2, 2}}}, {"Q_{6,1}", {{2, 2}}}, {"Q_{1,1}", {{2, 1}}},
            {"Q_{4,2}", {{2, 1}}}, {"Q_{5,3}", {{1, 2}}}, {"Q_{6,6}", {{1, 2}}}};
        ex.expected.removal_label = "Q_{5,2}";
        ex.expected.removal_h_block =
            Block{{1, 3, 6, 6}, {3, 8, 14, 14}, {6, 14, 17, 17}, {6, 14, 17, 17}};
        return ex;
    }

    if (name == "three-collinear-diagonal") {
        PaperExample ex;
        ex.name = name;
        std::vector<Point> pts;
        for (long i = 1; i <= 3; ++i) {
            pts.push_back(make_point({{Rat(1), Rat(i)}, {Rat(1), Rat(i)}}));
            ex.labels.push_back(detail::pair_label(static_cast<int>(i), static_cast<int>(i)));
        }
        ex.points = make_point_set({1, 1}, std::move(pts));
        ex.expected.h_block = Block{{1, 2, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}};
        ex.expected.depth = 1;
        ex.expected.acm = AcmStatus::NotACM;
        ex.expected.screen = DeltaScreen::Kind::Negative;
        return ex;
    }

    if (name == "p1p2-11pts") {
        std::vector<std::vector<Rat>> ps;
        for (long i = 1; i <= 3; ++i) ps.push_back({Rat(1), Rat(i)});
        std::vector<std::vector<Rat>> qs = {{Rat(1), Rat(1), Rat(1)},
                                            {Rat(1), Rat(1), Rat(2)},
                                            {Rat(1), Rat(1), Rat(3)},
                                            {Rat(1), Rat(0), Rat(1)},
                                            {Rat(1), Rat(0), Rat(2)}};
        std::map<int, std::vector<int>> rows = {{1, {1, 2, 3, 4}}, {2, {1, 2, 3, 5}}, {3, {1, 2, 3}}};
        PaperExample ex = detail::product_example(name, {1, 2}, ps, qs, rows);
        ex.expected.h_block = Block{{1, 3, 5, 5}, {2, 6, 8, 8}, {3, 8, 11, 11}, {3, 8, 11, 11}};
        ex.expected.delta_block = Block{{1, 2, 2, 0}, {1, 2, 0, 0}, {1, 1, 1, 0}, {0, 0, 0, 0}};
        ex.expected.acm = AcmStatus::NotACM;
        ex.expected.screen = DeltaScreen::Kind::SupportViolation;
        return ex;
    }

    if (name == "two-noncollinear") {
        PaperExample ex;
        ex.name = name;
        std::vector<Point> pts = {make_point({{Rat(1), Rat(0)}, {Rat(1), Rat(0)}}),
                                  make_point({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}})};
        ex.labels = {"Q_{1,1}", "Q_{2,2}"};
        ex.points = make_point_set({1, 1}, std::move(pts));
        ex.expected.acm = AcmStatus::NotACM;
        ex.expected.star = false;
        ex.expected.all_unique = false;
        ex.expected.separator_degrees = {{"Q_{1,1}", {{0, 1}, {1, 0}}},
                                         {"Q_{2,2}", {{0, 1}, {1, 0}}}};
        return ex;
    }

    throw std::invalid_argument("unknown example name: " + name);
}

inline std::size_t label_index(const PaperExample& ex, const std::string& label) {
    for (std::size_t t = 0; t < ex.labels.size(); ++t)
        if (ex.labels[t] == label) return t;
    throw std::invalid_argument("unknown point label: " + label);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct VerifyCheck {
    std::string what;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string name;
    std::vector<VerifyCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {
inline bool block_matches(const HilbertTable& h, const Block& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j) {
            MultiDegree d = {static_cast<int>(i), static_cast<int>(j)};
            if (!h.table.contains(d) || h.value(d) != b[i][j]) return false;
        }
    return true;
}
inline bool block_matches(const DeltaTable& t, const Block& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j) {
            MultiDegree d = {static_cast<int>(i), static_cast<int>(j)};
            if (!t.table.contains(d) || t.value(d) != b[i][j]) return false;
        }
    return true;
}
}  // namespace detail

template <class F>
VerifyReport verify_example(const std::string& name, unsigned trials = 5,
                            std::uint64_t seed = kDefaultSeed) {
    PaperExample ex = build_example(name);
    VerifyReport rep;
    rep.name = name;
    auto add = [&](std::string what, bool pass, std::string detail = "") {
        rep.checks.push_back({std::move(what), pass, std::move(detail)});
    };
    const ExpectedFixtures& e = ex.expected;

    HilbertCache<F> cache(ex.points);
    HilbertTable ht = hilbert_table<F>(ex.points, {}, &cache);
    if (e.h_block) add("hilbert block", detail::block_matches(ht, *e.h_block));
    DeltaTable dt = delta_table(ht);
    if (e.delta_block) add("delta block", detail::block_matches(dt, *e.delta_block));
    if (e.screen) {
        DeltaScreen s = delta_screen(dt);
        add("delta screen", s.kind == *e.screen);
    }
    if (e.depth) {
        DepthReport d = compute_depth<F>(ex.points, trials, seed);
        add("depth", d.depth == *e.depth,
            "computed " + std::to_string(d.depth) + ", expected " + std::to_string(*e.depth));
    }
    if (e.acm) {
        AcmReport a = is_acm<F>(ex.points, trials, seed);
        add("acm verdict", a.status == *e.acm, a.certificate);
    }
    if (e.star) add("property check", has_property_star(ex.points).satisfied == *e.star);
    if (e.all_unique)
        add("unique separator degrees", unique_degree_test<F>(ex.points).all_unique == *e.all_unique);
    for (const auto& [label, degs] : e.separator_degrees) {
        SeparatorDegreeSet s = separator_degrees<F>(ex.points, label_index(ex, label));
        add("separator degrees " + label, s.degrees == degs);
    }
    if (e.removal_label && e.removal_h_block) {
        PointSet y = remove_point(ex.points, label_index(ex, *e.removal_label));
        HilbertTable hy = hilbert_table<F>(y);
        add("hilbert block after removing " + *e.removal_label,
            detail::block_matches(hy, *e.removal_h_block));
    }
    return rep;
}

}  // namespace mpacm
