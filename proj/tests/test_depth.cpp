#include <catch_amalgamated.hpp>

#include <random>

#include "mpacm/corpus.hpp"
#include "mpacm/depth.hpp"

using namespace mpacm;

namespace {

EvalForm<Rat> coordinate_form(const PointSet& x, std::size_t factor, std::size_t var) {
    LinearForm lf;
    lf.factor = factor;
    lf.coeffs.assign(x.dims[factor - 1] + 1, Rat(0));
    lf.coeffs[var] = Rat(1);
    return evaluate_form<Rat>(to_graded_form(lf, x.dims), x);
}

long long quotient_value(const PointSet& x, HilbertCache<Rat>& cache,
                         std::vector<EvalForm<Rat>> forms, const MultiDegree& i) {
    QuotientHilbert<Rat> q(cache, std::move(forms));
    return q.value(i);
}

}  // namespace

TEST_CASE("reference quotient tables of the collinear diagonal example") {
    PaperExample ex = build_example("three-collinear-diagonal");
    const PointSet& x = ex.points;
    HilbertCache<Rat> cache(x);
    EvalForm<Rat> x0 = coordinate_form(x, 1, 0);
    EvalForm<Rat> y0 = coordinate_form(x, 2, 0);

    long long j1[4][4] = {{1, 2, 3, 3}, {1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}};
    long long j2[4][4] = {{1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}};
    QuotientHilbert<Rat> q1(cache, {x0});
    QuotientHilbert<Rat> q2(cache, {x0, y0});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            REQUIRE(q1.value({i, j}) == j1[i][j]);
            REQUIRE(q2.value({i, j}) == j2[i][j]);
        }
}

TEST_CASE("multiplication kernel witnesses depth 1 on the diagonal example") {
    PaperExample ex = build_example("three-collinear-diagonal");
    const PointSet& x = ex.points;
    HilbertCache<Rat> cache(x);
    EvalForm<Rat> x0 = coordinate_form(x, 1, 0);
    EvalForm<Rat> y0 = coordinate_form(x, 2, 0);
    QuotientHilbert<Rat> qj(cache, {x0});
    QuotientHilbert<Rat> qjl(cache, {x0, y0});
    // H(1,1) - H(1,2) + H_{(J,y0)}(1,2) = 1 - 0 + 0
    REQUIRE(multiplication_kernel_dim(qj, qjl, y0.degree, {1, 1}) == 1);
    REQUIRE(multiplication_kernel_dim(qj, qjl, y0.degree, {2, 2}) == 0);
}

TEST_CASE("ideal slices from kernels") {
    PaperExample ex1 = build_example("example1");
    REQUIRE(ideal_slice<Rat>(ex1.points, {0, 0}).basis.empty());
    REQUIRE(ideal_slice<Rat>(ex1.points, {3, 0}).basis.size() == 4);  // 10 - 6

    PaperExample diag = build_example("three-collinear-diagonal");
    auto conic = ideal_slice<Rat>(diag.points, {1, 1});
    REQUIRE(conic.basis.size() == 1);  // dim R = 4, H = 3
    // the slice really vanishes on X
    auto mons = monomials_of_degree({1, 1}, diag.points.dims);
    for (const Point& p : diag.points.points) {
        Rat v(0);
        for (std::size_t t = 0; t < mons.size(); ++t)
            v += conic.basis[0][t] * evaluate_monomial<Rat>(mons[t], p);
        REQUIRE(is_zero(v));
    }
}

TEST_CASE("coefficient-space and evaluation-space quotients agree") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> coeff(-5, 5);
    PaperExample diag = build_example("three-collinear-diagonal");
    PaperExample pts11 = build_example("p1p2-11pts");
    for (const PointSet* xp : {&diag.points, &pts11.points}) {
        const PointSet& x = *xp;
        HilbertCache<Rat> cache(x);
        for (int t = 0; t < 3; ++t) {
            std::vector<GradedForm> gforms;
            std::vector<EvalForm<Rat>> eforms;
            for (std::size_t f = 1; f <= x.r(); ++f) {
                LinearForm lf;
                lf.factor = f;
                lf.coeffs.assign(x.dims[f - 1] + 1, Rat(0));
                for (auto& c : lf.coeffs) c = Rat(coeff(rng));
                if (is_zero(lf.coeffs[0])) lf.coeffs[0] = Rat(1);
                GradedForm g = to_graded_form(lf, x.dims);
                gforms.push_back(g);
                eforms.push_back(evaluate_form<Rat>(g, x));
            }
            QuotientHilbert<Rat> q(cache, eforms);
            for (int a = 0; a <= 3; ++a)
                for (int b = 0; b <= 3; ++b) {
                    MultiDegree i = {a, b};
                    auto slice = extended_slice<Rat>(x, gforms, i);
                    long long viaslice =
                        dim_R(i, x.dims) - static_cast<long long>(slice.basis.size());
                    REQUIRE(viaslice == q.value(i));
                }
        }
    }
}

TEST_CASE("extended slice with no forms reduces to the ideal slice") {
    PaperExample diag = build_example("three-collinear-diagonal");
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            auto plain = ideal_slice<Rat>(diag.points, {a, b});
            auto ext = extended_slice<Rat>(diag.points, {}, {a, b});
            REQUIRE(plain.basis.size() == ext.basis.size());
        }
}

TEST_CASE("slice dimensions are monotone in the ideal chain and in degree") {
    PaperExample ex = build_example("p1p2-11pts");
    const PointSet& x = ex.points;
    GradedForm l1 = to_graded_form({1, {Rat(1), Rat(3)}}, x.dims);
    GradedForm l2 = to_graded_form({2, {Rat(1), Rat(5), Rat(7)}}, x.dims);
    std::vector<std::vector<GradedForm>> chain = {{}, {l1}, {l1, l2}};
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            MultiDegree i = {a, b};
            std::size_t prev = 0;
            for (const auto& forms : chain) {
                std::size_t d = extended_slice<Rat>(x, forms, i).basis.size();
                REQUIRE(d >= prev);
                prev = d;
            }
            // multiplication by a variable embeds (J)_i into (J)_{i+e_f}
            std::size_t here = extended_slice<Rat>(x, chain[2], i).basis.size();
            for (std::size_t f = 0; f < 2; ++f) {
                MultiDegree up = i;
                ++up[f];
                if (up[0] > 3 || up[1] > 3) continue;
                REQUIRE(extended_slice<Rat>(x, chain[2], up).basis.size() >= here);
            }
        }
}

TEST_CASE("depth search reproduces the catalog depths") {
    REQUIRE(compute_depth<Rat>(build_example("example2").points).depth == 2);
    REQUIRE(compute_depth<Rat>(build_example("example3").points).depth == 2);
    REQUIRE(compute_depth<Rat>(build_example("example1").points).depth == 1);
    REQUIRE(compute_depth<Rat>(build_example("three-collinear-diagonal").points).depth == 1);
}

TEST_CASE("depth report satisfies its invariants") {
    for (const char* name : {"example1", "example2", "p1p2-11pts"}) {
        PaperExample ex = build_example(name);
        DepthReport r = compute_depth<Rat>(ex.points, 3, 7);
        INFO(name);
        REQUIRE(r.depth >= 1);  // stage 1 always succeeds: the ideal is radical
        REQUIRE(r.depth <= static_cast<int>(ex.points.r()));
        REQUIRE(r.sequence.size() == static_cast<std::size_t>(r.depth));
        for (std::size_t k = 0; k < r.sequence.size(); ++k)
            REQUIRE(r.sequence[k].factor == k + 1);
        REQUIRE((r.acm) == (r.depth == static_cast<int>(ex.points.r())));
        if (r.acm) REQUIRE(r.artinian_checked);
    }
}

TEST_CASE("short-exact-sequence identity holds at every successful stage") {
    for (const char* name : {"example2", "example3"}) {
        PaperExample ex = build_example(name);
        const PointSet& x = ex.points;
        DepthReport r = compute_depth<Rat>(x);
        REQUIRE(r.acm);
        HilbertCache<Rat> cache(x);
        std::vector<EvalForm<Rat>> accepted;
        for (const LinearForm& lf : r.sequence) {
            QuotientHilbert<Rat> before(cache, accepted);
            accepted.push_back(evaluate_form<Rat>(to_graded_form(lf, x.dims), x));
            QuotientHilbert<Rat> after(cache, accepted);
            MultiDegree e = unit_degree(x.r(), lf.factor - 1);
            HilbertTable ht = hilbert_table<Rat>(x, {}, &cache);
            for_each_degree(ht.box(), [&](const MultiDegree& i) {
                long long lower = 0;
                if (i[lf.factor - 1] > 0) lower = before.value(i - e);
                REQUIRE(after.value(i) == before.value(i) - lower);
            });
        }
    }
}

TEST_CASE("regular forms produce no kernel on a partition-shaped set") {
    std::vector<std::vector<Rat>> ps, qs;
    for (long i = 1; i <= 3; ++i) ps.push_back({Rat(1), Rat(i)});
    for (long j = 1; j <= 4; ++j) qs.push_back({Rat(1), Rat(j)});
    PointSet x = ferrers_point_set({4, 2, 1}, ps, qs);
    DepthReport r = compute_depth<Rat>(x);
    REQUIRE(r.acm);
    REQUIRE(r.witnesses.empty());
}

TEST_CASE("acm pipeline certificates") {
    AcmReport geometric = is_acm<Rat>(build_example("p1p2-11pts").points);
    REQUIRE(geometric.status == AcmStatus::NotACM);

    AcmReport byquick = is_acm<Rat>(build_example("three-collinear-diagonal").points);
    REQUIRE(byquick.status == AcmStatus::NotACM);
    REQUIRE(byquick.quick.has_value());
    REQUIRE(byquick.quick->not_acm);

    AcmReport bydepth = is_acm<Rat>(build_example("example1").points);
    REQUIRE(bydepth.status == AcmStatus::NotACM);
    REQUIRE(bydepth.depth.has_value());
    REQUIRE(bydepth.depth->depth == 1);

    AcmReport acm = is_acm<Rat>(build_example("example2").points);
    REQUIRE(acm.status == AcmStatus::ACM);
}
