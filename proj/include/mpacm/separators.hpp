#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpacm/depth.hpp"
#include "mpacm/field.hpp"
#include "mpacm/hilbert.hpp"
#include "mpacm/matrix.hpp"
#include "mpacm/multidegree.hpp"
#include "mpacm/points.hpp"

namespace mpacm {

inline PointSet remove_point(const PointSet& x, std::size_t p) {
    if (p >= x.size()) throw std::invalid_argument("point index out of range");
    if (x.size() < 2) throw std::invalid_argument("need at least two points");
    PointSet y;
    y.dims = x.dims;
    for (std::size_t t = 0; t < x.size(); ++t)
        if (t != p) y.points.push_back(x.points[t]);
    return y;
}

/// Degrees at which removing point p drops the Hilbert function, as an
/// up-set.  H_Y is compared to H_X on a shared stabilized box; any value
/// difference other than 0 or 1 is a hard failure.  Generators touching the
/// box boundary trigger enlargement so the antichain is complete.
template <class F>
UpSet drop_locus(const PointSet& x, std::size_t p) {
    PointSet y = remove_point(x, p);
    HilbertCache<F> cx(x);
    HilbertCache<F> cy(y);
    HilbertTable hx = hilbert_table<F>(x, {}, &cx);
    HilbertTable hy = hilbert_table<F>(y, {}, &cy);
    if (!hx.fully_stabilized() || !hy.fully_stabilized())
        throw std::runtime_error("drop_locus: Hilbert table failed to stabilize");

    MultiDegree box(x.r());
    for (std::size_t j = 0; j < box.size(); ++j)
        box[j] = std::max(hx.box()[j], hy.box()[j]);

    for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<MultiDegree> drops;
        bool bad = false;
        MultiDegree bad_at;
        for_each_degree(box, [&](const MultiDegree& i) {
            long long d = cx.value(i) - cy.value(i);
            if (d != 0 && d != 1) {
                bad = true;
                bad_at = i;
            }
            if (d == 1) drops.push_back(i);
        });
        if (bad) throw std::logic_error("drop_locus: Hilbert drop outside {0,1}");

        UpSet s(drops);
        // the drop region must be exactly the up-set of its minimal elements
        bool exact = true;
        for_each_degree(box, [&](const MultiDegree& i) {
            bool in_drop = cx.value(i) - cy.value(i) == 1;
            if (in_drop != s.contains(i)) exact = false;
        });
        if (!exact) throw std::logic_error("drop_locus: drop region is not an up-set");

        bool boundary = false;
        for (const auto& g : s.generators)
            for (std::size_t j = 0; j < box.size(); ++j)
                if (g[j] == box[j]) boundary = true;
        if (!boundary) return s;
        for (auto& c : box) ++c;
    }
    throw std::runtime_error("drop_locus: box enlargement did not settle");
}

struct SeparatorDegreeSet {
    std::size_t point = 0;
    std::vector<MultiDegree> degrees;  ///< antichain, lex-sorted
};

template <class F>
SeparatorDegreeSet separator_degrees(const PointSet& x, std::size_t p) {
    UpSet s = drop_locus<F>(x, p);
    if (s.empty()) throw std::logic_error("separator_degrees: empty degree set");
    return {p, s.generators};
}

/// A separator form for one point: nonzero at it, zero at the rest of X.
template <class F>
struct SeparatorForm {
    MultiDegree degree;
    std::vector<F> coeffs;  ///< in the monomial basis of the degree
};

template <class F>
F evaluate_in_basis(const std::vector<F>& coeffs, const std::vector<Monomial>& mons,
                    const Point& p) {
    F v(0);
    for (std::size_t t = 0; t < mons.size(); ++t) {
        if (is_zero(coeffs[t])) continue;
        v += coeffs[t] * evaluate_monomial<F>(mons[t], p);
    }
    return v;
}

/// Minimal separator of the requested degree, normalized so F(P) = 1:
/// a kernel vector of Y's evaluation matrix that survives evaluation at P.
template <class F>
SeparatorForm<F> minimal_separator(const PointSet& x, std::size_t p, const MultiDegree& alpha) {
    SeparatorDegreeSet degs = separator_degrees<F>(x, p);
    bool listed = false;
    for (const auto& d : degs.degrees) listed = listed || d == alpha;
    if (!listed)
        throw std::invalid_argument("minimal_separator: degree is not a minimal separator degree");

    PointSet y = remove_point(x, p);
    auto mons = monomials_of_degree(alpha, x.dims);
    for (auto& v : kernel_basis(evaluation_matrix<F>(y, alpha))) {
        F at_p = evaluate_in_basis<F>(v, mons, x.points[p]);
        if (is_zero(at_p)) continue;
        F inv = F(1) / at_p;
        for (auto& c : v) c = c * inv;
        return {alpha, std::move(v)};
    }
    throw std::logic_error("minimal_separator: no kernel vector evaluates nonzero at P");
}

/// Checks dim (I_X, F)_i = dim (I_X)_i + 1 for every box degree i >= deg F,
/// i.e. H_{R/(I_X,F)}(i) = H_X(i) - 1 there.
template <class F>
bool check_colon_property(const PointSet& x, const SeparatorForm<F>& f) {
    HilbertCache<F> cache(x);
    HilbertTable hx = hilbert_table<F>(x, {}, &cache);

    auto mons = monomials_of_degree(f.degree, x.dims);
    EvalForm<F> ef;
    ef.degree = f.degree;
    ef.values.assign(x.size(), F(0));
    for (std::size_t t = 0; t < mons.size(); ++t) {
        if (is_zero(f.coeffs[t])) continue;
        for (std::size_t q = 0; q < x.size(); ++q)
            ef.values[q] += f.coeffs[t] * evaluate_monomial<F>(mons[t], x.points[q]);
    }

    QuotientHilbert<F> quot(cache, {ef});
    bool ok = true;
    for_each_degree(hx.box(), [&](const MultiDegree& i) {
        if (!ok || !dominates(i, f.degree)) return;
        if (quot.value(i) != cache.value(i) - 1) ok = false;
    });
    return ok;
}

struct UniqueDegreeVerdict {
    bool all_unique = true;
    std::size_t point = 0;                 ///< first violating point
    std::vector<MultiDegree> degrees;      ///< its degree antichain
};

/// Necessary ACM condition: every point has a single minimal separator
/// degree.  AllUnique does not certify ACM.
template <class F>
UniqueDegreeVerdict unique_degree_test(const PointSet& x) {
    for (std::size_t p = 0; p < x.size(); ++p) {
        SeparatorDegreeSet s = separator_degrees<F>(x, p);
        if (s.degrees.size() != 1) return {false, p, s.degrees};
    }
    return {};
}

}  // namespace mpacm
