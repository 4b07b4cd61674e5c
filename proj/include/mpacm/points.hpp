#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpacm/field.hpp"
#include "mpacm/matrix.hpp"
#include "mpacm/multidegree.hpp"

namespace mpacm {

/// A point of P^{n_1} x ... x P^{n_r} with exact homogeneous coordinates.
/// Stored normalized: in each factor the first nonzero coordinate is 1.
struct Point {
    std::vector<std::vector<Rat>> coords;

    void normalize() {
        for (auto& factor : coords) {
            auto lead = std::find_if(factor.begin(), factor.end(),
                                     [](const Rat& c) { return !is_zero(c); });
            if (lead == factor.end())
                throw std::invalid_argument("point has a zero factor vector");
            Rat inv = 1 / *lead;
            for (auto& c : factor) c *= inv;
        }
    }

    bool operator==(const Point& o) const { return coords == o.coords; }
};

inline Point make_point(std::vector<std::vector<Rat>> coords) {
    Point p{std::move(coords)};
    p.normalize();
    return p;
}

struct PointSet {
    MultiDegree dims;            ///< (n_1,...,n_r)
    std::vector<Point> points;   ///< ordered, pairwise distinct

    std::size_t r() const { return dims.size(); }
    std::size_t size() const { return points.size(); }

    void validate() const {
        for (std::size_t t = 0; t < points.size(); ++t) {
            const Point& p = points[t];
            if (p.coords.size() != dims.size())
                throw std::invalid_argument("point " + std::to_string(t) + ": wrong factor count");
            for (std::size_t j = 0; j < dims.size(); ++j)
                if (static_cast<int>(p.coords[j].size()) != dims[j] + 1)
                    throw std::invalid_argument("point " + std::to_string(t) +
                                                ": wrong coordinate length in factor " +
                                                std::to_string(j + 1));
            for (std::size_t u = 0; u < t; ++u)
                if (points[u] == p)
                    throw std::invalid_argument("duplicate point at index " + std::to_string(t));
        }
    }
};

inline PointSet make_point_set(MultiDegree dims, std::vector<Point> pts) {
    PointSet x{std::move(dims), std::move(pts)};
    for (auto& p : x.points) p.normalize();
    x.validate();
    return x;
}

/// Distinct j-th factor coordinates (1-based factor index), first-appearance
/// order.
inline std::vector<std::vector<Rat>> projection(const PointSet& x, std::size_t factor) {
    if (factor < 1 || factor > x.r())
        throw std::invalid_argument("projection: factor index out of range");
    std::vector<std::vector<Rat>> out;
    for (const Point& p : x.points) {
        const auto& c = p.coords[factor - 1];
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Property (star) and the S_X poset (two-factor spaces)
// ---------------------------------------------------------------------------

struct StarResult {
    bool satisfied;
    /// Point indices (a, b) of the first witness pair when not satisfied:
    /// both points differ in each factor and both mixed completions are
    /// absent.  Lexicographically first by (a, b).
    std::pair<std::size_t, std::size_t> witness{0, 0};
};

namespace detail {
inline bool completion_present(const PointSet& x, const std::vector<Rat>& first,
                               const std::vector<Rat>& second) {
    for (const Point& q : x.points)
        if (q.coords[0] == first && q.coords[1] == second) return true;
    return false;
}
}  // namespace detail

inline StarResult has_property_star(const PointSet& x) {
    if (x.r() != 2)
        throw std::invalid_argument("property (star) is defined on two-factor spaces");
    for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = a + 1; b < x.size(); ++b) {
            const Point& p = x.points[a];
            const Point& q = x.points[b];
            if (p.coords[0] == q.coords[0] || p.coords[1] == q.coords[1]) continue;
            if (!detail::completion_present(x, p.coords[0], q.coords[1]) &&
                !detail::completion_present(x, q.coords[0], p.coords[1]))
                return {false, {a, b}};
        }
    }
    return {true, {}};
}

/// All unordered witness pairs (a < b) against property (star).
inline std::vector<std::pair<std::size_t, std::size_t>> star_witnesses(const PointSet& x) {
    if (x.r() != 2)
        throw std::invalid_argument("property (star) is defined on two-factor spaces");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b) {
            const Point& p = x.points[a];
            const Point& q = x.points[b];
            if (p.coords[0] == q.coords[0] || p.coords[1] == q.coords[1]) continue;
            if (!detail::completion_present(x, p.coords[0], q.coords[1]) &&
                !detail::completion_present(x, q.coords[0], p.coords[1]))
                out.emplace_back(a, b);
        }
    return out;
}

/// The incidence rows of a two-factor set, indexed pi_1(X) x pi_2(X).
struct SXPoset {
    std::vector<std::vector<int>> rows;  ///< 0/1 tuples, one per first coordinate
    bool totally_ordered = false;
};

inline SXPoset sx_poset(const PointSet& x) {
    if (x.r() != 2)
        throw std::invalid_argument("S_X is defined on two-factor spaces");
    auto p1 = projection(x, 1);
    auto p2 = projection(x, 2);
    SXPoset s;
    s.rows.assign(p1.size(), std::vector<int>(p2.size(), 0));
    for (const Point& p : x.points) {
        auto i = std::find(p1.begin(), p1.end(), p.coords[0]) - p1.begin();
        auto j = std::find(p2.begin(), p2.end(), p.coords[1]) - p2.begin();
        s.rows[i][j] = 1;
    }
    auto leq = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t] > b[t]) return false;
        return true;
    };
    s.totally_ordered = true;
    for (std::size_t i = 0; i < s.rows.size() && s.totally_ordered; ++i)
        for (std::size_t j = i + 1; j < s.rows.size(); ++j)
            if (!leq(s.rows[i], s.rows[j]) && !leq(s.rows[j], s.rows[i])) {
                s.totally_ordered = false;
                break;
            }
    return s;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Ferrer's-diagram point set {P_i x Q_j : 1 <= j <= lambda_i} in P^1 x P^n.
inline PointSet ferrers_point_set(const std::vector<int>& lambda,
                                  const std::vector<std::vector<Rat>>& ps,
                                  const std::vector<std::vector<Rat>>& qs) {
    if (lambda.empty()) throw std::invalid_argument("ferrers: empty partition");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0) throw std::invalid_argument("ferrers: parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("ferrers: partition must be non-increasing");
    }
    if (ps.size() < lambda.size() || qs.size() < static_cast<std::size_t>(lambda[0]))
        throw std::invalid_argument("ferrers: not enough points supplied");
    int n = static_cast<int>(qs[0].size()) - 1;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            pts.push_back(make_point({ps[i], qs[j]}));
    return make_point_set({1, n}, std::move(pts));
}

/// Embed a P^2 x P^2 configuration into P^{n_1} x ... x P^{n_r}: factor
/// slots (i, j) receive the zero-padded coordinates, all other factors are
/// pinned to [1:0:...:0].
inline PointSet embed_points(const PointSet& x, const MultiDegree& target_dims,
                             std::size_t slot_i, std::size_t slot_j) {
    if (x.dims != MultiDegree{2, 2})
        throw std::invalid_argument("embed_points: input must live in P^2 x P^2");
    std::size_t r = target_dims.size();
    if (slot_i < 1 || slot_i > r || slot_j < 1 || slot_j > r || slot_i == slot_j)
        throw std::invalid_argument("embed_points: bad slot indices");
    if (target_dims[slot_i - 1] < 2 || target_dims[slot_j - 1] < 2)
        throw std::invalid_argument("embed_points: target factors must have dimension >= 2");

    auto pad = [](const std::vector<Rat>& c, int n) {
        std::vector<Rat> v(c);
        v.resize(n + 1, Rat(0));
        return v;
    };
    std::vector<Point> pts;
    for (const Point& p : x.points) {
        std::vector<std::vector<Rat>> coords(r);
        for (std::size_t k = 0; k < r; ++k) {
            if (k == slot_i - 1) coords[k] = pad(p.coords[0], target_dims[k]);
            else if (k == slot_j - 1) coords[k] = pad(p.coords[1], target_dims[k]);
            else {
                coords[k].assign(target_dims[k] + 1, Rat(0));
                coords[k][0] = Rat(1);
            }
        }
        pts.push_back(make_point(std::move(coords)));
    }
    return make_point_set(target_dims, std::move(pts));
}

// ---------------------------------------------------------------------------
// General position in P^2
// ---------------------------------------------------------------------------

/// Checks classical general position for six points of P^2: no three collinear
/// (all 3x3 coordinate minors nonzero) and no conic through all six
/// (6x6 matrix of conic monomials nonsingular).
inline bool verify_general_position(const std::vector<std::vector<Rat>>& pts) {
    if (pts.size() != 6) throw std::invalid_argument("general position check expects 6 points");
    for (const auto& p : pts)
        if (p.size() != 3) throw std::invalid_argument("general position check expects P^2 points");
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c) {
                Matrix<Rat> m(3, 3);
                const std::vector<Rat>* rows[3] = {&pts[a], &pts[b], &pts[c]};
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = (*rows[i])[j];
                if (rank(m) < 3) return false;
            }
    Matrix<Rat> conic(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        const Rat& x = pts[i][0];
        const Rat& y = pts[i][1];
        const Rat& z = pts[i][2];
        Rat row[6] = {x * x, x * y, x * z, y * y, y * z, z * z};
        for (std::size_t j = 0; j < 6; ++j) conic.at(i, j) = row[j];
    }
    return rank(conic) == 6;
}

}  // namespace mpacm
