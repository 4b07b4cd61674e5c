#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpacm/field.hpp"
#include "mpacm/matrix.hpp"
#include "mpacm/multidegree.hpp"
#include "mpacm/points.hpp"

namespace mpacm {

// ---------------------------------------------------------------------------
// Boxes of multidegrees
// ---------------------------------------------------------------------------

/// Values on the box {0..B_1} x ... x {0..B_r}, row-major, last factor fastest.
template <class T>
struct BoxTable {
    MultiDegree box;  ///< inclusive upper corner B
    std::vector<T> values;

    BoxTable() = default;
    explicit BoxTable(MultiDegree b) : box(std::move(b)) {
        std::size_t n = 1;
        for (int c : box) n *= static_cast<std::size_t>(c) + 1;
        values.assign(n, T{});
    }

    std::size_t index(const MultiDegree& i) const {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < box.size(); ++j) {
            if (i[j] < 0 || i[j] > box[j]) throw std::out_of_range("degree outside box");
            idx = idx * (static_cast<std::size_t>(box[j]) + 1) + static_cast<std::size_t>(i[j]);
        }
        return idx;
    }
    T& at(const MultiDegree& i) { return values[index(i)]; }
    const T& at(const MultiDegree& i) const { return values[index(i)]; }
    bool contains(const MultiDegree& i) const {
        for (std::size_t j = 0; j < box.size(); ++j)
            if (i[j] < 0 || i[j] > box[j]) return false;
        return true;
    }
};

/// Visit every degree of the box in ascending lexicographic order.
template <class Fn>
void for_each_degree(const MultiDegree& box, Fn&& fn) {
    MultiDegree i(box.size(), 0);
    while (true) {
        fn(const_cast<const MultiDegree&>(i));
        std::size_t j = box.size();
        while (j > 0) {
            --j;
            if (i[j] < box[j]) { ++i[j]; break; }
            i[j] = 0;
            if (j == 0) return;
        }
        if (box.empty()) return;
    }
}

// ---------------------------------------------------------------------------
// Evaluation matrices
// ---------------------------------------------------------------------------

template <class F>
F evaluate_monomial(const Monomial& m, const Point& p) {
    F v(1);
    for (std::size_t j = 0; j < m.exps.size(); ++j)
        for (std::size_t t = 0; t < m.exps[j].size(); ++t) {
            F c = to_field<F>(p.coords[j][t]);
            for (int e = 0; e < m.exps[j][t]; ++e) v = v * c;
        }
    return v;
}

/// Points x monomials matrix of monomial values; rank = H_X(i), kernel =
/// (I_X)_i.
template <class F>
Matrix<F> evaluation_matrix(const PointSet& x, const MultiDegree& i) {
    auto mons = monomials_of_degree(i, x.dims);
    Matrix<F> m(x.size(), mons.size());
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t c = 0; c < mons.size(); ++c)
            m.at(p, c) = evaluate_monomial<F>(mons[c], x.points[p]);
    return m;
}

/// One evaluation row per monomial of R_i (values at the points of x).
template <class F>
std::vector<std::vector<F>> monomial_eval_rows(const PointSet& x, const MultiDegree& i) {
    auto mons = monomials_of_degree(i, x.dims);
    std::vector<std::vector<F>> rows(mons.size(), std::vector<F>(x.size()));
    for (std::size_t c = 0; c < mons.size(); ++c)
        for (std::size_t p = 0; p < x.size(); ++p)
            rows[c][p] = evaluate_monomial<F>(mons[c], x.points[p]);
    return rows;
}

template <class F>
long long hilbert_value(const PointSet& x, const MultiDegree& i) {
    return static_cast<long long>(rank(evaluation_matrix<F>(x, i)));
}

/// Memoized Hilbert-function evaluator.  Once any lower neighbour reaches
/// |X| the value is |X| without another rank computation (H_X is
/// nondecreasing along axes and bounded by |X|).
template <class F>
class HilbertCache {
public:
    explicit HilbertCache(const PointSet& x) : x_(&x) {}

    long long value(const MultiDegree& i) {
        auto it = memo_.find(i);
        if (it != memo_.end()) return it->second;
        long long s = static_cast<long long>(x_->size());
        for (std::size_t j = 0; j < i.size(); ++j) {
            if (i[j] == 0) continue;
            MultiDegree below = i;
            --below[j];
            if (value(below) == s) {
                memo_[i] = s;
                return s;
            }
        }
        long long v = hilbert_value<F>(*x_, i);
        memo_[i] = v;
        return v;
    }

    const PointSet& points() const { return *x_; }

private:
    const PointSet* x_;
    std::map<MultiDegree, long long> memo_;
};

// ---------------------------------------------------------------------------
// Hilbert tables and first differences
// ---------------------------------------------------------------------------

struct HilbertTable {
    BoxTable<long long> table;
    std::vector<bool> stabilized;  ///< per direction
    long long npoints = 0;

    const MultiDegree& box() const { return table.box; }
    long long value(const MultiDegree& i) const { return table.at(i); }
    bool fully_stabilized() const {
        for (bool b : stabilized)
            if (!b) return false;
        return true;
    }
};

struct HilbertTableOptions {
    std::optional<MultiDegree> box;  ///< fixed box override
    std::optional<int> growth_cap;   ///< per-direction cap, default |X| + 1
};

template <class F>
HilbertTable hilbert_table(const PointSet& x, const HilbertTableOptions& opt = {},
                           HilbertCache<F>* shared_cache = nullptr) {
    std::size_t r = x.r();
    long long s = static_cast<long long>(x.size());
    HilbertCache<F> local(x);
    HilbertCache<F>& cache = shared_cache ? *shared_cache : local;

    HilbertTable out;
    out.npoints = s;
    out.stabilized.assign(r, false);

    if (opt.box) {
        out.table = BoxTable<long long>(*opt.box);
        for_each_degree(*opt.box, [&](const MultiDegree& i) { out.table.at(i) = cache.value(i); });
        // stabilization flags still reflect what the box shows
        for (std::size_t j = 0; j < r; ++j) out.stabilized[j] = true;
        for_each_degree(*opt.box, [&](const MultiDegree& i) {
            for (std::size_t j = 0; j < r; ++j) {
                if (i[j] != (*opt.box)[j] || i[j] == 0) continue;
                MultiDegree below = i;
                --below[j];
                if (out.table.at(i) != out.table.at(below)) out.stabilized[j] = false;
            }
        });
        return out;
    }

    int cap = opt.growth_cap.value_or(static_cast<int>(s) + 1);
    MultiDegree box(r);
    for (std::size_t j = 0; j < r; ++j) {
        int tj = static_cast<int>(projection(x, j + 1).size());
        box[j] = std::min(tj + 1, cap);
    }

    while (true) {
        std::vector<bool> stable(r, true);
        for_each_degree(box, [&](const MultiDegree& i) {
            for (std::size_t j = 0; j < r; ++j) {
                if (i[j] != box[j] || i[j] == 0) continue;
                MultiDegree below = i;
                --below[j];
                if (cache.value(i) != cache.value(below)) stable[j] = false;
            }
        });
        bool all_stable = true;
        for (bool b : stable) all_stable = all_stable && b;
        bool corner_ok = cache.value(box) == s;

        if (all_stable && corner_ok) {
            out.stabilized.assign(r, true);
            break;
        }
        bool grew = false;
        for (std::size_t j = 0; j < r; ++j) {
            bool want = !stable[j] || (all_stable && !corner_ok);
            if (want && box[j] < cap) {
                ++box[j];
                grew = true;
            }
        }
        if (!grew) {
            out.stabilized = stable;
            if (!corner_ok) out.stabilized.assign(r, false);
            break;  // reported unstabilized, never silent
        }
    }

    out.table = BoxTable<long long>(box);
    for_each_degree(box, [&](const MultiDegree& i) { out.table.at(i) = cache.value(i); });
    return out;
}

struct DeltaTable {
    BoxTable<long long> table;  ///< values may be negative
    long long npoints = 0;

    const MultiDegree& box() const { return table.box; }
    long long value(const MultiDegree& i) const { return table.at(i); }
};

/// First difference: 2^r-term alternating sum over the unit cube below i,
/// with H = 0 outside N^r.
inline DeltaTable delta_table(const HilbertTable& h) {
    std::size_t r = h.box().size();
    DeltaTable d;
    d.npoints = h.npoints;
    d.table = BoxTable<long long>(h.box());
    for_each_degree(h.box(), [&](const MultiDegree& i) {
        long long sum = 0;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            MultiDegree j = i;
            int bits = 0;
            bool inside = true;
            for (std::size_t t = 0; t < r; ++t)
                if (mask & (1u << t)) {
                    ++bits;
                    if (--j[t] < 0) inside = false;
                }
            if (!inside) continue;
            sum += (bits % 2 == 0 ? 1 : -1) * h.value(j);
        }
        d.table.at(i) = sum;
    });
    return d;
}

// ---------------------------------------------------------------------------
// Hilbert-function screens
// ---------------------------------------------------------------------------

struct QuickVerdict {
    bool not_acm = false;
    std::pair<MultiDegree, MultiDegree> witness;  ///< H(i)=H(j)=|X|, H(min)<|X|
};

/// The min{i,j} test: scans pairs of minimal elements of the |X|-locus for a
/// pair whose meet falls outside it.
inline QuickVerdict quick_non_acm_test(const HilbertTable& h) {
    if (!h.fully_stabilized())
        throw std::invalid_argument("quick_non_acm_test: table not stabilized");
    std::vector<MultiDegree> locus;
    for_each_degree(h.box(), [&](const MultiDegree& i) {
        if (h.value(i) == h.npoints) locus.push_back(i);
    });
    auto mins = minimal_elements(locus);
    // first element scanned in reverse-lex, second in lex order
    for (auto a = mins.rbegin(); a != mins.rend(); ++a)
        for (const auto& b : mins) {
            if (*a == b) continue;
            MultiDegree k = degree_min(*a, b);
            if (h.value(k) != h.npoints) return {true, {*a, b}};
        }
    return {false, {}};
}

struct DeltaScreen {
    enum class Kind { Passes, Negative, SupportViolation } kind = Kind::Passes;
    MultiDegree negative_at;                      ///< for Negative
    std::pair<MultiDegree, MultiDegree> support;  ///< (zero entry, nonzero above)
};

/// Necessary-condition screen on the first difference: no negative entry and
/// zero entries upward closed.  Passing does NOT certify ACM.
inline DeltaScreen delta_screen(const DeltaTable& d) {
    DeltaScreen out;
    bool found = false;
    for_each_degree(d.box(), [&](const MultiDegree& i) {
        if (!found && d.value(i) < 0) {
            out.kind = DeltaScreen::Kind::Negative;
            out.negative_at = i;
            found = true;
        }
    });
    if (found) return out;
    for_each_degree(d.box(), [&](const MultiDegree& z) {
        if (found || d.value(z) != 0) return;
        for_each_degree(d.box(), [&](const MultiDegree& a) {
            if (found || a == z || !dominates(a, z)) return;
            if (d.value(a) != 0) {
                out.kind = DeltaScreen::Kind::SupportViolation;
                out.support = {z, a};
                found = true;
            }
        });
    });
    return out;
}

/// True iff d equals the Hilbert function of the given artinian monomial
/// quotient on the whole box.
inline bool verify_delta_against_monomial_ideal(const DeltaTable& d, const MonomialIdeal& ideal) {
    bool ok = true;
    for_each_degree(d.box(), [&](const MultiDegree& i) {
        if (ok && d.value(i) != monomial_ideal_hilbert(ideal, i)) ok = false;
    });
    return ok;
}

}  // namespace mpacm
