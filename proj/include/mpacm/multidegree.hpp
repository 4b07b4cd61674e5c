#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mpacm {

/// A multidegree (i_1,...,i_r) in N^r.
using MultiDegree = std::vector<int>;

inline void check_same_r(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multidegree arity mismatch");
}

/// Componentwise product partial order: a >= b in every slot.
inline bool dominates(const MultiDegree& a, const MultiDegree& b) {
    check_same_r(a, b);
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] < b[t]) return false;
    return true;
}

inline MultiDegree degree_min(const MultiDegree& a, const MultiDegree& b) {
    check_same_r(a, b);
    MultiDegree m(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) m[t] = std::min(a[t], b[t]);
    return m;
}

inline MultiDegree unit_degree(std::size_t r, std::size_t factor) {
    MultiDegree e(r, 0);
    e.at(factor) = 1;
    return e;
}

inline MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
    check_same_r(a, b);
    MultiDegree s(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) s[t] = a[t] + b[t];
    return s;
}

inline MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
    check_same_r(a, b);
    MultiDegree s(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) s[t] = a[t] - b[t];
    return s;
}

/// All elements of s not strictly dominating another element; the result is
/// an antichain, returned in sorted (lex) order.
inline std::vector<MultiDegree> minimal_elements(std::vector<MultiDegree> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<MultiDegree> out;
    for (const auto& a : s) {
        bool minimal = true;
        for (const auto& b : s) {
            if (b != a && dominates(a, b)) { minimal = false; break; }
        }
        if (minimal) out.push_back(a);
    }
    return out;
}

/// Up-set D_S generated by a finite antichain S; min D_S = S.
struct UpSet {
    std::vector<MultiDegree> generators;

    explicit UpSet(std::vector<MultiDegree> gens = {})
        : generators(minimal_elements(std::move(gens))) {}

    bool contains(const MultiDegree& i) const {
        for (const auto& g : generators)
            if (dominates(i, g)) return true;
        return false;
    }
    bool empty() const { return generators.empty(); }
};

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long b = 1;
    for (int t = 1; t <= k; ++t) b = b * (n - k + t) / t;
    return b;
}

/// dim_k R_i for the coordinate ring of P^{n_1} x ... x P^{n_r}:
/// product of C(i_j + n_j, n_j).
inline long long dim_R(const MultiDegree& i, const MultiDegree& dims) {
    check_same_r(i, dims);
    long long d = 1;
    for (std::size_t j = 0; j < i.size(); ++j) d *= binomial(i[j] + dims[j], dims[j]);
    return d;
}

/// A monomial of R: per-factor exponent vectors (length n_j + 1).
struct Monomial {
    std::vector<std::vector<int>> exps;

    MultiDegree degree() const {
        MultiDegree d;
        d.reserve(exps.size());
        for (const auto& e : exps)
            d.push_back(std::accumulate(e.begin(), e.end(), 0));
        return d;
    }
    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

namespace detail {
/// Exponent vectors of length nvars summing to d, lex-descending.
inline std::vector<std::vector<int>> factor_exponents(int nvars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}
}  // namespace detail

/// Deterministic enumeration of the monomial basis of R_i (graded-lex within
/// each factor, factors nested left to right).  Length = dim_R(i, dims).
inline std::vector<Monomial> monomials_of_degree(const MultiDegree& i, const MultiDegree& dims) {
    check_same_r(i, dims);
    std::vector<std::vector<std::vector<int>>> per;
    per.reserve(i.size());
    for (std::size_t j = 0; j < i.size(); ++j)
        per.push_back(detail::factor_exponents(dims[j] + 1, i[j]));

    std::vector<Monomial> out;
    Monomial cur;
    cur.exps.resize(i.size());
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == per.size()) { out.push_back(cur); return; }
        for (const auto& e : per[j]) {
            cur.exps[j] = e;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Monomial ideals in the reduced (artinian) ring k[x_{1,1},...,x_{r,n_r}].
// Generators arrive as power products of the per-factor irrelevant-type
// ideals (x_{j,1},...,x_{j,n_j})^{a_j}, optionally times fixed monomials, and
// are expanded to plain monomial generators.
// ---------------------------------------------------------------------------

/// A monomial in the reduced ring, as one flat exponent vector over the
/// concatenated variables (n_1 + ... + n_r of them).
using ReducedMonomial = std::vector<int>;

struct MonomialIdeal {
    MultiDegree nvars;  ///< n_j reduced variables per factor
    std::vector<ReducedMonomial> gens;
};

namespace detail {
inline std::vector<ReducedMonomial> reduced_monomials(const MultiDegree& i,
                                                      const MultiDegree& nvars) {
    std::vector<std::vector<std::vector<int>>> per;
    for (std::size_t j = 0; j < i.size(); ++j)
        per.push_back(factor_exponents(nvars[j], i[j]));
    std::vector<ReducedMonomial> out;
    ReducedMonomial cur;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == per.size()) { out.push_back(cur); return; }
        for (const auto& e : per[j]) {
            std::size_t before = cur.size();
            cur.insert(cur.end(), e.begin(), e.end());
            self(self, j + 1);
            cur.resize(before);
        }
    };
    rec(rec, 0);
    return out;
}

inline bool divides(const ReducedMonomial& g, const ReducedMonomial& m) {
    for (std::size_t t = 0; t < g.size(); ++t)
        if (g[t] > m[t]) return false;
    return true;
}
}  // namespace detail

/// Build a monomial ideal from power-product terms: each term is a
/// multidegree (a_1,...,a_r) standing for prod_j (x_{j,1},...,x_{j,n_j})^{a_j}.
inline MonomialIdeal power_product_ideal(const MultiDegree& nvars,
                                         const std::vector<MultiDegree>& terms) {
    MonomialIdeal ideal{nvars, {}};
    for (const auto& t : terms) {
        check_same_r(t, nvars);
        // all reduced monomials of exact multidegree t generate (irr)^t
        for (auto& m : detail::reduced_monomials(t, nvars)) ideal.gens.push_back(std::move(m));
    }
    return ideal;
}

/// dim_k (S/I)_i: reduced monomials of multidegree i not divisible by any
/// generator.
inline long long monomial_ideal_hilbert(const MonomialIdeal& ideal, const MultiDegree& i) {
    long long count = 0;
    for (const auto& m : detail::reduced_monomials(i, ideal.nvars)) {
        bool killed = false;
        for (const auto& g : ideal.gens)
            if (detail::divides(g, m)) { killed = true; break; }
        if (!killed) ++count;
    }
    return count;
}

}  // namespace mpacm
