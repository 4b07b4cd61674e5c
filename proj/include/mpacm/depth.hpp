#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpacm/field.hpp"
#include "mpacm/hilbert.hpp"
#include "mpacm/matrix.hpp"
#include "mpacm/multidegree.hpp"
#include "mpacm/points.hpp"

namespace mpacm {

// ---------------------------------------------------------------------------
// Forms
// ---------------------------------------------------------------------------

/// A linear form in the variables of one factor (1-based index).
struct LinearForm {
    std::size_t factor = 0;
    std::vector<Rat> coeffs;  ///< length n_factor + 1
};

/// A graded form given by coefficients in the monomial basis of its degree
/// (basis order = monomials_of_degree).
struct GradedForm {
    MultiDegree degree;
    std::vector<Rat> coeffs;
};

inline GradedForm to_graded_form(const LinearForm& l, const MultiDegree& dims) {
    if (l.factor < 1 || l.factor > dims.size())
        throw std::invalid_argument("LinearForm: factor index out of range");
    if (static_cast<int>(l.coeffs.size()) != dims[l.factor - 1] + 1)
        throw std::invalid_argument("LinearForm: wrong coefficient count");
    GradedForm g;
    g.degree = unit_degree(dims.size(), l.factor - 1);
    // monomials of degree e_j are the factor's variables, in basis order
    g.coeffs = l.coeffs;
    return g;
}

/// A form reduced modulo I_X: its degree and its values at the points.
template <class F>
struct EvalForm {
    MultiDegree degree;
    std::vector<F> values;
    std::vector<Rat> coeffs;  ///< original coefficients, for reporting
};

template <class F>
EvalForm<F> evaluate_form(const GradedForm& g, const PointSet& x) {
    auto mons = monomials_of_degree(g.degree, x.dims);
    if (mons.size() != g.coeffs.size())
        throw std::invalid_argument("GradedForm: coefficient count does not match basis");
    EvalForm<F> out;
    out.degree = g.degree;
    out.coeffs = g.coeffs;
    out.values.assign(x.size(), F(0));
    for (std::size_t t = 0; t < mons.size(); ++t) {
        if (is_zero(g.coeffs[t])) continue;
        F c = to_field<F>(g.coeffs[t]);
        for (std::size_t p = 0; p < x.size(); ++p)
            out.values[p] += c * evaluate_monomial<F>(mons[t], x.points[p]);
    }
    return out;
}

template <class F>
bool nonvanishing_on(const EvalForm<F>& f, const PointSet& x) {
    for (std::size_t p = 0; p < x.size(); ++p)
        if (is_zero(f.values[p])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Degree slices in coefficient space
// ---------------------------------------------------------------------------

/// Basis of a graded piece of an ideal, as coefficient vectors in the
/// monomial basis of R_i.
template <class F>
struct DegreeSlice {
    MultiDegree degree;
    std::vector<std::vector<F>> basis;
};

/// (I_X)_i = kernel of the evaluation matrix.
template <class F>
DegreeSlice<F> ideal_slice(const PointSet& x, const MultiDegree& i) {
    return {i, kernel_basis(evaluation_matrix<F>(x, i))};
}

/// Row-space basis of (I_X)_i + sum_m F_m * R_{i - deg F_m}, in coefficient
/// space.  Used for cross-checks; the production path works in evaluation
/// space (QuotientHilbert below).
template <class F>
DegreeSlice<F> extended_slice(const PointSet& x, const std::vector<GradedForm>& forms,
                              const MultiDegree& i) {
    auto mons = monomials_of_degree(i, x.dims);
    std::map<Monomial, std::size_t> index;
    for (std::size_t t = 0; t < mons.size(); ++t) index[mons[t]] = t;

    SpanBuilder<F> sb;
    std::vector<std::vector<F>> basis;
    auto keep = [&](std::vector<F> row) {
        if (sb.add(row)) basis.push_back(std::move(row));
    };
    for (auto& v : kernel_basis(evaluation_matrix<F>(x, i))) keep(std::move(v));

    for (const GradedForm& f : forms) {
        MultiDegree rest = i - f.degree;
        bool ok = true;
        for (int c : rest) ok = ok && c >= 0;
        if (!ok) continue;
        auto fmons = monomials_of_degree(f.degree, x.dims);
        for (const Monomial& nu : monomials_of_degree(rest, x.dims)) {
            std::vector<F> row(mons.size(), F(0));
            for (std::size_t t = 0; t < fmons.size(); ++t) {
                if (is_zero(f.coeffs[t])) continue;
                Monomial prod;
                prod.exps.resize(nu.exps.size());
                for (std::size_t j = 0; j < nu.exps.size(); ++j) {
                    prod.exps[j].resize(nu.exps[j].size());
                    for (std::size_t v = 0; v < nu.exps[j].size(); ++v)
                        prod.exps[j][v] = nu.exps[j][v] + fmons[t].exps[j][v];
                }
                row[index.at(prod)] += to_field<F>(f.coeffs[t]);
            }
            keep(std::move(row));
        }
    }
    return {i, std::move(basis)};
}

// ---------------------------------------------------------------------------
// Quotient Hilbert functions in evaluation space
// ---------------------------------------------------------------------------

/// Hilbert function of R/(I_X + (F_1,...,F_k)) for forms reduced mod I_X.
/// Since R_i / (I_X)_i embeds into k^|X| by evaluation,
///   H(i) = H_X(i) - dim span { pointwise F_m * mu : mu in R_{i - deg F_m} },
/// so every elimination runs over vectors of length |X|.
template <class F>
class QuotientHilbert {
public:
    QuotientHilbert(HilbertCache<F>& hx, std::vector<EvalForm<F>> forms)
        : hx_(&hx), forms_(std::move(forms)) {}

    long long value(const MultiDegree& i) {
        auto it = memo_.find(i);
        if (it != memo_.end()) return it->second;
        // H = 0 is upward closed: R_{i+e} = R_e * R_i
        for (std::size_t j = 0; j < i.size(); ++j) {
            if (i[j] == 0) continue;
            MultiDegree below = i;
            --below[j];
            if (value(below) == 0) {
                memo_[i] = 0;
                return 0;
            }
        }
        const PointSet& x = hx_->points();
        SpanBuilder<F> sb;
        for (const EvalForm<F>& f : forms_) {
            MultiDegree rest = i - f.degree;
            bool ok = true;
            for (int c : rest) ok = ok && c >= 0;
            if (!ok) continue;
            for (const Monomial& mu : monomials_of_degree(rest, x.dims)) {
                std::vector<F> row(x.size());
                for (std::size_t p = 0; p < x.size(); ++p)
                    row[p] = f.values[p] * evaluate_monomial<F>(mu, x.points[p]);
                sb.add(std::move(row));
            }
        }
        long long v = hx_->value(i) - static_cast<long long>(sb.dim());
        if (v < 0) throw std::logic_error("QuotientHilbert: negative dimension");
        memo_[i] = v;
        return v;
    }

    const std::vector<EvalForm<F>>& forms() const { return forms_; }

private:
    HilbertCache<F>* hx_;
    std::vector<EvalForm<F>> forms_;
    std::map<MultiDegree, long long> memo_;
};

/// dim ker of multiplication by L : (R/J)_i -> (R/J)_{i + deg L}, via
///   H_{R/J}(i) - H_{R/J}(i+e) + H_{R/(J,L)}(i+e).
template <class F>
long long multiplication_kernel_dim(QuotientHilbert<F>& quot_j, QuotientHilbert<F>& quot_jl,
                                    const MultiDegree& form_degree, const MultiDegree& i) {
    MultiDegree up = i + form_degree;
    long long kd = quot_j.value(i) - quot_j.value(up) + quot_jl.value(up);
    if (kd < 0)
        throw std::logic_error("multiplication_kernel_dim: negative kernel (rank inconsistency)");
    return kd;
}

// ---------------------------------------------------------------------------
// Depth search
// ---------------------------------------------------------------------------

struct DepthWitness {
    std::size_t stage = 0;  ///< 1-based factor index
    std::size_t trial = 0;  ///< 1-based trial number within the stage
    std::vector<Rat> coeffs;
    MultiDegree degree;  ///< first offending degree (lex order)
    long long kernel_dim = 0;
};

struct DepthReport {
    int depth = 0;
    bool acm = false;
    bool probable = false;  ///< true when a blocked stage is only probabilistic
    std::vector<LinearForm> sequence;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    MultiDegree box;  ///< kernel scan box (hilbert box grown by one)
    std::vector<DepthWitness> witnesses;
    bool artinian_checked = false;  ///< depth = r: H_{R/J_r} matched delta H
};

inline constexpr std::uint64_t kDefaultSeed = 2024;

template <class F>
DepthReport compute_depth(const PointSet& x, unsigned trials = 5,
                          std::uint64_t seed = kDefaultSeed) {
    if (trials < 1) throw std::invalid_argument("compute_depth: trials must be >= 1");
    std::size_t r = x.r();
    HilbertCache<F> cache(x);
    HilbertTable ht = hilbert_table<F>(x, {}, &cache);
    if (!ht.fully_stabilized())
        throw std::runtime_error("compute_depth: Hilbert table failed to stabilize");

    MultiDegree scan_box = ht.box();
    for (auto& c : scan_box) ++c;  // the kernel identity references degrees i + e_k

    DepthReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.box = scan_box;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);

    std::vector<EvalForm<F>> accepted;
    for (std::size_t k = 1; k <= r; ++k) {
        QuotientHilbert<F> quot_j(cache, accepted);
        bool stage_ok = false;
        for (unsigned t = 1; t <= trials && !stage_ok; ++t) {
            LinearForm lf;
            lf.factor = k;
            EvalForm<F> ef;
            int guard = 0;
            do {
                if (++guard > 1000)
                    throw std::runtime_error("compute_depth: cannot find nonvanishing form");
                lf.coeffs.assign(x.dims[k - 1] + 1, Rat(0));
                for (auto& c : lf.coeffs) c = Rat(dist(rng));
                ef = evaluate_form<F>(to_graded_form(lf, x.dims), x);
            } while (!nonvanishing_on(ef, x));

            std::vector<EvalForm<F>> with_l = accepted;
            with_l.push_back(ef);
            QuotientHilbert<F> quot_jl(cache, with_l);

            std::optional<DepthWitness> offending;
            for_each_degree(scan_box, [&](const MultiDegree& i) {
                if (offending) return;
                long long kd = multiplication_kernel_dim(quot_j, quot_jl, ef.degree, i);
                if (kd > 0) offending = DepthWitness{k, t, lf.coeffs, i, kd};
            });
            if (offending) {
                rep.witnesses.push_back(*offending);
            } else {
                accepted.push_back(ef);
                rep.sequence.push_back(lf);
                stage_ok = true;
            }
        }
        if (!stage_ok) break;
    }
    rep.depth = static_cast<int>(rep.sequence.size());
    rep.acm = rep.depth == static_cast<int>(r);
    rep.probable = !rep.acm;

    if (rep.acm) {
        // artinian cross-check: the full quotient's Hilbert function must
        // coincide with the first difference of H_X and sum to |X|
        QuotientHilbert<F> quot_full(cache, accepted);
        DeltaTable d = delta_table(ht);
        long long total = 0;
        bool match = true;
        for_each_degree(ht.box(), [&](const MultiDegree& i) {
            long long v = quot_full.value(i);
            total += v;
            if (v != d.value(i)) match = false;
        });
        if (!match || total != static_cast<long long>(x.size()))
            throw std::logic_error("compute_depth: artinian quotient does not match delta H");
        rep.artinian_checked = true;
        rep.probable = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// ACM verdict pipeline
// ---------------------------------------------------------------------------

enum class AcmStatus { ACM, NotACM, ProbablyNotACM };

struct AcmReport {
    AcmStatus status = AcmStatus::ProbablyNotACM;
    std::string certificate;  ///< human-readable reason
    std::optional<DepthReport> depth;
    std::optional<QuickVerdict> quick;
    std::optional<DeltaScreen> screen;
};

namespace detail {
/// Blocked-stage corroboration: at least two failed trials at the blocking
/// stage agreeing on the first offending degree and kernel dimension.  The
/// kernel dimension is upper semicontinuous in the form's coefficients, so
/// agreement of independent random forms certifies a generic obstruction.
inline bool consistent_blocking_witnesses(const DepthReport& rep) {
    std::size_t stage = static_cast<std::size_t>(rep.depth) + 1;
    std::vector<const DepthWitness*> ws;
    for (const auto& w : rep.witnesses)
        if (w.stage == stage) ws.push_back(&w);
    if (ws.size() < 2) return false;
    for (std::size_t t = 1; t < ws.size(); ++t)
        if (ws[t]->degree != ws[0]->degree || ws[t]->kernel_dim != ws[0]->kernel_dim)
            return false;
    return true;
}
}  // namespace detail

template <class F>
AcmReport is_acm(const PointSet& x, unsigned trials = 5, std::uint64_t seed = kDefaultSeed) {
    AcmReport rep;

    // (1) geometric shortcut for P^1 x P^n / P^n x P^1
    if (x.r() == 2 && (x.dims[0] == 1 || x.dims[1] == 1)) {
        StarResult star = has_property_star(x);
        if (star.satisfied) {
            rep.status = AcmStatus::ACM;
            rep.certificate = "geometric: the combinatorial completion property holds";
            return rep;
        }
    }

    // (2) Hilbert-function screens
    HilbertCache<F> cache(x);
    HilbertTable ht = hilbert_table<F>(x, {}, &cache);
    if (ht.fully_stabilized()) {
        QuickVerdict quick = quick_non_acm_test(ht);
        rep.quick = quick;
        if (quick.not_acm) {
            rep.status = AcmStatus::NotACM;
            rep.certificate = "Hilbert function not min-closed at level |X|";
            return rep;
        }
        DeltaScreen screen = delta_screen(delta_table(ht));
        rep.screen = screen;
        if (screen.kind == DeltaScreen::Kind::Negative) {
            rep.status = AcmStatus::NotACM;
            rep.certificate = "negative first-difference entry";
            return rep;
        }
        if (screen.kind == DeltaScreen::Kind::SupportViolation) {
            rep.status = AcmStatus::NotACM;
            rep.certificate = "first-difference support not downward closed";
            return rep;
        }
    }

    // (3) depth decides
    DepthReport depth = compute_depth<F>(x, trials, seed);
    rep.depth = depth;
    if (depth.acm) {
        rep.status = AcmStatus::ACM;
        rep.certificate = "regular sequence of length r verified on the box";
    } else if (detail::consistent_blocking_witnesses(depth)) {
        rep.status = AcmStatus::NotACM;
        rep.certificate = "generic multiplication kernel (randomized)";
    } else {
        rep.status = AcmStatus::ProbablyNotACM;
        rep.certificate = "all trials failed at stage " + std::to_string(depth.depth + 1) +
                          " with inconsistent witnesses";
    }
    return rep;
}

}  // namespace mpacm
