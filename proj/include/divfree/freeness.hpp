#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "divfree/arrangement.hpp"
#include "divfree/divisor.hpp"
#include "divfree/groebner.hpp"
#include "divfree/hilbert.hpp"
#include "divfree/ideal_ops.hpp"
#include "divfree/module.hpp"
#include "divfree/resolution.hpp"
#include "divfree/slice.hpp"

namespace divfree {

// ---------------------------------------------------------------------------
// Milnor / Tjurina totals
// ---------------------------------------------------------------------------

struct MilnorTjurinaReport {
    std::size_t tjurina_total = 0;
    std::size_t milnor_total = 0;
    bool quasihomogeneous = false;
    unsigned attempt = 0;  // which seeded coordinate change certified the totals
};

namespace detail {

inline RationalMatrix random_invertible_matrix(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    while (true) {
        RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
        if (m.is_invertible()) return m;
    }
}

struct AffineTotals {
    std::size_t tjurina = 0;
    std::size_t milnor = 0;
};

// Totals in the affine chart z = 1 after the coordinate change: Tjurina from
// <f, f_x, f_y>; Milnor from <f_x, f_y> with the critical points off the curve
// removed by saturating at f.
inline std::optional<AffineTotals> affine_totals(const Polynomial& f_projective,
                                                 const RationalMatrix& change) {
    const Polynomial g = f_projective.coordinate_change(change);
    const Polynomial f = g.dehomogenize(g.context()->size() - 1);
    const Polynomial fx = f.derivative(0);
    const Polynomial fy = f.derivative(1);

    GroebnerBasis tjurina_gb = reduced_groebner_basis({f, fx, fy});
    auto tjurina = quotient_vector_space_dimension(tjurina_gb);
    if (!tjurina) return std::nullopt;

    GroebnerBasis milnor_gb = reduced_groebner_basis({fx, fy});
    auto milnor_all = quotient_vector_space_dimension(milnor_gb);
    if (!milnor_all) return std::nullopt;

    std::vector<Polynomial> off_curve = saturate_by_element({fx, fy}, f);
    auto extras = quotient_vector_space_dimension(reduced_groebner_basis(off_curve));
    if (!extras) return std::nullopt;

    return AffineTotals{*tjurina, *milnor_all - *extras};
}

}  // namespace detail

// Global quasihomogeneity test: total Tjurina vs total Milnor number, computed
// exactly in a chart certified by agreement across two independent seeded
// coordinate changes. Throws AnalysisError for non-isolated singularities or
// when no certified chart is found.
inline MilnorTjurinaReport milnor_tjurina(const PlaneDivisor& d, unsigned long seed = 1,
                                          unsigned max_attempts = 5) {
    const std::vector<Polynomial> jac = jacobian_ideal(d);
    const std::size_t height = ideal_height(jac);
    if (height >= 3) return MilnorTjurinaReport{0, 0, true, 0};  // smooth: vacuously quasihomogeneous
    if (height < 2) throw AnalysisError("non-isolated singular locus (height < 2)");

    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        RationalMatrix m1 = attempt == 0 ? RationalMatrix::identity(3)
                                         : detail::random_invertible_matrix(3, rng);
        RationalMatrix m2 = detail::random_invertible_matrix(3, rng);
        auto t1 = detail::affine_totals(d.defining_polynomial, m1);
        auto t2 = detail::affine_totals(d.defining_polynomial, m2);
        if (t1 && t2 && t1->tjurina == t2->tjurina && t1->milnor == t2->milnor) {
            MilnorTjurinaReport out;
            out.tjurina_total = t1->tjurina;
            out.milnor_total = t1->milnor;
            out.quasihomogeneous = (out.milnor_total == out.tjurina_total);
            out.attempt = attempt;
            return out;
        }
    }
    throw AnalysisError("no coordinate change kept the singular points affine after " +
                        std::to_string(max_attempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Regular-syzygy search (Theorem 2.1 steps 2-4 as a procedure)
// ---------------------------------------------------------------------------

struct SearchConfig {
    std::size_t max_trials = 200;
    unsigned long seed = 1;
    unsigned max_coefficient = 3;  // max-norm ceiling for the enumerated coefficient vectors
};

enum class SearchStatus {
    Found,            // witness present
    NoneCertified,    // definitive negative: all matrix entries sit in a height <= 2 ideal
    BudgetExhausted,  // no witness within the trial budget (not a definitive negative)
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<Syzygy> witness;
    std::string certificate;
    std::size_t trials_used = 0;
};

namespace detail {

// Deterministic per-shell shuffle keyed by the seed and the shell norm
// (std::shuffle is not pinned down by the standard, a hand-rolled
// Fisher-Yates over mt19937_64 is).
inline std::vector<std::vector<int>> finalize_shell(std::vector<std::vector<int>> shell,
                                                    unsigned long seed, unsigned norm) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (norm + 1)));
    for (std::size_t i = shell.size(); i > 1; --i) {
        std::size_t j = rng() % i;
        std::swap(shell[i - 1], shell[j]);
    }
    return shell;
}

// All integer vectors of the given length with max-norm exactly `norm`,
// lexicographic; each shell is shuffled deterministically from the seed.
inline std::vector<std::vector<int>> coefficient_shell(std::size_t length, unsigned norm,
                                                       unsigned long seed) {
    std::vector<std::vector<int>> shell;
    std::vector<int> v(length, -static_cast<int>(norm));
    while (true) {
        int max_abs = 0;
        for (int c : v) max_abs = std::max(max_abs, std::abs(c));
        if (static_cast<unsigned>(max_abs) == norm) shell.push_back(v);
        std::size_t i = length;
        bool rolled_over = true;
        while (i-- > 0) {
            if (v[i] < static_cast<int>(norm)) {
                ++v[i];
                for (std::size_t j = i + 1; j < length; ++j) v[j] = -static_cast<int>(norm);
                rolled_over = false;
                break;
            }
        }
        if (rolled_over) return finalize_shell(std::move(shell), seed, norm);
    }
}

inline Polynomial polynomial_from_vector(const std::vector<int>& coeffs,
                                         const std::vector<Monomial>& monos, const ContextPtr& ctx) {
    Polynomial p(ctx);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.add_term(monos[i], Rational(coeffs[i]));
    return p;
}

inline bool try_witness(const PlaneDivisor& d, const std::vector<Polynomial>& comps,
                        SearchOutcome& out) {
    for (const auto& c : comps)
        if (c.is_zero()) return false;
    if (!is_regular_sequence(comps)) return false;
    out.status = SearchStatus::Found;
    out.witness = make_syzygy(d, comps);
    return true;
}

}  // namespace detail

// Searches for a regular syzygy among the minimal syzygy columns and, when the
// matrix has two columns of degrees d1 <= d2, among the combinations
// column2 - f*column1 with f drawn from a deterministic seeded enumeration of
// small-integer coefficient vectors of ascending max-norm (general rational
// combinations when d1 == d2). A definitive negative is reported only with the
// height certificate on the ideal of all matrix entries.
inline SearchOutcome find_regular_syzygy(const PlaneDivisor& d, const SyzygyMatrix& matrix,
                                         const SearchConfig& config = {}) {
    const ContextPtr& ctx = d.defining_polynomial.context();
    SearchOutcome out;

    // Column order: ascending degree, ties by index.
    std::vector<std::size_t> order(matrix.columns.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return matrix.column_degrees[a] < matrix.column_degrees[b];
    });

    for (std::size_t idx : order) {
        ++out.trials_used;
        if (detail::try_witness(d, matrix.columns[idx].components, out)) return out;
    }

    // Height certificate: every syzygy is a combination of the columns, so its
    // components lie in the ideal of all entries; height <= 2 rules them all out.
    std::vector<Polynomial> entries;
    for (const auto& col : matrix.columns)
        for (const auto& c : col.components)
            if (!c.is_zero()) entries.push_back(c);
    if (!entries.empty() && ideal_height(entries) <= 2) {
        out.status = SearchStatus::NoneCertified;
        out.certificate = "all syzygy matrix entries generate an ideal of height " +
                          std::to_string(ideal_height(entries));
        return out;
    }

    if (matrix.columns.size() != 2) return out;  // search is defined for the rank-2 case

    const std::size_t lo = order[0], hi = order[1];
    const unsigned d1 = matrix.column_degrees[lo];
    const unsigned d2 = matrix.column_degrees[hi];
    const std::vector<Polynomial>& col1 = matrix.columns[lo].components;
    const std::vector<Polynomial>& col2 = matrix.columns[hi].components;

    if (d1 == d2) {
        // General rational combinations a*col1 + b*col2.
        for (unsigned norm = 1; norm <= config.max_coefficient; ++norm) {
            for (const auto& ab : detail::coefficient_shell(2, norm, config.seed)) {
                if (out.trials_used >= config.max_trials) return out;
                ++out.trials_used;
                std::vector<Polynomial> comps;
                for (std::size_t i = 0; i < col1.size(); ++i)
                    comps.push_back(col1[i].scale(Rational(ab[0])) + col2[i].scale(Rational(ab[1])));
                if (detail::try_witness(d, comps, out)) return out;
            }
        }
        return out;
    }

    const std::vector<Monomial> monos = monomials_of_degree(ctx->size(), d2 - d1);
    for (unsigned norm = 1; norm <= config.max_coefficient; ++norm) {
        for (const auto& vec : detail::coefficient_shell(monos.size(), norm, config.seed)) {
            if (out.trials_used >= config.max_trials) return out;
            ++out.trials_used;
            const Polynomial f = detail::polynomial_from_vector(vec, monos, ctx);
            std::vector<Polynomial> comps;
            for (std::size_t i = 0; i < col1.size(); ++i) comps.push_back(col2[i] - f * col1[i]);
            if (detail::try_witness(d, comps, out)) return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Section-3 bounds and criteria
// ---------------------------------------------------------------------------

struct BoundsReport {
    // deg sqrt(J_Q) <= d^2 + d + 1 for a regular syzygy of degree d >= 2
    struct RegularDegreeBound {
        unsigned d = 0;
        std::size_t radical_degree = 0;
        std::size_t bound = 0;
        bool satisfied = false;
    };
    std::optional<RegularDegreeBound> regular_degree_bound;
    bool regular_degree_bound_refused_d1 = false;

    // deg sqrt(J_Q) >= n^2 - 5n + 8 forces non-freeness away from near-pencils
    struct NonFreenessThreshold {
        std::size_t radical_degree = 0;
        long threshold = 0;
        bool triggered = false;
        bool verdict_not_free = false;
    };
    std::optional<NonFreenessThreshold> non_freeness_threshold;

    // alpha(sqrt(J_F)) <= beta(J_F) + 1
    struct AlphaBetaBound {
        unsigned alpha = 0;
        unsigned beta = 0;
        bool satisfied = false;
        bool attained = false;
    };
    std::optional<AlphaBetaBound> alpha_beta_bound;
};

inline BoundsReport bounds_and_criteria(const SyzygyMatrix& matrix,
                                        const std::optional<Syzygy>& regular_witness,
                                        const SingularLocus& locus, std::size_t n_lines,
                                        bool near_pencil) {
    BoundsReport out;

    if (regular_witness && !syzygy_is_zero(*regular_witness)) {
        if (regular_witness->degree < 2) {
            out.regular_degree_bound_refused_d1 = true;  // the d = 1 case is excluded
        } else {
            BoundsReport::RegularDegreeBound b;
            b.d = regular_witness->degree;
            b.radical_degree = locus.degree;
            b.bound = static_cast<std::size_t>(b.d) * b.d + b.d + 1;
            b.satisfied = locus.degree <= b.bound;
            out.regular_degree_bound = b;
        }
    }

    {
        BoundsReport::NonFreenessThreshold t;
        t.radical_degree = locus.degree;
        const long n = static_cast<long>(n_lines);
        t.threshold = n * n - 5 * n + 8;
        t.triggered = static_cast<long>(locus.degree) >= t.threshold && !near_pencil;
        t.verdict_not_free = t.triggered;
        out.non_freeness_threshold = t;
    }

    if (!matrix.column_degrees.empty()) {
        BoundsReport::AlphaBetaBound b;
        b.beta = *std::min_element(matrix.column_degrees.begin(), matrix.column_degrees.end());
        b.alpha = locus.alpha;
        b.satisfied = b.alpha <= b.beta + 1;
        b.attained = b.alpha == b.beta + 1;
        out.alpha_beta_bound = b;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Containment of the reduced Jacobian scheme in V(I^(A,B,C))
// ---------------------------------------------------------------------------

// True iff every generator of i_abc(s) vanishes on the singular locus:
// by direct evaluation at the points of a line arrangement.
inline bool containment_check(const Syzygy& s, const SingularLocus& locus) {
    for (const auto& g : i_abc(s))
        for (const auto& p : locus.points)
            if (g.evaluate(p) != 0) return false;
    return true;
}

// General divisors: radical membership of each generator against the
// saturated Jacobian ideal.
inline bool containment_check(const Syzygy& s, const PlaneDivisor& d) {
    const std::vector<Polynomial> jac = jacobian_ideal(d);
    const ContextPtr& ctx = d.defining_polynomial.context();
    std::vector<Polynomial> irrelevant;
    for (std::size_t i = 0; i < ctx->size(); ++i) irrelevant.push_back(Polynomial::variable(ctx, i));
    const std::vector<Polynomial> jac_sat = saturate(jac, irrelevant);
    for (const auto& g : i_abc(s))
        if (!g.is_zero() && !radical_membership(g, jac_sat)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Variety identity V(J_F) = V(I1) cap V(I2) for a free divisor (two-way
// radical membership)
// ---------------------------------------------------------------------------

struct VarietyIdentityReport {
    bool holds = false;
    std::vector<Polynomial> ideal_one;
    std::vector<Polynomial> ideal_two;
};

inline VarietyIdentityReport variety_identity_check(const PlaneDivisor& d, const SyzygyMatrix& matrix) {
    if (matrix.columns.size() != 2)
        throw AnalysisError("the variety identity needs a free divisor (two syzygy columns)");
    VarietyIdentityReport out;
    out.ideal_one = i_abc(make_syzygy(d, matrix.columns[0].components));
    out.ideal_two = i_abc(make_syzygy(d, matrix.columns[1].components));

    std::vector<Polynomial> joint;
    for (const auto& g : out.ideal_one)
        if (!g.is_zero()) joint.push_back(g);
    for (const auto& g : out.ideal_two)
        if (!g.is_zero()) joint.push_back(g);

    const std::vector<Polynomial> jac = jacobian_ideal(d);
    bool forward = true;  // V(J_F) inside V(I1) cap V(I2)
    for (const auto& g : joint)
        if (!radical_membership(g, jac)) forward = false;
    bool backward = true;  // V(I1) cap V(I2) inside V(J_F)
    for (const auto& g : jac)
        if (!radical_membership(g, joint)) backward = false;
    out.holds = forward && backward;
    return out;
}

// ---------------------------------------------------------------------------
// The divisor-level verdict
// ---------------------------------------------------------------------------

struct FreenessReport {
    unsigned divisor_degree = 0;
    std::size_t jacobian_height = 0;
    bool smooth = false;  // empty Jacobian scheme; reported free by convention
    bool is_free = false;
    std::size_t projective_dimension = 0;
    SyzygyMatrix syzygy_matrix;
    std::vector<unsigned> generator_degrees;           // degrees of the Jacobian generators
    std::optional<std::vector<unsigned>> exponents;    // {1, a, b} for a free divisor
    std::optional<MilnorTjurinaReport> quasihomogeneity;
    SearchOutcome regular_syzygy_search;
    std::optional<SingularLocus> locus;                // line arrangements only
    bool near_pencil = false;
    std::optional<NearPencilReport> near_pencil_report;
    std::optional<BoundsReport> bounds;
};

struct AnalyzeOptions {
    SearchConfig search;
    bool run_search = true;
    bool run_milnor_tjurina = true;
    std::size_t resolution_cap = 8;
    unsigned long seed = 1;
};

inline std::optional<LineArrangement> arrangement_of(const PlaneDivisor& d) {
    if (!d.factors || d.factors->size() < 2) return std::nullopt;
    for (const auto& f : *d.factors)
        if (f.homogeneous_degree() != std::optional<unsigned>(1)) return std::nullopt;
    return make_arrangement(*d.factors);
}

inline FreenessReport analyze_freeness(const PlaneDivisor& d, const AnalyzeOptions& options = {}) {
    FreenessReport report;
    report.divisor_degree = d.degree;

    const std::vector<Polynomial> jac = jacobian_ideal(d);
    report.jacobian_height = ideal_height(jac);
    for (const auto& g : jac) report.generator_degrees.push_back(g.is_zero() ? 0 : g.total_degree());

    if (report.jacobian_height >= 3) {
        report.smooth = true;
        report.is_free = true;  // by convention, with the smooth flag set
        report.quasihomogeneity = MilnorTjurinaReport{0, 0, true, 0};
        return report;
    }
    if (report.jacobian_height < 2)
        throw AnalysisError("non-isolated singular locus (height of the Jacobian ideal is " +
                            std::to_string(report.jacobian_height) + ")");

    report.syzygy_matrix = first_syzygies(jac);
    GradedResolution res = free_resolution(jac, ResolveOptions{options.resolution_cap, {}});
    report.projective_dimension = res.length();
    report.is_free = (report.projective_dimension == 2);

    if (report.is_free) {
        std::vector<unsigned> exps{1};
        for (unsigned dcol : report.syzygy_matrix.column_degrees) exps.push_back(dcol);
        std::sort(exps.begin(), exps.end());
        report.exponents = std::move(exps);
    }

    if (options.run_milnor_tjurina)
        report.quasihomogeneity = milnor_tjurina(d, options.seed);

    if (options.run_search)
        report.regular_syzygy_search = find_regular_syzygy(d, report.syzygy_matrix, options.search);

    if (auto arr = arrangement_of(d)) {
        report.locus = singular_locus(*arr);
        report.near_pencil_report = near_pencil_detect(*arr, *report.locus);
        report.near_pencil = report.near_pencil_report->detected;
        std::optional<Syzygy> witness;
        if (report.regular_syzygy_search.witness) witness = report.regular_syzygy_search.witness;
        report.bounds = bounds_and_criteria(report.syzygy_matrix, witness, *report.locus,
                                            arr->linear_forms.size(), report.near_pencil);
    }
    return report;
}

}  // namespace divfree
