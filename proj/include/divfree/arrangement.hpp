#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divfree/divisor.hpp"
#include "divfree/ideal_ops.hpp"
#include "divfree/matrix.hpp"
#include "divfree/polynomial.hpp"
#include "divfree/slice.hpp"

namespace divfree {

// Central line arrangement in P^2: pairwise non-proportional linear forms.
struct LineArrangement {
    std::vector<Polynomial> linear_forms;
};

namespace detail {

inline std::vector<Rational> form_coefficients(const Polynomial& form) {
    const ContextPtr& ctx = form.context();
    std::vector<Rational> coeffs(ctx->size(), Rational(0));
    for (const auto& [m, c] : form.terms()) {
        for (std::size_t v = 0; v < ctx->size(); ++v)
            if (m.exponent(v) == 1) coeffs[v] = c;
    }
    return coeffs;
}

inline std::vector<Rational> cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool all_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

inline std::vector<Rational> normalize_point(std::vector<Rational> p) {
    for (const auto& c : p)
        if (c != 0) {
            const Rational inv = 1 / c;
            for (auto& x : p) x *= inv;
            return p;
        }
    throw std::logic_error("cannot normalize the zero vector");
}

}  // namespace detail

inline LineArrangement make_arrangement(std::vector<Polynomial> forms) {
    if (forms.size() < 2) throw AnalysisError("an arrangement needs at least two lines");
    for (const auto& f : forms) {
        if (f.context()->size() != 3) throw AnalysisError("line arrangements live in three variables");
        if (f.is_zero() || f.homogeneous_degree() != std::optional<unsigned>(1))
            throw AnalysisError("arrangement members must be nonzero linear forms");
    }
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            auto cr = detail::cross(detail::form_coefficients(forms[i]),
                                    detail::form_coefficients(forms[j]));
            if (detail::all_zero(cr))
                throw AnalysisError("duplicate line in arrangement: '" + forms[i].to_string() +
                                    "' and '" + forms[j].to_string() + "'");
        }
    return LineArrangement{std::move(forms)};
}

inline PlaneDivisor arrangement_divisor(const LineArrangement& a) {
    const ContextPtr& ctx = a.linear_forms.front().context();
    return make_divisor(product(a.linear_forms, ctx), a.linear_forms);
}

// Rank of the coefficient matrix; 3 means the arrangement is essential.
inline std::size_t arrangement_rank(const LineArrangement& a) {
    RationalMatrix m(a.linear_forms.size(), 3);
    for (std::size_t i = 0; i < a.linear_forms.size(); ++i) {
        auto c = detail::form_coefficients(a.linear_forms[i]);
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = c[j];
    }
    return m.rank();
}

// Reduced Jacobian scheme of an arrangement: the distinct intersection points,
// their vanishing ideal, its degree and the least degree of a form through all
// points.
struct SingularLocus {
    std::vector<std::vector<Rational>> points;  // normalized: first nonzero coordinate is 1
    std::vector<Polynomial> radical_ideal;
    std::size_t degree = 0;
    unsigned alpha = 0;
    // lines_through[k] = how many arrangement members pass through points[k]
    std::vector<std::size_t> lines_through;
};

// Vanishing ideal of a single projective point: the two independent linear
// forms cut out by the RREF kernel of the evaluation row.
inline std::vector<Polynomial> point_vanishing_ideal(const std::vector<Rational>& point,
                                                     const ContextPtr& ctx) {
    RationalMatrix row(1, 3);
    for (std::size_t j = 0; j < 3; ++j) row(0, j) = point[j];
    std::vector<Polynomial> out;
    for (const auto& v : row.nullspace()) {
        Polynomial form(ctx);
        for (std::size_t j = 0; j < 3; ++j)
            if (v[j] != 0) form.add_term(Monomial::variable(3, j), v[j]);
        out.push_back(std::move(form));
    }
    return out;
}

inline SingularLocus singular_locus(const LineArrangement& a) {
    const ContextPtr& ctx = a.linear_forms.front().context();
    std::vector<std::vector<Rational>> coeffs;
    for (const auto& f : a.linear_forms) coeffs.push_back(detail::form_coefficients(f));

    SingularLocus locus;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < coeffs.size(); ++j) {
            auto p = detail::normalize_point(detail::cross(coeffs[i], coeffs[j]));
            if (std::find(locus.points.begin(), locus.points.end(), p) == locus.points.end())
                locus.points.push_back(std::move(p));
        }
    locus.degree = locus.points.size();

    for (const auto& p : locus.points) {
        std::size_t count = 0;
        for (const auto& c : coeffs) {
            Rational v = c[0] * p[0] + c[1] * p[1] + c[2] * p[2];
            if (v == 0) ++count;
        }
        locus.lines_through.push_back(count);
    }

    std::optional<std::vector<Polynomial>> radical;
    for (const auto& p : locus.points) {
        std::vector<Polynomial> ideal = point_vanishing_ideal(p, ctx);
        radical = radical ? intersect_ideals(*radical, ideal) : std::move(ideal);
    }
    locus.radical_ideal = *radical;

    // alpha: least e with a nonzero degree-e form vanishing at every point,
    // found as a kernel of the evaluation matrix on degree-e monomials.
    for (unsigned e = 1;; ++e) {
        const std::vector<Monomial> monos = monomials_of_degree(3, e);
        RationalMatrix eval(locus.points.size(), monos.size());
        for (std::size_t r = 0; r < locus.points.size(); ++r)
            for (std::size_t c = 0; c < monos.size(); ++c) {
                Rational v(1);
                for (std::size_t var = 0; var < 3; ++var)
                    for (unsigned k = 0; k < monos[c].exponent(var); ++k) v *= locus.points[r][var];
                eval(r, c) = v;
            }
        if (eval.rank() < monos.size()) {
            locus.alpha = e;
            break;
        }
        if (e > locus.points.size() + 1) throw std::logic_error("alpha search exceeded the point count");
    }
    return locus;
}

struct NearPencilReport {
    bool detected = false;
    std::optional<Syzygy> linear_syzygy;
};

// Near-pencil: n-1 concurrent lines plus one line missing their common point.
// A degree-1 syzygy on J_Q certifies it for essential arrangements; the
// combinatorial count is the classification and the final verdict.
inline NearPencilReport near_pencil_detect(const LineArrangement& a, const SingularLocus& locus) {
    if (a.linear_forms.size() < 3) throw AnalysisError("near-pencil detection needs at least 3 lines");
    const std::size_t n = a.linear_forms.size();

    NearPencilReport report;
    for (std::size_t k = 0; k < locus.points.size(); ++k)
        if (locus.lines_through[k] == n - 1) report.detected = true;

    PlaneDivisor divisor = arrangement_divisor(a);
    auto kernel = degree_slice_kernel(jacobian_ideal(divisor), divisor.degree);  // component degree 1
    if (!kernel.empty()) report.linear_syzygy = make_syzygy(divisor, kernel.front());

    // Remark-level equivalence only binds essential arrangements.
    if (arrangement_rank(a) == 3 && report.detected != report.linear_syzygy.has_value())
        throw std::logic_error("near-pencil classification and linear syzygy disagree");
    return report;
}

inline NearPencilReport near_pencil_detect(const LineArrangement& a) {
    return near_pencil_detect(a, singular_locus(a));
}

}  // namespace divfree
