#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divfree/groebner.hpp"
#include "divfree/monomial.hpp"
#include "divfree/polynomial.hpp"

namespace divfree {

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_less(a, b);
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

// Numerator of the Hilbert series of R/I for a monomial ideal I, over the
// common denominator (1-t)^n. Pivot recursion:
//   N(I) = N(I + <x>) + t * N(I : x).
inline std::vector<long long> hilbert_numerator_monomial(std::vector<Monomial> gens, std::size_t n_vars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {0};

    // Complete-intersection shortcut: pairwise coprime generators.
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (lcm(gens[i], gens[j]).degree() != gens[i].degree() + gens[j].degree()) coprime = false;
    if (coprime) {
        std::vector<long long> num{1};
        for (const auto& m : gens) {
            std::vector<long long> next(num.size() + m.degree(), 0);
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k] += num[k];
                next[k + m.degree()] -= num[k];
            }
            num = std::move(next);
        }
        return num;
    }

    // Pivot: the most frequent variable among non-pure-power generators.
    std::vector<std::size_t> freq(n_vars, 0);
    for (const auto& m : gens) {
        std::size_t support = 0;
        for (std::size_t v = 0; v < n_vars; ++v)
            if (m.exponent(v) > 0) ++support;
        if (support < 2) continue;
        for (std::size_t v = 0; v < n_vars; ++v)
            if (m.exponent(v) > 0) ++freq[v];
    }
    std::size_t pivot = static_cast<std::size_t>(
        std::max_element(freq.begin(), freq.end()) - freq.begin());

    std::vector<Monomial> plus;  // I + <x_pivot>
    plus.push_back(Monomial::variable(n_vars, pivot));
    std::vector<Monomial> colon;  // I : x_pivot
    for (const auto& m : gens) {
        if (m.exponent(pivot) == 0) {
            plus.push_back(m);
            colon.push_back(m);
        } else {
            std::vector<unsigned> e = m.exponents();
            --e[pivot];
            colon.push_back(Monomial(std::move(e)));
        }
    }
    std::vector<long long> a = hilbert_numerator_monomial(std::move(plus), n_vars);
    std::vector<long long> b = hilbert_numerator_monomial(std::move(colon), n_vars);
    std::vector<long long> out(std::max(a.size(), b.size() + 1), 0);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k + 1] += b[k];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

// Factors (1-t)^k out of the numerator; returns {k, quotient}.
inline std::pair<std::size_t, std::vector<long long>> strip_one_minus_t(std::vector<long long> num) {
    std::size_t k = 0;
    auto value_at_one = [](const std::vector<long long>& p) {
        long long s = 0;
        for (long long c : p) s += c;
        return s;
    };
    while (!num.empty() && value_at_one(num) == 0 &&
           !(num.size() == 1 && num[0] == 0)) {
        // Divide by (1-t): q(t) = n(t)/(1-t) via synthetic division.
        std::vector<long long> q(num.size() - 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            carry += num[i];
            q[i] = carry;
        }
        num = std::move(q);
        ++k;
    }
    return {k, std::move(num)};
}

}  // namespace detail

// Hilbert series numerator, Hilbert polynomial and projective scheme degree of
// a graded quotient R/I. The degree is read off the series, so it is invariant
// under saturation at the irrelevant maximal ideal.
struct HilbertData {
    std::vector<long long> series_numerator;   // coefficients of N(t), HS = N/(1-t)^n
    std::vector<Rational> hilbert_polynomial;  // coefficients in T, low degree first
    std::size_t scheme_degree = 0;             // projective degree (0 for an empty scheme)
    int quotient_dimension = 0;                // Krull dimension of R/I (-1 for the unit ideal)
};

inline std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> out;
    for (const auto& g : gb.generators) out.push_back(g.leading_term(gb.order).first);
    return out;
}

// Krull dimension of R/in(I) via maximal independent variable sets: the
// largest S such that no generator of the leading-term ideal is supported
// inside S. Equals the dimension of R/I.
inline int krull_dimension_monomial(const std::vector<Monomial>& gens, std::size_t n_vars) {
    std::vector<Monomial> minimal = detail::minimalize_monomials(gens);
    if (!minimal.empty() && minimal.front().is_one()) return -1;
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n_vars); ++mask) {
        bool independent = true;
        for (const auto& m : minimal) {
            bool inside = true;
            for (std::size_t v = 0; v < n_vars && inside; ++v)
                if (m.exponent(v) > 0 && !(mask & (std::uint64_t(1) << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, static_cast<int>(__builtin_popcountll(mask)));
    }
    return best;
}

inline int krull_dimension(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("krull_dimension of an empty generator list");
    GroebnerBasis gb = reduced_groebner_basis(gens);
    return krull_dimension_monomial(leading_monomials(gb), gb.context->size());
}

inline int krull_dimension(const GroebnerBasis& gb) {
    return krull_dimension_monomial(leading_monomials(gb), gb.context->size());
}

// height(I) = n_vars - dim(R/I); the unit ideal (dim -1) yields the sentinel
// n_vars + 1.
inline std::size_t ideal_height(const GroebnerBasis& gb) {
    const int dim = krull_dimension(gb);
    return static_cast<std::size_t>(static_cast<int>(gb.context->size()) - dim);
}

inline std::size_t ideal_height(const std::vector<Polynomial>& gens) {
    return ideal_height(reduced_groebner_basis(gens));
}

// k homogeneous polynomials form a regular sequence iff the height of the
// ideal they generate equals k.
inline bool is_regular_sequence(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return true;
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("zero polynomial in a regular-sequence test");
        if (!p.is_homogeneous()) throw std::invalid_argument("regular-sequence test needs homogeneous input");
    }
    for (const auto& p : polys)
        if (p.is_constant()) return false;  // unit ideal is not proper
    return ideal_height(polys) == polys.size();
}

inline HilbertData hilbert_data(const GroebnerBasis& gb) {
    const std::size_t n = gb.context->size();
    HilbertData data;
    data.series_numerator = detail::hilbert_numerator_monomial(leading_monomials(gb), n);
    data.quotient_dimension = krull_dimension(gb);

    auto [vanishing, q] = detail::strip_one_minus_t(data.series_numerator);
    const int dim_from_series =
        (data.series_numerator.size() == 1 && data.series_numerator[0] == 0)
            ? -1
            : static_cast<int>(n) - static_cast<int>(vanishing);
    if (dim_from_series != data.quotient_dimension)
        throw std::logic_error("hilbert series order of vanishing disagrees with Krull dimension");

    if (data.quotient_dimension <= 0) {
        data.scheme_degree = 0;
        data.hilbert_polynomial = {};
        return data;
    }

    long long q1 = 0;
    for (long long c : q) q1 += c;
    data.scheme_degree = static_cast<std::size_t>(q1);

    // HP(T) = sum_j q_j * binom(T - j + D - 1, D - 1), D = quotient dimension.
    const std::size_t D = static_cast<std::size_t>(data.quotient_dimension);
    std::vector<Rational> hp(D, Rational(0));
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == 0) continue;
        // Expand binom(T + (D - 1 - j), D - 1) as a polynomial in T.
        std::vector<Rational> term{Rational(1)};
        for (std::size_t i = 0; i < D - 1; ++i) {
            // multiply by (T + D - 1 - j - i)
            const Rational shift(static_cast<long>(D) - 1 - static_cast<long>(j) - static_cast<long>(i));
            std::vector<Rational> next(term.size() + 1, Rational(0));
            for (std::size_t k = 0; k < term.size(); ++k) {
                next[k + 1] += term[k];
                next[k] += term[k] * shift;
            }
            term = std::move(next);
        }
        Rational factorial(1);
        for (std::size_t i = 2; i < D; ++i) factorial *= static_cast<long>(i);
        const Rational qj(static_cast<long>(q[j]));
        for (std::size_t k = 0; k < term.size(); ++k) hp[k] += term[k] * qj / factorial;
    }
    data.hilbert_polynomial = std::move(hp);
    return data;
}

inline HilbertData hilbert_data(const std::vector<Polynomial>& gens) {
    return hilbert_data(reduced_groebner_basis(gens));
}

}  // namespace divfree
