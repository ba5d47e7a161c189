#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divfree/groebner.hpp"
#include "divfree/hilbert.hpp"
#include "divfree/polynomial.hpp"

namespace divfree {

namespace detail {

inline Polynomial embed_with_aux(const Polynomial& p, const ContextPtr& extended, std::size_t aux_count) {
    Polynomial out(extended);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> exps(aux_count, 0);
        exps.insert(exps.end(), m.exponents().begin(), m.exponents().end());
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

// Drops the first aux_count variables; requires every term to avoid them.
inline Polynomial project_from_aux(const Polynomial& p, const ContextPtr& base, std::size_t aux_count) {
    Polynomial out(base);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> exps(m.exponents().begin() + static_cast<long>(aux_count),
                                   m.exponents().end());
        for (std::size_t i = 0; i < aux_count; ++i)
            if (m.exponent(i) > 0) throw std::logic_error("projection hit an auxiliary variable");
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

inline bool avoids_leading_vars(const Polynomial& p, std::size_t count) {
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < count; ++i)
            if (m.exponent(i) > 0) return false;
    return true;
}

}  // namespace detail

// Generators of the elimination ideal in the trailing variables: a block-order
// basis restricted to the elements free of the leading drop_count variables.
// The result lives in the context with those variables removed.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t drop_count) {
    if (gens.empty()) return {};
    const ContextPtr& ctx = gens.front().context();
    if (drop_count == 0) return reduced_groebner_basis(gens).generators;
    if (drop_count >= ctx->size()) throw std::invalid_argument("cannot eliminate every variable");

    GroebnerBasis gb = reduced_groebner_basis(gens, MonomialOrder::block(drop_count));
    ContextPtr reduced = ctx;
    for (std::size_t i = 0; i < drop_count; ++i) reduced = remove_variable(reduced, 0);

    std::vector<Polynomial> out;
    for (const auto& g : gb.generators)
        if (detail::avoids_leading_vars(g, drop_count))
            out.push_back(detail::project_from_aux(g, reduced, drop_count));
    return out;
}

// a intersect b via the single-variable adjunction t*a + (1-t)*b and elimination.
inline std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a,
                                                const std::vector<Polynomial>& b) {
    if (a.empty()) return {};
    if (b.empty()) return {};
    const ContextPtr& ctx = a.front().context();
    for (const auto& p : b) require_same_context(ctx, p.context());

    ContextPtr ext = prepend_aux_variables(ctx, 1);
    const Polynomial t = Polynomial::variable(ext, 0);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& p : a) gens.push_back(t * detail::embed_with_aux(p, ext, 1));
    for (const auto& p : b) gens.push_back(one_minus_t * detail::embed_with_aux(p, ext, 1));

    GroebnerBasis gb = reduced_groebner_basis(gens, MonomialOrder::block(1));
    std::vector<Polynomial> out;
    for (const auto& g : gb.generators)
        if (detail::avoids_leading_vars(g, 1)) out.push_back(detail::project_from_aux(g, ctx, 1));
    return out;
}

// (i : g^infty) by the Rabinowitsch trick: adjoin 1 - t*g and eliminate t.
inline std::vector<Polynomial> saturate_by_element(const std::vector<Polynomial>& i, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
    const ContextPtr& ctx = g.context();
    ContextPtr ext = prepend_aux_variables(ctx, 1);
    std::vector<Polynomial> gens;
    for (const auto& p : i) gens.push_back(detail::embed_with_aux(p, ext, 1));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, 0) * detail::embed_with_aux(g, ext, 1));
    GroebnerBasis gb = reduced_groebner_basis(gens, MonomialOrder::block(1));
    std::vector<Polynomial> out;
    for (const auto& p : gb.generators)
        if (detail::avoids_leading_vars(p, 1)) out.push_back(detail::project_from_aux(p, ctx, 1));
    return out;
}

// (i : j^infty) as the intersection of the per-generator saturations, iterated
// until the ideal stabilizes (one pass suffices; the second confirms).
inline std::vector<Polynomial> saturate(const std::vector<Polynomial>& i,
                                        const std::vector<Polynomial>& j) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : j)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) throw std::invalid_argument("saturation by the zero ideal");

    std::vector<Polynomial> current = reduced_groebner_basis(i).generators;
    while (true) {
        std::optional<std::vector<Polynomial>> acc;
        for (const auto& g : nonzero) {
            std::vector<Polynomial> part = saturate_by_element(current, g);
            acc = acc ? intersect_ideals(*acc, part) : std::move(part);
        }
        std::vector<Polynomial> next = reduced_groebner_basis(*acc).generators;
        if (next == current) return current;
        current = std::move(next);
    }
}

// g vanishes on V(i) over the algebraic closure iff 1 belongs to i + <1 - t*g>.
inline bool radical_membership(const Polynomial& g, const std::vector<Polynomial>& i) {
    if (g.is_zero()) return true;
    const ContextPtr& ctx = g.context();
    ContextPtr ext = prepend_aux_variables(ctx, 1);
    std::vector<Polynomial> gens;
    for (const auto& p : i) gens.push_back(detail::embed_with_aux(p, ext, 1));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, 0) * detail::embed_with_aux(g, ext, 1));
    return reduced_groebner_basis(gens).contains_one();
}

// Number of standard monomials of a zero-dimensional (as a vector space)
// quotient; nullopt when the quotient is infinite-dimensional.
inline std::optional<std::size_t> quotient_vector_space_dimension(const GroebnerBasis& gb) {
    if (gb.contains_one()) return 0;
    const std::size_t n = gb.context->size();
    std::vector<Monomial> lms = leading_monomials(gb);

    // Finite iff every variable appears as a pure power among the leading terms.
    std::vector<unsigned> bound(n, 0);
    for (const auto& m : lms) {
        std::size_t support = 0, var = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (m.exponent(v) > 0) {
                ++support;
                var = v;
            }
        if (support == 1) bound[var] = bound[var] ? std::min(bound[var], m.exponent(var)) : m.exponent(var);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (bound[v] == 0) return std::nullopt;

    std::size_t count = 0;
    std::vector<unsigned> exps(n, 0);
    auto divisible = [&](const std::vector<unsigned>& e) {
        for (const auto& m : lms) {
            bool div = true;
            for (std::size_t v = 0; v < n && div; ++v)
                if (m.exponent(v) > e[v]) div = false;
            if (div) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            if (!divisible(exps)) ++count;
            return;
        }
        for (unsigned e = 0; e < bound[var]; ++e) {
            exps[var] = e;
            self(self, var + 1);
        }
        exps[var] = 0;
    };
    rec(rec, 0);
    return count;
}

}  // namespace divfree
