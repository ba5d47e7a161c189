#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "divfree/monomial.hpp"
#include "divfree/polynomial.hpp"

namespace divfree {

namespace detail {

// Term vector sorted descending under the active order; the engine-internal
// polynomial representation for reductions.
using TermVec = std::vector<std::pair<Monomial, Rational>>;

inline TermVec to_termvec(const Polynomial& p, const MonomialOrder& order) {
    TermVec v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return v;
}

inline Polynomial from_termvec(const TermVec& v, const ContextPtr& ctx) {
    Polynomial p(ctx);
    for (const auto& [m, c] : v) p.add_term(m, c);
    return p;
}

// h - c * (m * g), merged in order.
inline TermVec axpy(const TermVec& h, const Rational& c, const Monomial& m, const TermVec& g,
                    const MonomialOrder& order) {
    TermVec out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() && j < g.size()) {
        const Monomial gm = g[j].first * m;
        if (h[i].first == gm) {
            Rational coeff = h[i].second - c * g[j].second;
            if (coeff != 0) out.emplace_back(h[i].first, std::move(coeff));
            ++i;
            ++j;
        } else if (order.greater(h[i].first, gm)) {
            out.push_back(h[i]);
            ++i;
        } else {
            out.emplace_back(gm, -c * g[j].second);
            ++j;
        }
    }
    for (; i < h.size(); ++i) out.push_back(h[i]);
    for (; j < g.size(); ++j) out.emplace_back(g[j].first * m, -c * g[j].second);
    return out;
}

inline TermVec scale_termvec(TermVec v, const Rational& c) {
    for (auto& [m, coeff] : v) coeff *= c;
    return v;
}

// Full reduction against a list of reducers; deterministic (first divisor in
// list order wins, leading terms retired to the remainder when irreducible).
inline TermVec reduce_full(TermVec h, const std::vector<TermVec>& basis, const MonomialOrder& order) {
    TermVec remainder;
    while (!h.empty()) {
        bool reduced = false;
        for (const TermVec& g : basis) {
            if (g.empty()) continue;
            if (g.front().first.divides(h.front().first)) {
                const Monomial quot = h.front().first / g.front().first;
                const Rational factor = h.front().second / g.front().second;
                h = axpy(h, factor, quot, g, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(h.front());
            h.erase(h.begin());
        }
    }
    return remainder;
}

}  // namespace detail

// Reduced Groebner basis together with its order and the generators it came from.
struct GroebnerBasis {
    std::vector<Polynomial> generators;  // monic, auto-reduced, sorted descending by leading monomial
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> source_ideal_generators;
    ContextPtr context;

    bool contains_one() const {
        return generators.size() == 1 && generators.front().is_constant() &&
               !generators.front().is_zero();
    }
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    require_same_context(f.context(), g.context());
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.context());
    const auto [fm, fc] = f.leading_term(order);
    const auto [gm, gc] = g.leading_term(order);
    const Monomial l = lcm(fm, gm);
    return f.multiply_term(l / fm, 1 / fc) - g.multiply_term(l / gm, 1 / gc);
}

// Buchberger with normal pair selection (smallest lcm under the order) and the
// product and chain criteria, followed by full auto-reduction. The result is
// the unique reduced basis for the ideal and order. An empty generator list
// yields the zero ideal (pass fallback_ctx so the basis knows its ring).
inline GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& gens,
                                            const MonomialOrder& order = MonomialOrder::grevlex(),
                                            ContextPtr fallback_ctx = nullptr) {
    GroebnerBasis out;
    out.order = order;
    out.source_ideal_generators = gens;

    ContextPtr ctx = std::move(fallback_ctx);
    for (const auto& g : gens) {
        if (!ctx) ctx = g.context();
        require_same_context(ctx, g.context());
    }
    if (!ctx) throw std::invalid_argument("groebner basis of an empty generator list needs a context");
    out.context = ctx;

    std::vector<detail::TermVec> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(detail::to_termvec(g, order));

    struct Pair {
        Monomial l;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (!(a.l == b.l)) return order.less(a.l, b.l);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pending;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back(Pair{lcm(basis[i].front().first, basis[j].front().first), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        for (const Pair& p : pending)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);

        const Monomial& lmi = basis[p.i].front().first;
        const Monomial& lmj = basis[p.j].front().first;
        // Product criterion: coprime leading monomials reduce to zero.
        if (p.l == lmi * lmj) continue;
        // Chain criterion: a third element dividing the lcm whose pairs with
        // both ends are already settled makes this pair redundant.
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].front().first.divides(p.l) && !is_pending(p.i, k) && !is_pending(p.j, k))
                redundant = true;
        }
        if (redundant) continue;

        // S = l/lmi * fi/lci - l/lmj * fj/lcj.
        const Monomial qi = p.l / lmi;
        const Monomial qj = p.l / lmj;
        detail::TermVec lhs;
        lhs.reserve(basis[p.i].size());
        for (const auto& [m, c] : basis[p.i]) lhs.emplace_back(m * qi, c / basis[p.i].front().second);
        detail::TermVec s = detail::axpy(lhs, 1 / basis[p.j].front().second, qj, basis[p.j], order);

        detail::TermVec r = detail::reduce_full(std::move(s), basis, order);
        if (!r.empty()) {
            basis.push_back(std::move(r));
            push_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by another.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].front().first.divides(basis[i].front().first) &&
                !(basis[j].front().first == basis[i].front().first && j > i))
                keep[i] = false;
        }
    }
    std::vector<detail::TermVec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Inter-reduce tails and normalize to monic.
    std::vector<detail::TermVec> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<detail::TermVec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        detail::TermVec r = detail::reduce_full(minimal[i], others, order);
        reduced[i] = detail::scale_termvec(std::move(r), 1 / minimal[i].front().second);
        // reduce_full keeps the (irreducible) leading term first, so monic scaling is safe
    }

    std::sort(reduced.begin(), reduced.end(), [&](const detail::TermVec& a, const detail::TermVec& b) {
        return order.greater(a.front().first, b.front().first);
    });

    for (const auto& v : reduced) out.generators.push_back(detail::from_termvec(v, ctx));
    return out;
}

// Complete reduction of p against the basis; zero iff p lies in the ideal.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    require_same_context(p.context(), gb.context);
    std::vector<detail::TermVec> basis;
    for (const auto& g : gb.generators) basis.push_back(detail::to_termvec(g, gb.order));
    detail::TermVec r = detail::reduce_full(detail::to_termvec(p, gb.order), basis, gb.order);
    return detail::from_termvec(r, p.context());
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
    return normal_form(p, gb).is_zero();
}

// Quotient p / f when the division is exact (a single generator is a Groebner
// basis of its principal ideal, so a zero remainder certifies divisibility).
inline std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& f) {
    require_same_context(p.context(), f.context());
    if (f.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const MonomialOrder order = MonomialOrder::grevlex();
    detail::TermVec h = detail::to_termvec(p, order);
    detail::TermVec g = detail::to_termvec(f, order);
    Polynomial quotient(p.context());
    while (!h.empty()) {
        if (!g.front().first.divides(h.front().first)) return std::nullopt;
        const Monomial m = h.front().first / g.front().first;
        const Rational c = h.front().second / g.front().second;
        quotient.add_term(m, c);
        h = detail::axpy(h, c, m, g, order);
    }
    return quotient;
}

inline bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    if (a.empty() && b.empty()) return true;
    const ContextPtr ctx = a.empty() ? b.front().context() : a.front().context();
    GroebnerBasis ga = reduced_groebner_basis(a);
    GroebnerBasis gb = reduced_groebner_basis(b);
    return ga.generators == gb.generators;
}

}  // namespace divfree
