#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "divfree/groebner.hpp"
#include "divfree/matrix.hpp"
#include "divfree/monomial.hpp"
#include "divfree/polynomial.hpp"
#include "divfree/slice.hpp"

namespace divfree {

// Element of a graded free module F = (+)_i R(-shifts[i]). A homogeneous
// element of degree D has component i homogeneous of degree D - shifts[i].
struct ModuleElement {
    std::vector<Polynomial> components;
    std::vector<unsigned> shifts;
};

inline bool element_is_zero(const ModuleElement& e) {
    for (const auto& c : e.components)
        if (!c.is_zero()) return false;
    return true;
}

// Degree as a graded module element; nullopt for the zero element or an
// inhomogeneous one (use element_is_zero to tell them apart).
inline std::optional<unsigned> element_degree(const ModuleElement& e) {
    std::optional<unsigned> deg;
    for (std::size_t i = 0; i < e.components.size(); ++i) {
        const Polynomial& c = e.components[i];
        if (c.is_zero()) continue;
        auto d = c.homogeneous_degree();
        if (!d) return std::nullopt;
        const unsigned total = *d + e.shifts.at(i);
        if (deg && *deg != total) return std::nullopt;
        deg = total;
    }
    return deg;
}

inline bool element_is_homogeneous(const ModuleElement& e) {
    return element_is_zero(e) || element_degree(e).has_value();
}

inline ModuleElement element_sub(const ModuleElement& a, const ModuleElement& b) {
    ModuleElement out = a;
    for (std::size_t i = 0; i < out.components.size(); ++i)
        out.components[i] = out.components[i] - b.components.at(i);
    return out;
}

inline ModuleElement element_scale(const ModuleElement& a, const Rational& c) {
    ModuleElement out = a;
    for (auto& comp : out.components) comp = comp.scale(c);
    return out;
}

inline ModuleElement element_mul(const ModuleElement& a, const Polynomial& p) {
    ModuleElement out = a;
    for (auto& comp : out.components) comp = comp * p;
    return out;
}

// sum_i components[i] * gens[i]; exact zero iff the element is a syzygy.
inline Polynomial apply_to_generators(const ModuleElement& e, const std::vector<Polynomial>& gens) {
    if (e.components.size() != gens.size())
        throw std::invalid_argument("module element rank does not match generator count");
    Polynomial acc = Polynomial::zero(gens.front().context());
    for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + e.components[i] * gens[i];
    return acc;
}

inline ModuleElement apply_to_columns(const ModuleElement& e, const std::vector<ModuleElement>& columns) {
    if (e.components.size() != columns.size())
        throw std::invalid_argument("module element rank does not match column count");
    ModuleElement acc = columns.front();
    for (auto& c : acc.components) c = Polynomial::zero(c.context());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (std::size_t j = 0; j < acc.components.size(); ++j)
            acc.components[j] = acc.components[j] + e.components[i] * columns[i].components.at(j);
    }
    return acc;
}

namespace detail {

struct MTerm {
    std::size_t comp;
    Monomial mono;
    Rational coeff;
};

// Terms sorted descending under term-over-position: ring order on monomials,
// lower component wins ties.
using MVec = std::vector<MTerm>;

inline bool mterm_greater(const MTerm& a, const MTerm& b, const MonomialOrder& order) {
    if (!(a.mono == b.mono)) return order.greater(a.mono, b.mono);
    return a.comp < b.comp;
}

inline MVec mvec_from_element(const ModuleElement& e, const MonomialOrder& order) {
    MVec v;
    for (std::size_t i = 0; i < e.components.size(); ++i)
        for (const auto& [m, c] : e.components[i].terms()) v.push_back(MTerm{i, m, c});
    std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return mterm_greater(a, b, order); });
    return v;
}

inline ModuleElement mvec_to_element(const MVec& v, std::size_t rank, const ContextPtr& ctx,
                                     std::vector<unsigned> shifts) {
    ModuleElement e;
    e.components.assign(rank, Polynomial::zero(ctx));
    e.shifts = std::move(shifts);
    for (const auto& t : v) e.components.at(t.comp).add_term(t.mono, t.coeff);
    return e;
}

// h - c * (m * g), merged in order.
inline MVec mvec_axpy(const MVec& h, const Rational& c, const Monomial& m, const MVec& g,
                      const MonomialOrder& order) {
    MVec out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() && j < g.size()) {
        MTerm gt{g[j].comp, g[j].mono * m, Rational(0)};
        if (h[i].comp == gt.comp && h[i].mono == gt.mono) {
            Rational coeff = h[i].coeff - c * g[j].coeff;
            if (coeff != 0) out.push_back(MTerm{h[i].comp, h[i].mono, std::move(coeff)});
            ++i;
            ++j;
        } else if (mterm_greater(h[i], gt, order)) {
            out.push_back(h[i]);
            ++i;
        } else {
            gt.coeff = -c * g[j].coeff;
            out.push_back(std::move(gt));
            ++j;
        }
    }
    for (; i < h.size(); ++i) out.push_back(h[i]);
    for (; j < g.size(); ++j) out.push_back(MTerm{g[j].comp, g[j].mono * m, -c * g[j].coeff});
    return out;
}

struct Tracked {
    MVec vec;  // element of the ambient module R^rank
    MVec cof;  // cofactors over the input elements: vec == sum cof_j * input_j
};

// Top-reduction only: reduce the leading term while some basis leading term
// (same component) divides it. Keeps the cofactor invariant exact.
inline void top_reduce_tracked(Tracked& h, const std::vector<Tracked>& basis, const MonomialOrder& order) {
    bool progress = true;
    while (!h.vec.empty() && progress) {
        progress = false;
        for (const Tracked& g : basis) {
            if (g.vec.empty()) continue;
            const MTerm& lead_g = g.vec.front();
            const MTerm& lead_h = h.vec.front();
            if (lead_g.comp != lead_h.comp || !lead_g.mono.divides(lead_h.mono)) continue;
            const Monomial quot = lead_h.mono / lead_g.mono;
            const Rational factor = lead_h.coeff / lead_g.coeff;
            h.vec = mvec_axpy(h.vec, factor, quot, g.vec, order);
            h.cof = mvec_axpy(h.cof, factor, quot, g.cof, order);
            progress = true;
            break;
        }
    }
}

// Full normal form without tracking (membership tests).
inline MVec full_reduce(MVec h, const std::vector<MVec>& basis, const MonomialOrder& order) {
    MVec remainder;
    while (!h.empty()) {
        bool reduced = false;
        for (const MVec& g : basis) {
            if (g.empty()) continue;
            if (g.front().comp == h.front().comp && g.front().mono.divides(h.front().mono)) {
                h = mvec_axpy(h, h.front().coeff / g.front().coeff, h.front().mono / g.front().mono, g,
                              order);
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

// Module Buchberger over the inputs, tracking cofactors back to them. Every
// S-pair is processed (no pruning criteria), so the cofactors of the pairs
// that reduce to zero generate the full syzygy module of the inputs.
struct ModuleGB {
    std::vector<Tracked> basis;
    std::vector<MVec> syzygies;  // elements of R^s over the inputs
};

inline ModuleGB module_groebner_with_syzygies(const std::vector<MVec>& inputs, std::size_t n_vars,
                                              const MonomialOrder& order) {
    ModuleGB out;
    const std::size_t s = inputs.size();
    for (std::size_t j = 0; j < s; ++j) {
        if (inputs[j].empty()) {
            // A zero input contributes the unit syzygy on its slot.
            out.syzygies.push_back(MVec{MTerm{j, Monomial::one(n_vars), Rational(1)}});
            continue;
        }
        Tracked t;
        t.vec = inputs[j];
        t.cof = MVec{MTerm{j, Monomial::one(n_vars), Rational(1)}};
        out.basis.push_back(std::move(t));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (out.basis[i].vec.front().comp == out.basis[j].vec.front().comp)
                pairs.emplace_back(i, j);
    };
    for (std::size_t j = 1; j < out.basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const MTerm& li = out.basis[i].vec.front();
        const MTerm& lj = out.basis[j].vec.front();
        const Monomial l = lcm(li.mono, lj.mono);

        Tracked sp;
        const Monomial qi = l / li.mono;
        const Monomial qj = l / lj.mono;
        sp.vec = mvec_axpy({}, Rational(-1) / li.coeff, qi, out.basis[i].vec, order);
        sp.cof = mvec_axpy({}, Rational(-1) / li.coeff, qi, out.basis[i].cof, order);
        sp.vec = mvec_axpy(sp.vec, Rational(1) / lj.coeff, qj, out.basis[j].vec, order);
        sp.cof = mvec_axpy(sp.cof, Rational(1) / lj.coeff, qj, out.basis[j].cof, order);

        top_reduce_tracked(sp, out.basis, order);
        if (sp.vec.empty()) {
            if (!sp.cof.empty()) out.syzygies.push_back(std::move(sp.cof));
        } else {
            out.basis.push_back(std::move(sp));
            push_pairs_for(out.basis.size() - 1);
        }
    }
    return out;
}

inline std::vector<MVec> untracked_basis(const std::vector<MVec>& inputs, std::size_t n_vars,
                                         const MonomialOrder& order) {
    std::vector<MVec> nonzero;
    for (const auto& v : inputs)
        if (!v.empty()) nonzero.push_back(v);
    ModuleGB gb = module_groebner_with_syzygies(nonzero, n_vars, order);
    std::vector<MVec> basis;
    for (auto& t : gb.basis) basis.push_back(std::move(t.vec));
    return basis;
}

}  // namespace detail

// True iff elem lies in the submodule generated by gens (all in one ambient
// free module over one context).
inline bool module_membership(const ModuleElement& elem, const std::vector<ModuleElement>& gens) {
    const MonomialOrder order = MonomialOrder::grevlex();
    if (element_is_zero(elem)) return true;
    if (gens.empty()) return false;
    const std::size_t n_vars = elem.components.front().context()->size();
    std::vector<detail::MVec> basis_inputs;
    for (const auto& g : gens) basis_inputs.push_back(detail::mvec_from_element(g, order));
    std::vector<detail::MVec> basis = detail::untracked_basis(basis_inputs, n_vars, order);
    detail::MVec nf = detail::full_reduce(detail::mvec_from_element(elem, order), basis, order);
    return nf.empty();
}

// Minimal generating subset of a list of homogeneous module elements:
// ascending degree (ties by index), keeping an element only when it is not a
// combination of the ones already kept.
inline std::vector<ModuleElement> minimalize_generators(const std::vector<ModuleElement>& elements) {
    struct Entry {
        std::size_t index;
        unsigned degree;
    };
    std::vector<Entry> order_list;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (element_is_zero(elements[i])) continue;
        auto d = element_degree(elements[i]);
        if (!d) throw std::invalid_argument("minimalize_generators needs homogeneous elements");
        order_list.push_back(Entry{i, *d});
    }
    std::stable_sort(order_list.begin(), order_list.end(), [](const Entry& a, const Entry& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.index < b.index;
    });

    std::vector<ModuleElement> kept;
    for (const Entry& e : order_list) {
        if (!module_membership(elements[e.index], kept)) kept.push_back(elements[e.index]);
    }
    return kept;
}

// Minimal generators of the syzygy module of a list of homogeneous module
// elements. The result lives in R^s with shifts = the element degrees.
inline std::vector<ModuleElement> module_syzygies(const std::vector<ModuleElement>& elements) {
    if (elements.empty()) return {};
    const MonomialOrder order = MonomialOrder::grevlex();
    const ContextPtr ctx = elements.front().components.front().context();
    std::vector<unsigned> shifts;
    for (const auto& e : elements) {
        if (element_is_zero(e)) {
            shifts.push_back(0);  // degree of a zero column: its unit syzygy has shift 0
            continue;
        }
        auto d = element_degree(e);
        if (!d) throw std::invalid_argument("module_syzygies needs homogeneous elements");
        shifts.push_back(*d);
    }

    std::vector<detail::MVec> inputs;
    for (const auto& e : elements) inputs.push_back(detail::mvec_from_element(e, order));
    detail::ModuleGB gb = detail::module_groebner_with_syzygies(inputs, ctx->size(), order);

    std::vector<ModuleElement> raw;
    for (const auto& s : gb.syzygies)
        raw.push_back(detail::mvec_to_element(s, elements.size(), ctx, shifts));
    return minimalize_generators(raw);
}

// First syzygy module of a tuple of homogeneous polynomials, as minimal
// generators with deterministic ordering.
struct SyzygyMatrix {
    std::vector<ModuleElement> columns;
    std::vector<unsigned> element_degrees;  // degrees in (+) R(-deg f_i)
    std::vector<unsigned> column_degrees;   // component degree when all f_i share a degree
};

inline SyzygyMatrix first_syzygies(const std::vector<Polynomial>& polys) {
    if (polys.empty()) throw std::invalid_argument("first_syzygies of an empty tuple");
    const ContextPtr& ctx = polys.front().context();
    std::optional<unsigned> common;
    bool common_ok = true;
    std::vector<ModuleElement> rank1;
    for (const auto& p : polys) {
        require_same_context(ctx, p.context());
        if (p.is_zero()) throw std::invalid_argument("first_syzygies needs nonzero polynomials");
        auto d = p.homogeneous_degree();
        if (!d) throw std::invalid_argument("first_syzygies needs homogeneous polynomials");
        if (common && *common != *d) common_ok = false;
        common = d;
        rank1.push_back(ModuleElement{{p}, {0}});
    }

    SyzygyMatrix out;
    out.columns = module_syzygies(rank1);
    for (const auto& col : out.columns) {
        auto d = element_degree(col);
        if (!d) throw std::logic_error("inhomogeneous syzygy column");
        out.element_degrees.push_back(*d);
        out.column_degrees.push_back(common_ok ? *d - *common : *d);
    }
    return out;
}

// Koszul relation: polys[j] at slot i, -polys[i] at slot j.
inline ModuleElement koszul_syzygy(std::size_t i, std::size_t j, const std::vector<Polynomial>& polys) {
    if (i == j) throw std::invalid_argument("koszul_syzygy needs distinct indices");
    if (i >= polys.size() || j >= polys.size()) throw std::out_of_range("koszul index out of range");
    const ContextPtr& ctx = polys.front().context();
    ModuleElement e;
    e.components.assign(polys.size(), Polynomial::zero(ctx));
    for (const auto& p : polys) {
        auto d = p.homogeneous_degree();
        e.shifts.push_back(d ? *d : 0);
    }
    e.components[i] = polys[j];
    e.components[j] = -polys[i];
    return e;
}

// Dimension of the degree-D slice of the submodule generated by columns inside
// the ambient module with the given row shifts (pure linear algebra).
inline std::size_t module_slice_dimension(const std::vector<ModuleElement>& columns,
                                          const std::vector<unsigned>& row_shifts, unsigned degree,
                                          const ContextPtr& ctx) {
    const std::size_t n = ctx->size();
    // Row index: (component, monomial of degree D - row_shifts[comp]).
    std::vector<std::pair<std::size_t, Monomial>> rows;
    for (std::size_t comp = 0; comp < row_shifts.size(); ++comp) {
        if (row_shifts[comp] > degree) continue;
        for (const auto& m : monomials_of_degree(n, degree - row_shifts[comp])) rows.emplace_back(comp, m);
    }
    std::map<std::pair<std::size_t, std::string>, std::size_t> row_index;
    auto key = [](std::size_t comp, const Monomial& m) {
        std::string k;
        for (unsigned e : m.exponents()) k += std::to_string(e) + ",";
        return std::make_pair(comp, k);
    };
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[key(rows[i].first, rows[i].second)] = i;

    std::vector<std::vector<Rational>> cols;
    for (const auto& col : columns) {
        auto d = element_degree(col);
        if (!d || *d > degree) continue;
        for (const auto& mult : monomials_of_degree(n, degree - *d)) {
            std::vector<Rational> v(rows.size(), Rational(0));
            for (std::size_t comp = 0; comp < col.components.size(); ++comp)
                for (const auto& [m, c] : col.components[comp].terms())
                    v[row_index.at(key(comp, m * mult))] = c;
            cols.push_back(std::move(v));
        }
    }
    if (cols.empty()) return 0;
    RationalMatrix mat(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows.size(); ++r) mat(r, c) = cols[c][r];
    return mat.rank();
}

}  // namespace divfree
