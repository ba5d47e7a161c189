#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "divfree/matrix.hpp"
#include "divfree/monomial.hpp"
#include "divfree/polynomial.hpp"

namespace divfree {

// All monomials of the given total degree, listed in descending grevlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n_vars, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(n_vars, 0);
    // Enumerate recursively, then sort canonically.
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var + 1 == n_vars) {
            exps[var] = remaining;
            out.push_back(Monomial(exps));
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_less(b, a); });
    return out;
}

inline std::size_t degree_slice_dimension(std::size_t n_vars, unsigned degree) {
    // binom(degree + n_vars - 1, n_vars - 1)
    std::size_t num = 1, den = 1;
    for (std::size_t i = 1; i < n_vars; ++i) {
        num *= degree + i;
        den *= i;
    }
    return num / den;
}

// Matrix of the map (c_1,...,c_s) -> sum c_i * polys[i] restricted to the
// degree slice: c_i runs over monomial multiples of degree target - deg(polys[i]).
// Rows are indexed by monomials of the target degree; columns by (poly index,
// multiplier monomial) blocks in order. Column layout is returned via blocks.
struct SliceMap {
    RationalMatrix matrix;
    // blocks[i] = multiplier monomials for polys[i] (empty if target < deg).
    std::vector<std::vector<Monomial>> blocks;
};

inline SliceMap multiplication_slice(const std::vector<Polynomial>& polys, unsigned target_degree) {
    if (polys.empty()) throw std::invalid_argument("empty polynomial sequence");
    const ContextPtr& ctx = polys.front().context();
    const std::size_t n = ctx->size();
    std::vector<unsigned> degs;
    for (const auto& p : polys) {
        require_same_context(ctx, p.context());
        auto d = p.homogeneous_degree();
        if (!d && !p.is_zero()) throw std::invalid_argument("degree slice needs homogeneous polynomials");
        degs.push_back(p.is_zero() ? target_degree + 1 : *d);
    }

    std::vector<Monomial> rows = monomials_of_degree(n, target_degree);
    std::map<Monomial, std::size_t, GrevlexGreater> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

    std::vector<std::vector<Monomial>> blocks;
    std::size_t total_cols = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (degs[i] > target_degree) {
            blocks.emplace_back();
        } else {
            blocks.push_back(monomials_of_degree(n, target_degree - degs[i]));
        }
        total_cols += blocks.back().size();
    }

    RationalMatrix m(rows.size(), total_cols);
    std::size_t col = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const Monomial& mult : blocks[i]) {
            for (const auto& [mono, coeff] : polys[i].terms())
                m(row_index.at(mono * mult), col) = coeff;
            ++col;
        }
    }
    return SliceMap{std::move(m), std::move(blocks)};
}

// Exact basis of the kernel of the slice map: each kernel vector is returned
// as a tuple of polynomials (c_1,...,c_s) with sum c_i * polys[i] = 0 in the
// target degree. Vanishing-ideal interpolation and the brute-force syzygy
// oracle are both built on this.
inline std::vector<std::vector<Polynomial>> degree_slice_kernel(const std::vector<Polynomial>& polys,
                                                                unsigned target_degree) {
    SliceMap slice = multiplication_slice(polys, target_degree);
    const ContextPtr& ctx = polys.front().context();
    std::vector<std::vector<Polynomial>> out;
    for (const auto& vec : slice.matrix.nullspace()) {
        std::vector<Polynomial> tuple;
        std::size_t col = 0;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            Polynomial c(ctx);
            for (const Monomial& mult : slice.blocks[i]) {
                if (vec[col] != 0) c.add_term(mult, vec[col]);
                ++col;
            }
            tuple.push_back(std::move(c));
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

inline std::size_t degree_slice_kernel_dimension(const std::vector<Polynomial>& polys,
                                                 unsigned target_degree) {
    SliceMap slice = multiplication_slice(polys, target_degree);
    return slice.matrix.cols() - slice.matrix.rank();
}

// Dimension of the degree-slice of the ideal generated by polys (the image of
// the multiplication map): used to cross-check Hilbert data.
inline std::size_t ideal_slice_dimension(const std::vector<Polynomial>& polys, unsigned target_degree) {
    SliceMap slice = multiplication_slice(polys, target_degree);
    return slice.matrix.rank();
}

}  // namespace divfree
