#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "divfree/module.hpp"
#include "divfree/polynomial.hpp"

namespace divfree {

class ResolutionCapExceeded : public std::runtime_error {
public:
    explicit ResolutionCapExceeded(std::size_t cap)
        : std::runtime_error("free resolution did not terminate within " + std::to_string(cap) +
                             " steps") {}
};

// Minimal graded free resolution of R/I:
//   0 -> F_len -> ... -> F_1 -> R -> R/I -> 0.
// maps[k] holds the columns of F_{k+1} -> F_k; maps[0] is the row of minimal
// ideal generators viewed as rank-1 module elements.
struct GradedResolution {
    ContextPtr context;
    std::vector<std::vector<ModuleElement>> maps;
    bool minimal = true;

    std::size_t length() const { return maps.size(); }

    // Shifts of F_k (k = 0 is R itself).
    std::vector<unsigned> shifts_of(std::size_t k) const {
        if (k == 0) return {0};
        std::vector<unsigned> out;
        for (const auto& col : maps[k - 1]) {
            auto d = element_degree(col);
            out.push_back(d ? *d : 0);
        }
        return out;
    }
};

struct ResolveOptions {
    std::size_t cap = 8;
    // Called before each syzygy step; returning false aborts the computation.
    std::function<bool(std::size_t step)> progress;
};

inline GradedResolution free_resolution(const std::vector<Polynomial>& gens,
                                        const ResolveOptions& options = {}) {
    if (options.cap < 1) throw std::invalid_argument("resolution cap must be at least 1");
    if (gens.empty()) throw std::invalid_argument("free_resolution of an empty generator list");
    const ContextPtr& ctx = gens.front().context();

    GradedResolution res;
    res.context = ctx;

    std::vector<ModuleElement> rank1;
    for (const auto& g : gens) {
        require_same_context(ctx, g.context());
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("free_resolution needs homogeneous generators");
        rank1.push_back(ModuleElement{{g}, {0}});
    }
    if (rank1.empty()) return res;  // zero ideal: the resolution is 0 -> R

    std::vector<ModuleElement> current = minimalize_generators(rank1);
    res.maps.push_back(current);

    for (std::size_t step = 1;; ++step) {
        if (options.progress && !options.progress(step))
            throw std::runtime_error("free resolution cancelled");
        std::vector<ModuleElement> syz = module_syzygies(current);
        if (syz.empty()) break;
        if (step >= options.cap) throw ResolutionCapExceeded(options.cap);
        current = syz;
        res.maps.push_back(std::move(syz));
    }
    return res;
}

// Graded Betti numbers: betti.shifts[i] is the sorted multiset of twists of
// F_i (index 0 is R itself).
struct BettiTable {
    std::vector<std::vector<unsigned>> shifts;

    std::size_t projective_dimension() const { return shifts.empty() ? 0 : shifts.size() - 1; }

    std::size_t beta(std::size_t i, unsigned j) const {
        if (i >= shifts.size()) return 0;
        return static_cast<std::size_t>(std::count(shifts[i].begin(), shifts[i].end(), j));
    }

    // Castelnuovo-Mumford regularity bound from the table: max(j - i).
    unsigned regularity() const {
        int reg = 0;
        for (std::size_t i = 0; i < shifts.size(); ++i)
            for (unsigned j : shifts[i]) reg = std::max(reg, static_cast<int>(j) - static_cast<int>(i));
        return static_cast<unsigned>(reg);
    }
};

inline BettiTable betti_table(const GradedResolution& res) {
    BettiTable out;
    out.shifts.push_back({0});
    for (std::size_t k = 1; k <= res.length(); ++k) {
        std::vector<unsigned> s = res.shifts_of(k);
        std::sort(s.begin(), s.end());
        out.shifts.push_back(std::move(s));
    }
    return out;
}

// Composition of consecutive maps is zero, and minimality means no nonzero
// constant entry anywhere.
inline bool resolution_composes_to_zero(const GradedResolution& res) {
    for (std::size_t k = 1; k < res.length(); ++k) {
        for (const auto& col : res.maps[k]) {
            ModuleElement image = apply_to_columns(col, res.maps[k - 1]);
            if (!element_is_zero(image)) return false;
        }
    }
    return true;
}

inline bool resolution_is_minimal(const GradedResolution& res) {
    for (const auto& step : res.maps)
        for (const auto& col : step)
            for (const auto& entry : col.components)
                if (!entry.is_zero() && entry.is_constant()) return false;
    return true;
}

// Rank of the slice of d_k : (F_k)_degree -> (F_{k-1})_degree, i.e. the
// dimension of the image (the span of monomial multiples of the columns).
inline std::size_t rank_of_map_slice(const GradedResolution& res, std::size_t k, unsigned degree) {
    return module_slice_dimension(res.maps[k - 1], res.shifts_of(k - 1), degree, res.context);
}

// Degree-slice rank accounting: at every degree <= max_degree and every step
// k >= 1, dim ker(d_k) equals dim im(d_{k+1}); past the last map the kernel
// must vanish (injectivity).
inline bool verify_exactness(const GradedResolution& res, unsigned max_degree) {
    const std::size_t n = res.context->size();
    for (unsigned degree = 0; degree <= max_degree; ++degree) {
        for (std::size_t k = 1; k <= res.length(); ++k) {
            std::size_t dim_fk = 0;
            for (unsigned s : res.shifts_of(k))
                if (s <= degree) dim_fk += degree_slice_dimension(n, degree - s);
            const std::size_t dim_ker = dim_fk - rank_of_map_slice(res, k, degree);
            const std::size_t dim_im_next =
                (k == res.length()) ? 0 : rank_of_map_slice(res, k + 1, degree);
            if (dim_ker != dim_im_next) return false;
        }
    }
    return true;
}

}  // namespace divfree
