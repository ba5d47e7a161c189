#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divfree/polynomial.hpp"
#include "divfree/slice.hpp"

namespace divfree {

// Brute-force syzygy data obtained purely by exact linear algebra on degree
// slices; the independent oracle against the Groebner-driven syzygy engine.
struct BruteForceSyzygies {
    // dimensions[d] = dimension of the space of syzygy tuples whose components
    // have degree d (inputs must share one degree).
    std::vector<std::size_t> dimensions;
    // tuples[d] = explicit basis tuples (c_1,...,c_s) with sum c_i f_i = 0.
    std::vector<std::vector<std::vector<Polynomial>>> tuples;
};

inline BruteForceSyzygies brute_force_syzygies(const std::vector<Polynomial>& polys,
                                               unsigned max_degree) {
    if (polys.empty()) throw std::invalid_argument("brute_force_syzygies of an empty tuple");
    std::optional<unsigned> common;
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("brute_force_syzygies needs nonzero polynomials");
        auto d = p.homogeneous_degree();
        if (!d) throw std::invalid_argument("brute_force_syzygies needs homogeneous polynomials");
        if (common && *common != *d)
            throw std::invalid_argument("brute_force_syzygies needs a common generator degree");
        common = d;
    }

    BruteForceSyzygies out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        auto kernel = degree_slice_kernel(polys, *common + d);
        out.dimensions.push_back(kernel.size());
        out.tuples.push_back(std::move(kernel));
    }
    return out;
}

// Kernel dimension at a prescribed total (module) degree; works for inputs of
// mixed degrees, matching module_slice_dimension's grading.
inline std::size_t syzygy_kernel_dimension_at(const std::vector<Polynomial>& polys,
                                              unsigned element_degree) {
    return degree_slice_kernel_dimension(polys, element_degree);
}

}  // namespace divfree
