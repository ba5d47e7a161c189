#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divfree/groebner.hpp"
#include "divfree/hilbert.hpp"
#include "divfree/polynomial.hpp"

namespace divfree {

// Raised when an analysis precondition fails (non-isolated singularities,
// inhomogeneous input, ...); the CLI maps it to exit code 2.
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reduced plane curve Y = V(F) in P^2, optionally with its factorization.
// Squarefreeness is asserted by the caller; factors, when given, must multiply
// to the defining polynomial up to a nonzero rational scalar.
struct PlaneDivisor {
    Polynomial defining_polynomial;
    std::optional<std::vector<Polynomial>> factors;
    unsigned degree = 0;
};

inline PlaneDivisor make_divisor(Polynomial f, std::optional<std::vector<Polynomial>> factors = {}) {
    if (f.context()->size() != 3)
        throw AnalysisError("a plane divisor needs exactly three variables");
    auto deg = f.homogeneous_degree();
    if (!deg) throw AnalysisError("the defining polynomial must be homogeneous and nonzero");
    if (factors) {
        Polynomial prod = product(*factors, f.context());
        // equal up to a nonzero rational scalar
        bool ok = false;
        if (!prod.is_zero() && prod.terms().size() == f.terms().size()) {
            const Rational scale = f.terms().begin()->second / prod.terms().begin()->second;
            ok = prod.scale(scale) == f;
        }
        if (!ok) throw AnalysisError("factors do not multiply to the defining polynomial");
    }
    return PlaneDivisor{std::move(f), std::move(factors), *deg};
}

// The tuple of partial derivatives, one per variable, in variable order.
inline std::vector<Polynomial> jacobian_ideal(const PlaneDivisor& d) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < d.defining_polynomial.context()->size(); ++i)
        out.push_back(d.defining_polynomial.derivative(i));
    return out;
}

// A relation A*F_x + B*F_y + C*F_z = 0 attached to a divisor; regular when
// the components form a regular sequence.
struct Syzygy {
    std::vector<Polynomial> components;
    unsigned degree = 0;
    bool regular = false;
};

inline bool syzygy_is_zero(const Syzygy& s) {
    for (const auto& c : s.components)
        if (!c.is_zero()) return false;
    return true;
}

// Builds a Syzygy from components, verifying the relation against the divisor
// exactly and computing the regularity flag.
inline Syzygy make_syzygy(const PlaneDivisor& d, std::vector<Polynomial> components) {
    const std::vector<Polynomial> jac = jacobian_ideal(d);
    if (components.size() != jac.size())
        throw std::invalid_argument("syzygy component count must match the variable count");
    Polynomial acc = Polynomial::zero(d.defining_polynomial.context());
    for (std::size_t i = 0; i < jac.size(); ++i) acc = acc + components[i] * jac[i];
    if (!acc.is_zero()) throw std::invalid_argument("components do not annihilate the Jacobian tuple");

    Syzygy s;
    s.components = std::move(components);
    std::optional<unsigned> deg;
    bool all_zero = true;
    for (const auto& c : s.components) {
        if (c.is_zero()) continue;
        all_zero = false;
        auto dc = c.homogeneous_degree();
        if (!dc || (deg && *deg != *dc))
            throw std::invalid_argument("syzygy components must be homogeneous of one degree");
        deg = dc;
    }
    s.degree = all_zero ? 0 : *deg;
    bool has_zero_component = false;
    for (const auto& c : s.components)
        if (c.is_zero()) has_zero_component = true;
    s.regular = !all_zero && !has_zero_component && is_regular_sequence(s.components);
    return s;
}

// Special logarithmic derivation from a logarithmic derivation theta with
// theta(F) = D*F: subtract (D/n) times the Euler derivation. The result is the
// zero syzygy exactly when theta is a multiple of the Euler derivation.
inline Syzygy derivation_to_syzygy(const std::vector<Polynomial>& coeffs, const PlaneDivisor& d) {
    const ContextPtr& ctx = d.defining_polynomial.context();
    if (coeffs.size() != ctx->size())
        throw std::invalid_argument("derivation coefficient count must match the variable count");
    Polynomial theta_f = Polynomial::zero(ctx);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        theta_f = theta_f + coeffs[i] * d.defining_polynomial.derivative(i);

    std::optional<Polynomial> dd = divide_exact(theta_f, d.defining_polynomial);
    if (!dd) throw AnalysisError("theta(F) is not divisible by F: not a logarithmic derivation");

    const Rational inv_n(1, static_cast<unsigned long>(d.degree));
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        comps.push_back(coeffs[i] - Polynomial::variable(ctx, i) * dd->scale(inv_n));
    return make_syzygy(d, std::move(comps));
}

// I^(A,B,C) = <yA - xB, zA - xC, zB - yC>, in that order (entries may be zero).
inline std::vector<Polynomial> i_abc(const Syzygy& s) {
    if (s.components.size() != 3) throw std::invalid_argument("i_abc needs a 3-component syzygy");
    const ContextPtr& ctx = s.components.front().context();
    if (ctx->size() != 3) throw std::invalid_argument("i_abc needs a three-variable context");
    const Polynomial x = Polynomial::variable(ctx, 0);
    const Polynomial y = Polynomial::variable(ctx, 1);
    const Polynomial z = Polynomial::variable(ctx, 2);
    const Polynomial& a = s.components[0];
    const Polynomial& b = s.components[1];
    const Polynomial& c = s.components[2];
    return {y * a - x * b, z * a - x * c, z * b - y * c};
}

}  // namespace divfree
