#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "divfree/context.hpp"
#include "divfree/matrix.hpp"
#include "divfree/monomial.hpp"
#include "divfree/rational.hpp"

namespace divfree {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// stored in descending grevlex order and never carry zero coefficients, so
// equality is structural equality and printing is canonical.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("polynomial needs a variable context");
    }

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(ContextPtr ctx, Rational value) {
        Polynomial p(std::move(ctx));
        if (value != 0) p.terms_.emplace(Monomial::one(p.ctx_->size()), std::move(value));
        return p;
    }

    static Polynomial variable(ContextPtr ctx, std::size_t var, unsigned power = 1) {
        Polynomial p(ctx);
        if (var >= ctx->size()) throw std::out_of_range("variable index out of range");
        if (power == 0) return constant(std::move(ctx), 1);
        p.terms_.emplace(Monomial::variable(ctx->size(), var, power), Rational(1));
        return p;
    }

    static Polynomial term(ContextPtr ctx, Monomial m, Rational c) {
        Polynomial p(std::move(ctx));
        if (m.n_vars() != p.ctx_->size()) throw std::invalid_argument("monomial arity mismatch");
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    // Value of the unique constant term (0 for the zero polynomial).
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    unsigned total_degree() const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        return terms_.begin()->first.degree();  // first term is grevlex-leading
    }

    // d if every term has total degree d; nullopt for inhomogeneous or zero input.
    std::optional<unsigned> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        const unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_context(a.ctx_, b.ctx_);
        Polynomial out(a);
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_context(a.ctx_, b.ctx_);
        Polynomial out(a);
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_context(a.ctx_, b.ctx_);
        Polynomial out(a.ctx_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    Polynomial scale(const Rational& c) const {
        Polynomial out(ctx_);
        if (c == 0) return out;
        for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
        return out;
    }

    Polynomial pow(unsigned k) const {
        Polynomial out = constant(ctx_, 1);
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    Polynomial multiply_term(const Monomial& m, const Rational& c) const {
        Polynomial out(ctx_);
        if (c == 0) return out;
        for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
        return out;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= ctx_->size()) throw std::out_of_range("variable index out of range");
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            const unsigned e = m.exponent(var);
            if (e == 0) continue;
            std::vector<unsigned> exps = m.exponents();
            exps[var] = e - 1;
            out.terms_.emplace(Monomial(std::move(exps)), c * e);
        }
        return out;
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != ctx_->size()) throw std::invalid_argument("evaluation point arity mismatch");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (unsigned e = 0; e < m.exponent(i); ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Substitutes images[i] (all in one target context) for variable i.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != ctx_->size()) throw std::invalid_argument("substitution arity mismatch");
        const ContextPtr& target = images.empty() ? ctx_ : images.front().context();
        for (const auto& im : images) require_same_context(target, im.context());
        Polynomial acc(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target, c);
            for (std::size_t i = 0; i < images.size(); ++i)
                if (m.exponent(i) > 0) t = t * images[i].pow(m.exponent(i));
            acc = acc + t;
        }
        return acc;
    }

    // Substitutes 1 for the chosen variable; the result lives in the context
    // with that variable removed.
    Polynomial dehomogenize(std::size_t var) const {
        if (var >= ctx_->size()) throw std::out_of_range("variable index out of range");
        ContextPtr reduced = remove_variable(ctx_, var);
        Polynomial out(reduced);
        for (const auto& [m, c] : terms_) {
            std::vector<unsigned> exps;
            exps.reserve(m.n_vars() - 1);
            for (std::size_t i = 0; i < m.n_vars(); ++i)
                if (i != var) exps.push_back(m.exponent(i));
            out.add_term(Monomial(std::move(exps)), c);
        }
        return out;
    }

    // p(Mx): variable i is replaced by the linear form sum_j M(i,j) x_j.
    Polynomial coordinate_change(const RationalMatrix& m) const {
        const std::size_t n = ctx_->size();
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("coordinate matrix arity mismatch");
        if (!m.is_invertible()) throw std::domain_error("coordinate change by a singular matrix");
        std::vector<Polynomial> images;
        images.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial form(ctx_);
            for (std::size_t j = 0; j < n; ++j)
                if (m(i, j) != 0) form.add_term(Monomial::variable(n, j), m(i, j));
            images.push_back(std::move(form));
        }
        return substitute(images);
    }

    // Leading data under an arbitrary order (linear scan; the stored order is
    // grevlex, where the first term is leading).
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        if (order.kind() == MonomialOrder::Kind::Grevlex) return *terms_.begin();
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return *best;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            const bool has_vars = !m.is_one();
            if (!has_vars || mag != 1) {
                os << mag.get_str();
                if (has_vars) os << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < m.n_vars(); ++i) {
                const unsigned e = m.exponent(i);
                if (e == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << ctx_->name(i);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    ContextPtr ctx_;
    TermMap terms_;
};

inline Polynomial partial_derivative(const Polynomial& p, std::size_t var) { return p.derivative(var); }

// deg(F)*F == sum_i x_i * dF/dx_i, checked exactly. Throws on inhomogeneous input.
inline bool euler_check(const Polynomial& f) {
    if (f.is_zero()) return true;
    auto deg = f.homogeneous_degree();
    if (!deg) throw std::invalid_argument("euler_check needs a homogeneous polynomial");
    const ContextPtr& ctx = f.context();
    Polynomial sum(ctx);
    for (std::size_t i = 0; i < ctx->size(); ++i)
        sum = sum + Polynomial::variable(ctx, i) * f.derivative(i);
    return sum == f.scale(Rational(*deg));
}

inline Polynomial product(const std::vector<Polynomial>& factors, const ContextPtr& ctx) {
    Polynomial out = Polynomial::constant(ctx, 1);
    for (const auto& f : factors) out = out * f;
    return out;
}

}  // namespace divfree
