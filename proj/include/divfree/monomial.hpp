#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace divfree {

// Exponent vector with cached total degree.
class Monomial {
public:
    explicit Monomial(std::vector<unsigned> exponents)
        : exps_(std::move(exponents)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

    static Monomial one(std::size_t n_vars) { return Monomial(std::vector<unsigned>(n_vars, 0)); }

    static Monomial variable(std::size_t n_vars, std::size_t var, unsigned power = 1) {
        std::vector<unsigned> e(n_vars, 0);
        e.at(var) = power;
        return Monomial(std::move(e));
    }

    std::size_t n_vars() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    unsigned exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<unsigned>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        std::vector<unsigned> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
        return Monomial(std::move(e));
    }

    // Requires other.divides(*this).
    Monomial operator/(const Monomial& other) const {
        std::vector<unsigned> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < other.exps_[i]) throw std::domain_error("monomial quotient is not exact");
            e[i] -= other.exps_[i];
        }
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<unsigned> e(a.exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<unsigned> exps_;
    unsigned degree_;
};

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // Tie-break: reverse-lex — larger exponent in the last differing slot loses.
    for (std::size_t i = a.n_vars(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
    }
    return false;
}

inline bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
    return false;
}

// Total order on monomials of one context. Block orders compare the leading
// elim_count variables first (by grevlex) and eliminate them in GB runs.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block(std::size_t elim_count) { return MonomialOrder(Kind::Block, elim_count); }

    Kind kind() const { return kind_; }
    std::size_t elim_count() const { return elim_count_; }

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Grevlex: return grevlex_less(a, b);
            case Kind::Lex: return lex_less(a, b);
            case Kind::Block: {
                unsigned da = 0, db = 0;
                for (std::size_t i = 0; i < elim_count_; ++i) {
                    da += a.exponent(i);
                    db += b.exponent(i);
                }
                if (da != db) return da < db;
                for (std::size_t i = elim_count_; i-- > 0;)
                    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
                return grevlex_tail_less(a, b, elim_count_);
            }
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.elim_count_ == b.elim_count_;
    }

private:
    MonomialOrder(Kind kind, std::size_t elim_count) : kind_(kind), elim_count_(elim_count) {}

    static bool grevlex_tail_less(const Monomial& a, const Monomial& b, std::size_t from) {
        unsigned da = 0, db = 0;
        for (std::size_t i = from; i < a.n_vars(); ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da < db;
        for (std::size_t i = a.n_vars(); i-- > from;)
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
        return false;
    }

    Kind kind_;
    std::size_t elim_count_;
};

// Canonical comparator for polynomial term storage: descending grevlex, so the
// first stored term is the grevlex leading term.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

}  // namespace divfree
