#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "divfree/groebner.hpp"
#include "test_util.hpp"

using namespace divfree;
using testutil::parse;

namespace {

// Direct Buchberger-criterion audit: every S-polynomial of basis pairs reduces
// to zero, and every source generator has normal form zero.
bool audit_basis(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        if (gb.generators[i].leading_term(gb.order).second != 1) return false;
        for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
            Polynomial s = s_polynomial(gb.generators[i], gb.generators[j], gb.order);
            if (!normal_form(s, gb).is_zero()) return false;
        }
    }
    for (const auto& g : gb.source_ideal_generators)
        if (!normal_form(g, gb).is_zero()) return false;
    // reduced: no term of any element divisible by another leading monomial
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
        for (std::size_t j = 0; j < gb.generators.size(); ++j) {
            if (i == j) continue;
            const Monomial lm = gb.generators[j].leading_term(gb.order).first;
            for (const auto& [m, c] : gb.generators[i].terms())
                if (lm.divides(m)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("reduced basis of simple ideals") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("coordinate ideal") {
        GroebnerBasis gb = reduced_groebner_basis({parse("x", ctx), parse("y", ctx)});
        REQUIRE(gb.generators.size() == 2);
        CHECK(audit_basis(gb));
    }
    SECTION("an ideal that is already a basis") {
        std::vector<Polynomial> gens{parse("x*y", ctx), parse("x^2+2*y*z", ctx), parse("y^2", ctx)};
        GroebnerBasis gb = reduced_groebner_basis(gens);
        CHECK(gb.generators.size() == 3);
        for (const auto& g : gens)
            CHECK(std::find(gb.generators.begin(), gb.generators.end(), g) != gb.generators.end());
        CHECK(audit_basis(gb));
    }
    SECTION("zero and duplicate generators") {
        GroebnerBasis gb =
            reduced_groebner_basis({Polynomial::zero(ctx), parse("x^2+1", ctx), parse("x^2+1", ctx)});
        CHECK(gb.generators.size() == 1);
    }
    SECTION("empty input is the zero ideal") {
        GroebnerBasis gb = reduced_groebner_basis({}, MonomialOrder::grevlex(), ctx);
        CHECK(gb.generators.empty());
    }
}

TEST_CASE("lex basis of the symmetric ideal") {
    auto ctx = make_context({"x", "y", "z"});
    GroebnerBasis gb = reduced_groebner_basis(
        {parse("x+y+z", ctx), parse("x*y+y*z+z*x", ctx), parse("x*y*z-1", ctx)},
        MonomialOrder::lex());
    REQUIRE(gb.generators.size() == 3);
    std::vector<Polynomial> expected{parse("x+y+z", ctx), parse("y^2+y*z+z^2", ctx),
                                     parse("z^3-1", ctx)};
    for (const auto& e : expected)
        CHECK(std::find(gb.generators.begin(), gb.generators.end(), e) != gb.generators.end());
}

TEST_CASE("normal forms and membership") {
    auto ctx = make_context({"x", "y", "z"});
    GroebnerBasis gx = reduced_groebner_basis({parse("x", ctx)});
    CHECK(normal_form(parse("x^2", ctx), gx).is_zero());

    GroebnerBasis gxy = reduced_groebner_basis({parse("x", ctx), parse("y", ctx)});
    CHECK(normal_form(parse("z^5", ctx), gxy) == parse("z^5", ctx));

    // F lies in its own Jacobian ideal here (quasihomogeneous case)
    GroebnerBasis jf = reduced_groebner_basis(
        {parse("x*y", ctx), parse("x^2+2*y*z", ctx), parse("y^2", ctx)});
    CHECK(normal_form(parse("y*(x^2+y*z)", ctx), jf).is_zero());
}

TEST_CASE("divide_exact") {
    auto ctx = make_context({"x", "y", "z"});
    Polynomial f = parse("x^2-y^2", ctx);
    auto q = divide_exact(f, parse("x+y", ctx));
    REQUIRE(q.has_value());
    CHECK(*q == parse("x-y", ctx));
    CHECK_FALSE(divide_exact(parse("x^2+y", ctx), parse("x+y", ctx)).has_value());
    CHECK_THROWS_AS(divide_exact(f, Polynomial::zero(ctx)), std::invalid_argument);
}

TEST_CASE("random bases satisfy the Buchberger criteria") {
    auto ctx = make_context({"x", "y"});
    std::mt19937_64 rng(20240401);
    int done = 0;
    while (done < 120) {
        std::vector<Polynomial> gens{testutil::random_polynomial(ctx, rng, 3, 3),
                                     testutil::random_polynomial(ctx, rng, 3, 3)};
        if (gens[0].is_zero() && gens[1].is_zero()) continue;
        GroebnerBasis gb = reduced_groebner_basis(gens);
        CHECK(audit_basis(gb));
        ++done;
    }
    auto ctx3 = make_context({"x", "y", "z"});
    done = 0;
    while (done < 80) {
        std::vector<Polynomial> gens{testutil::random_polynomial(ctx3, rng, 2, 3),
                                     testutil::random_polynomial(ctx3, rng, 2, 3),
                                     testutil::random_polynomial(ctx3, rng, 2, 2)};
        GroebnerBasis gb = reduced_groebner_basis(gens);
        CHECK(audit_basis(gb));
        ++done;
    }
}

TEST_CASE("reduced basis is unique under generator shuffling") {
    auto ctx = make_context({"x", "y", "z"});
    std::mt19937_64 rng(55);
    int done = 0;
    while (done < 200) {
        std::vector<Polynomial> gens{testutil::random_polynomial(ctx, rng, 2, 3),
                                     testutil::random_polynomial(ctx, rng, 2, 3),
                                     testutil::random_polynomial(ctx, rng, 3, 2)};
        bool all_zero = true;
        for (const auto& g : gens) all_zero = all_zero && g.is_zero();
        if (all_zero) continue;
        GroebnerBasis reference = reduced_groebner_basis(gens);
        for (int s = 0; s < 2; ++s) {
            for (std::size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[rng() % i]);
            GroebnerBasis shuffled = reduced_groebner_basis(gens);
            CHECK(shuffled.generators == reference.generators);
        }
        ++done;
    }
}

TEST_CASE("normal form is additive through reduction") {
    auto ctx = make_context({"x", "y", "z"});
    std::mt19937_64 rng(808);
    GroebnerBasis gb = reduced_groebner_basis(
        {parse("x^2-y*z", ctx), parse("x*y-z^2", ctx)});
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testutil::random_polynomial(ctx, rng);
        Polynomial q = testutil::random_polynomial(ctx, rng);
        CHECK(normal_form(p + q, gb) == normal_form(normal_form(p, gb) + normal_form(q, gb), gb));
    }
}
