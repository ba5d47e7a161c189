#include <catch2/catch_amalgamated.hpp>

#include "divfree/divisor.hpp"
#include "test_util.hpp"

using namespace divfree;
using testutil::parse;

TEST_CASE("divisor construction") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("valid with factors") {
        PlaneDivisor d = make_divisor(parse("x*y*z", ctx),
                                      std::vector<Polynomial>{parse("x", ctx), parse("y", ctx),
                                                              parse("z", ctx)});
        CHECK(d.degree == 3);
    }
    SECTION("factors may differ by a scalar") {
        CHECK_NOTHROW(make_divisor(parse("2*x*y", ctx),
                                   std::vector<Polynomial>{parse("x", ctx), parse("y", ctx)}));
    }
    SECTION("wrong factorization") {
        CHECK_THROWS_AS(make_divisor(parse("x*y*z", ctx),
                                     std::vector<Polynomial>{parse("x", ctx), parse("y", ctx)}),
                        AnalysisError);
    }
    SECTION("inhomogeneous polynomial") {
        CHECK_THROWS_AS(make_divisor(parse("x^2+y", ctx)), AnalysisError);
    }
    SECTION("wrong variable count") {
        auto ctx2 = make_context({"x", "y"});
        CHECK_THROWS_AS(make_divisor(parse("x*y", ctx2)), AnalysisError);
    }
}

TEST_CASE("jacobian tuples") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("triple of coordinate lines") {
        PlaneDivisor d = make_divisor(parse("x*y*z", ctx));
        std::vector<Polynomial> jac = jacobian_ideal(d);
        CHECK(jac == std::vector<Polynomial>({parse("y*z", ctx), parse("x*z", ctx),
                                              parse("x*y", ctx)}));
    }
    SECTION("tangent conic: the ideal equals the displayed generators") {
        PlaneDivisor d = make_divisor(parse("y*(x^2+y*z)", ctx));
        CHECK(ideal_equal(jacobian_ideal(d), {parse("x*y", ctx), parse("x^2+2*y*z", ctx),
                                              parse("y^2", ctx)}));
    }
}

TEST_CASE("syzygy construction validates the relation") {
    auto ctx = make_context({"x", "y", "z"});
    PlaneDivisor d = make_divisor(parse("y*(x^2+y*z)", ctx));
    SECTION("the displayed relation holds and is regular") {
        Syzygy s = make_syzygy(d, {parse("-x", ctx), parse("y", ctx), parse("-2*z", ctx)});
        CHECK(s.degree == 1);
        CHECK(s.regular);
    }
    SECTION("non-relations are rejected") {
        CHECK_THROWS_AS(make_syzygy(d, {parse("x", ctx), parse("y", ctx), parse("z", ctx)}),
                        std::invalid_argument);
    }
}

TEST_CASE("derivations to syzygies") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("the euler derivation maps to the zero syzygy") {
        PlaneDivisor d = make_divisor(parse("x*y*z*(x-y)*(x-z)*(y-z)", ctx));
        Syzygy s = derivation_to_syzygy(
            {parse("x", ctx), parse("y", ctx), parse("z", ctx)}, d);
        CHECK(syzygy_is_zero(s));
    }
    SECTION("x d/dx on xy") {
        PlaneDivisor d = make_divisor(parse("x*y", ctx));
        Syzygy s = derivation_to_syzygy(
            {parse("x", ctx), Polynomial::zero(ctx), Polynomial::zero(ctx)}, d);
        CHECK(s.components == std::vector<Polynomial>({parse("1/2*x", ctx), parse("-1/2*y", ctx),
                                                       parse("-1/2*z", ctx)}));
    }
    SECTION("pencil of lines with the line at infinity") {
        for (unsigned n : {4u, 5u, 6u}) {
            std::vector<Polynomial> forms{parse("x", ctx), parse("y", ctx)};
            const char* extra[] = {"x-y", "x+y", "x-2*y"};
            for (unsigned i = 0; i + 3 < n; ++i) forms.push_back(parse(extra[i], ctx));
            forms.push_back(parse("z", ctx));
            PlaneDivisor d = make_divisor(product(forms, ctx), forms);
            std::vector<Polynomial> theta{
                parse("x", ctx), parse("y", ctx),
                Polynomial::variable(ctx, 2).scale(-Rational(static_cast<long>(n - 1)))};
            Syzygy s = derivation_to_syzygy(theta, d);
            CHECK(s.components == theta);  // theta(Q) = 0, nothing to subtract
            CHECK(s.degree == 1);
            CHECK(s.regular);
        }
    }
    SECTION("a non-logarithmic derivation is rejected") {
        PlaneDivisor d = make_divisor(parse("x*y", ctx));
        CHECK_THROWS_AS(derivation_to_syzygy(
                            {parse("y", ctx), Polynomial::zero(ctx), Polynomial::zero(ctx)}, d),
                        AnalysisError);
    }
}

TEST_CASE("the displayed generator triple of I^(A,B,C)") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("linear pencil syzygy collapses the first generator") {
        std::vector<Polynomial> forms{parse("x", ctx), parse("y", ctx), parse("x-y", ctx),
                                      parse("x+y", ctx), parse("z", ctx)};
        PlaneDivisor d = make_divisor(product(forms, ctx), forms);
        Syzygy s = make_syzygy(d, {parse("x", ctx), parse("y", ctx), parse("-4*z", ctx)});
        std::vector<Polynomial> gens = i_abc(s);
        REQUIRE(gens.size() == 3);
        CHECK(gens[0].is_zero());
        CHECK(ideal_equal({gens[1], gens[2]}, {parse("x*z", ctx), parse("y*z", ctx)}));
        CHECK(ideal_height({gens[1], gens[2]}) == 1);
    }
    SECTION("the alternating relation on the generators holds symbolically") {
        std::mt19937_64 rng(90210);
        const Polynomial x = parse("x", ctx), y = parse("y", ctx), z = parse("z", ctx);
        for (int i = 0; i < 200; ++i) {
            Polynomial a = testutil::random_polynomial(ctx, rng);
            Polynomial b = testutil::random_polynomial(ctx, rng);
            Polynomial c = testutil::random_polynomial(ctx, rng);
            Polynomial g1 = y * a - x * b, g2 = z * a - x * c, g3 = z * b - y * c;
            CHECK((z * g1 - y * g2 + x * g3).is_zero());
        }
    }
}
