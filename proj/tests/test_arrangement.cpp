#include <catch2/catch_amalgamated.hpp>

#include "divfree/arrangement.hpp"
#include "divfree/hilbert.hpp"
#include "test_util.hpp"

using namespace divfree;
using testutil::parse;

namespace {

LineArrangement arrangement(std::initializer_list<const char*> forms, const ContextPtr& ctx) {
    std::vector<Polynomial> v;
    for (const char* f : forms) v.push_back(parse(f, ctx));
    return make_arrangement(std::move(v));
}

}  // namespace

TEST_CASE("arrangement validation") {
    auto ctx = make_context({"x", "y", "z"});
    CHECK_THROWS_AS(arrangement({"x", "2*x"}, ctx), AnalysisError);       // proportional lines
    CHECK_THROWS_AS(arrangement({"x"}, ctx), AnalysisError);              // too few
    CHECK_THROWS_AS(arrangement({"x", "x+y^2"}, ctx), AnalysisError);     // not linear
}

TEST_CASE("singular locus of the coordinate triangle") {
    auto ctx = make_context({"x", "y", "z"});
    SingularLocus locus = singular_locus(arrangement({"x", "y", "z"}, ctx));
    CHECK(locus.degree == 3);
    CHECK(locus.alpha == 2);
    CHECK(ideal_equal(locus.radical_ideal,
                      {parse("x*y", ctx), parse("x*z", ctx), parse("y*z", ctx)}));
    for (const auto& g : locus.radical_ideal)
        for (const auto& p : locus.points) CHECK(g.evaluate(p) == 0);
}

TEST_CASE("singular locus of the sextic arrangement") {
    auto ctx = make_context({"x", "y", "z"});
    SingularLocus locus = singular_locus(arrangement({"x", "y", "z", "x-y", "x-z", "y-z"}, ctx));
    CHECK(locus.degree == 7);
    CHECK(locus.alpha == 3);
    // radical degree agrees with the Hilbert-polynomial degree of the intersection ideal
    CHECK(hilbert_data(locus.radical_ideal).scheme_degree == 7);
    // four triple points and three double points
    std::size_t triples = 0, doubles = 0;
    for (std::size_t count : locus.lines_through) {
        if (count == 3) ++triples;
        if (count == 2) ++doubles;
    }
    CHECK(triples == 4);
    CHECK(doubles == 3);
}

TEST_CASE("pencil plus the far line has n points") {
    auto ctx = make_context({"x", "y", "z"});
    for (unsigned n : {4u, 5u, 6u}) {
        std::vector<Polynomial> forms{parse("x", ctx), parse("y", ctx)};
        const char* extra[] = {"x-y", "x+y", "x-2*y"};
        for (unsigned i = 0; i + 3 < n; ++i) forms.push_back(parse(extra[i], ctx));
        forms.push_back(parse("z", ctx));
        SingularLocus locus = singular_locus(make_arrangement(forms));
        CHECK(locus.degree == n);
        CHECK(hilbert_data(locus.radical_ideal).scheme_degree == n);
    }
}

TEST_CASE("near-pencil detection") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("three generic lines form a near-pencil") {
        NearPencilReport np = near_pencil_detect(arrangement({"x", "y", "z"}, ctx));
        CHECK(np.detected);
        REQUIRE(np.linear_syzygy.has_value());
        CHECK(np.linear_syzygy->degree == 1);
    }
    SECTION("the sextic arrangement is not a near-pencil") {
        NearPencilReport np =
            near_pencil_detect(arrangement({"x", "y", "z", "x-y", "x-z", "y-z"}, ctx));
        CHECK_FALSE(np.detected);
        CHECK_FALSE(np.linear_syzygy.has_value());
    }
    SECTION("pencil plus far line") {
        NearPencilReport np = near_pencil_detect(arrangement({"x", "y", "x-y", "x+y", "z"}, ctx));
        CHECK(np.detected);
        REQUIRE(np.linear_syzygy.has_value());
        // the unique linear syzygy is (x, y, -4z) up to scalar
        const auto& c = np.linear_syzygy->components;
        CHECK(c[0] * parse("y", ctx) == c[1] * parse("x", ctx));
        CHECK(c[0] * parse("-4*z", ctx) == c[2] * parse("x", ctx));
    }
    SECTION("a full pencil is not a near-pencil") {
        // all lines concurrent: rank 2, linear syzygies exist but the
        // classification (n-1 concurrent + one missing) fails
        NearPencilReport np = near_pencil_detect(arrangement({"x", "y", "x-y", "x+y"}, ctx));
        CHECK_FALSE(np.detected);
    }
}

TEST_CASE("point vanishing ideals evaluate to zero") {
    auto ctx = make_context({"x", "y", "z"});
    std::vector<Rational> p{1, Rational(-2), Rational(1, 3)};
    for (const auto& form : point_vanishing_ideal(p, ctx)) CHECK(form.evaluate(p) == 0);
}
