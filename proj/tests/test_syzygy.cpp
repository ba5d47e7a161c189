#include <catch2/catch_amalgamated.hpp>

#include "divfree/module.hpp"
#include "divfree/syzygy_oracle.hpp"
#include "test_util.hpp"

using namespace divfree;
using testutil::parse;

namespace {

bool proportional(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    REQUIRE(a.size() == b.size());
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        if (a[i].terms().size() != b[i].terms().size()) return false;
        const Rational r = a[i].terms().begin()->second / b[i].terms().begin()->second;
        if (ratio && *ratio != r) return false;
        ratio = r;
        if (!(a[i] == b[i].scale(r))) return false;
    }
    return ratio.has_value();
}

std::vector<Polynomial> jacobian_of(const char* text, const ContextPtr& ctx) {
    Polynomial f = parse(text, ctx);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ctx->size(); ++i) out.push_back(f.derivative(i));
    return out;
}

}  // namespace

TEST_CASE("koszul syzygy on two variables") {
    auto ctx = make_context({"x", "y", "z"});
    SyzygyMatrix m = first_syzygies({parse("x", ctx), parse("y", ctx)});
    REQUIRE(m.columns.size() == 1);
    CHECK(m.column_degrees == std::vector<unsigned>{1});
    CHECK(proportional(m.columns[0].components, {parse("y", ctx), parse("-x", ctx)}));
}

TEST_CASE("syzygies of the sextic arrangement jacobian") {
    auto ctx = make_context({"x", "y", "z"});
    std::vector<Polynomial> jac = jacobian_of("x*y*z*(x-y)*(x-z)*(y-z)", ctx);
    SyzygyMatrix m = first_syzygies(jac);
    REQUIRE(m.columns.size() == 2);
    std::vector<unsigned> degs = m.column_degrees;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<unsigned>({2, 3}));

    // the degree-2 column is the displayed tuple up to a scalar
    const auto& deg2 = m.column_degrees[0] == 2 ? m.columns[0] : m.columns[1];
    CHECK(proportional(deg2.components, {parse("-x^2+x*y+x*z", ctx), parse("x*y-y^2+y*z", ctx),
                                         parse("x*z+y*z-z^2", ctx)}));
    for (const auto& col : m.columns) CHECK(apply_to_generators(col, jac).is_zero());
}

TEST_CASE("tangent-conic jacobian has the expected linear syzygy") {
    auto ctx = make_context({"x", "y", "z"});
    std::vector<Polynomial> gens{parse("x*y", ctx), parse("x^2+2*y*z", ctx), parse("y^2", ctx)};
    SyzygyMatrix m = first_syzygies(gens);
    bool found = false;
    for (std::size_t i = 0; i < m.columns.size(); ++i)
        if (m.column_degrees[i] == 1 &&
            proportional(m.columns[i].components,
                         {parse("-x", ctx), parse("y", ctx), parse("-2*z", ctx)}))
            found = true;
    CHECK(found);
    // uniqueness of the linear syzygy up to scalar, by the oracle
    CHECK(degree_slice_kernel(gens, 3).size() == 1);
}

TEST_CASE("minimalization") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("a multiple of a generator is dropped") {
        ModuleElement a{{parse("y", ctx), parse("-x", ctx)}, {1, 1}};
        ModuleElement b{{parse("x*y", ctx), parse("-x^2", ctx)}, {1, 1}};
        auto kept = minimalize_generators({a, b});
        REQUIRE(kept.size() == 1);
        CHECK(kept[0].components == a.components);
    }
    SECTION("the koszul triple on a regular sequence stays intact") {
        std::vector<Polynomial> polys{parse("x", ctx), parse("y", ctx), parse("z", ctx)};
        std::vector<ModuleElement> triple{koszul_syzygy(0, 1, polys), koszul_syzygy(0, 2, polys),
                                          koszul_syzygy(1, 2, polys)};
        CHECK(minimalize_generators(triple).size() == 3);
    }
}

TEST_CASE("koszul syzygies") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("shape") {
        std::vector<Polynomial> polys{parse("x", ctx), parse("y", ctx)};
        ModuleElement k = koszul_syzygy(0, 1, polys);
        CHECK(k.components[0] == parse("y", ctx));
        CHECK(k.components[1] == parse("-x", ctx));
        CHECK_THROWS_AS(koszul_syzygy(0, 0, polys), std::invalid_argument);
        CHECK_THROWS_AS(koszul_syzygy(0, 7, polys), std::out_of_range);
    }
    SECTION("koszul elements lie in the computed syzygy module") {
        std::vector<Polynomial> jac = jacobian_of("x*y*z*(x-y)*(x-z)*(y-z)", ctx);
        SyzygyMatrix m = first_syzygies(jac);
        for (std::size_t i = 0; i < jac.size(); ++i)
            for (std::size_t j = i + 1; j < jac.size(); ++j)
                CHECK(module_membership(koszul_syzygy(i, j, jac), m.columns));
    }
    SECTION("a koszul relation can be non-minimal") {
        std::vector<Polynomial> polys{parse("x*y", ctx), parse("y^2", ctx)};
        ModuleElement k = koszul_syzygy(0, 1, polys);  // (y^2, -xy) = y * (y, -x)
        SyzygyMatrix m = first_syzygies(polys);
        REQUIRE(m.columns.size() == 1);
        CHECK(m.column_degrees[0] == 1);
        CHECK(module_membership(k, m.columns));
    }
}

TEST_CASE("brute force syzygy oracle") {
    auto ctx = make_context({"x", "y", "z"});
    SECTION("coordinate triple") {
        BruteForceSyzygies bf =
            brute_force_syzygies({parse("x", ctx), parse("y", ctx), parse("z", ctx)}, 2);
        CHECK(bf.dimensions[0] == 0);
        CHECK(bf.dimensions[1] == 3);  // the koszul relations
    }
    SECTION("sextic arrangement: first syzygy in degree 2") {
        BruteForceSyzygies bf = brute_force_syzygies(jacobian_of("x*y*z*(x-y)*(x-z)*(y-z)", ctx), 3);
        CHECK(bf.dimensions == std::vector<std::size_t>({0, 0, 1, 4}));
    }
    SECTION("four lines and a conic: generators in degrees 2 and 3") {
        BruteForceSyzygies bf =
            brute_force_syzygies(jacobian_of("x*(x+y)*(x-y)*(x+2*y)*(x^2+y*z)", ctx), 3);
        CHECK(bf.dimensions[2] == 1);
        CHECK(bf.dimensions[3] == 4);  // 3 multiples of the quadratic one plus a new cubic
    }
}

TEST_CASE("oracle equivalence across the corpus ideals") {
    auto ctx = make_context({"x", "y", "z"});
    auto ctx4 = make_context({"x", "y", "z", "w"});
    std::vector<std::vector<Polynomial>> corpus{
        jacobian_of("x*y*z*(x-y)*(x-z)*(y-z)", ctx),
        jacobian_of("x*(x+y)*(x-y)*(x+2*y)*(x^2+y*z)", ctx),
        jacobian_of("y*(x^2+y*z)", ctx),
        jacobian_of("x*y*z", ctx),
        jacobian_of("x*y*(x-y)*z", ctx),
        jacobian_of("x*y*(x-y)*(x+y)*z", ctx),
        jacobian_of("x*y*(x-y)*(x+y)*(x-2*y)*z", ctx),
        jacobian_of("x*y*z*(x-y)*(x-z)", ctx),
        {parse("x", ctx), parse("y", ctx)},
        {parse("x^2", ctx), parse("y^2", ctx)},
        {parse("x*y", ctx), parse("x*z", ctx), parse("y*z", ctx)},
        jacobian_of("x*y*z*w*(x+y+z+w)", ctx4),
    };
    REQUIRE(corpus.size() >= 10);
    for (const auto& gens : corpus) {
        SyzygyMatrix m = first_syzygies(gens);
        std::vector<unsigned> shifts;
        for (const auto& g : gens) shifts.push_back(g.total_degree());
        const ContextPtr& c = gens.front().context();
        for (unsigned degree = 0; degree <= 8; ++degree) {
            CHECK(module_slice_dimension(m.columns, shifts, degree, c) ==
                  syzygy_kernel_dimension_at(gens, degree));
        }
        for (const auto& col : m.columns) CHECK(apply_to_generators(col, gens).is_zero());
    }
}

TEST_CASE("first_syzygies input validation") {
    auto ctx = make_context({"x", "y", "z"});
    CHECK_THROWS_AS(first_syzygies({parse("x", ctx), Polynomial::zero(ctx)}), std::invalid_argument);
    CHECK_THROWS_AS(first_syzygies({parse("x+x^2", ctx)}), std::invalid_argument);
    CHECK_THROWS_AS(first_syzygies({}), std::invalid_argument);
}
