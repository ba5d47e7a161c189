#include <catch2/catch_amalgamated.hpp>

#include "divfree/hilbert.hpp"
#include "divfree/resolution.hpp"
#include "test_util.hpp"

using namespace divfree;
using testutil::parse;

namespace {

std::vector<Polynomial> jacobian_of(const char* text, const ContextPtr& ctx) {
    Polynomial f = parse(text, ctx);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ctx->size(); ++i) out.push_back(f.derivative(i));
    return out;
}

// Euler characteristic of the Betti table must reproduce the Hilbert numerator.
void check_euler_vs_hilbert(const std::vector<Polynomial>& gens) {
    GradedResolution res = free_resolution(gens);
    BettiTable bt = betti_table(res);
    HilbertData hd = hilbert_data(gens);
    std::vector<long long> euler;
    int sign = 1;
    for (const auto& row : bt.shifts) {
        for (unsigned s : row) {
            if (euler.size() <= s) euler.resize(s + 1, 0);
            euler[s] += sign;
        }
        sign = -sign;
    }
    while (euler.size() > 1 && euler.back() == 0) euler.pop_back();
    CHECK(euler == hd.series_numerator);
}

}  // namespace

TEST_CASE("koszul resolution of the plane coordinate ideal") {
    auto ctx = make_context({"x", "y", "z"});
    GradedResolution res = free_resolution({parse("x", ctx), parse("y", ctx)});
    BettiTable bt = betti_table(res);
    CHECK(bt.projective_dimension() == 2);
    CHECK(bt.shifts == std::vector<std::vector<unsigned>>({{0}, {1, 1}, {2}}));
    CHECK(resolution_composes_to_zero(res));
    CHECK(resolution_is_minimal(res));
    CHECK(verify_exactness(res, bt.regularity() + 2));
}

TEST_CASE("hilbert-burch shape for the four-lines-plus-conic divisor") {
    auto ctx = make_context({"x", "y", "z"});
    GradedResolution res = free_resolution(jacobian_of("x*(x+y)*(x-y)*(x+2*y)*(x^2+y*z)", ctx));
    BettiTable bt = betti_table(res);
    CHECK(bt.projective_dimension() == 2);
    CHECK(bt.shifts == std::vector<std::vector<unsigned>>({{0}, {5, 5, 5}, {7, 8}}));
    CHECK(resolution_is_minimal(res));
    CHECK(verify_exactness(res, bt.regularity() + 2));
}

TEST_CASE("rank-4 arrangement resolution, frozen") {
    auto ctx4 = make_context({"x", "y", "z", "w"});
    GradedResolution res = free_resolution(jacobian_of("x*y*z*w*(x+y+z+w)", ctx4));
    BettiTable bt = betti_table(res);
    // Depth zero quotient: a degree-4 socle element forces projective dimension 4.
    CHECK(bt.projective_dimension() == 4);
    CHECK(bt.shifts == std::vector<std::vector<unsigned>>(
                           {{0}, {4, 4, 4, 4}, {6, 6, 6, 6, 6, 6}, {7, 7, 7, 7}, {8}}));
    CHECK(resolution_composes_to_zero(res));
    CHECK(resolution_is_minimal(res));
    CHECK(verify_exactness(res, bt.regularity() + 2));
}

TEST_CASE("euler characteristic matches the hilbert numerator") {
    auto ctx = make_context({"x", "y", "z"});
    check_euler_vs_hilbert({parse("x", ctx), parse("y", ctx)});
    check_euler_vs_hilbert(jacobian_of("x*y*z*(x-y)*(x-z)*(y-z)", ctx));
    check_euler_vs_hilbert(jacobian_of("y*(x^2+y*z)", ctx));
    check_euler_vs_hilbert({parse("x*y", ctx), parse("x*z", ctx), parse("y*z", ctx)});
}

TEST_CASE("resolution cap is reported, never silent") {
    auto ctx = make_context({"x", "y", "z"});
    CHECK_THROWS_AS(free_resolution(jacobian_of("x*y*z", ctx), ResolveOptions{1, {}}),
                    ResolutionCapExceeded);
}

TEST_CASE("progress hook can cancel") {
    auto ctx = make_context({"x", "y", "z"});
    ResolveOptions opts;
    opts.cap = 8;
    opts.progress = [](std::size_t) { return false; };
    CHECK_THROWS_AS(free_resolution(jacobian_of("x*y*z", ctx), opts), std::runtime_error);
    // and a counting hook sees every step
    std::size_t steps = 0;
    opts.progress = [&](std::size_t) {
        ++steps;
        return true;
    };
    free_resolution(jacobian_of("x*y*z", ctx), opts);
    CHECK(steps >= 2);
}

TEST_CASE("zero ideal resolves to the ring alone") {
    auto ctx = make_context({"x", "y", "z"});
    GradedResolution res = free_resolution({Polynomial::zero(ctx)});
    CHECK(res.length() == 0);
}
