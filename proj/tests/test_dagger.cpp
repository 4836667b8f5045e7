#include <doctest.h>

#include "leonard/dagger.hpp"
#include "leonard/instances.hpp"
#include "leonard/rng.hpp"

using namespace leonard;

namespace {
const FieldSpec Q = FieldSpec::rational();

Context krawtchouk_ctx(std::size_t d, const FieldSpec& F) {
    return krawtchouk(d, F).ctx;
}
} // namespace

TEST_CASE("dagger diagonal on the d=2 fixture") {
    Context ctx = krawtchouk_ctx(2, Q);
    DaggerData dd = build_dagger(ctx);
    // B_01 = 2, B_10 = 1, B_12 = 1, B_21 = 2:
    // D = diag(1, 2/1, (2*1)/(1*2)) = diag(1, 2, 1)
    CHECK(dd.D == ExactMatrix::from_rows(Q, {{"1", "0", "0"},
                                             {"0", "2", "0"},
                                             {"0", "0", "1"}}));
    CHECK(dd.D * dd.Dinv == ExactMatrix::identity(Q, 3));
    CHECK(dd.apply(ctx.A) == ctx.A);
}

TEST_CASE("dagger property suite") {
    for (std::size_t d = 1; d <= 4; ++d) {
        Context ctx = krawtchouk_ctx(d, Q);
        DaggerData dd = build_dagger(ctx);
        DaggerReport rep = dagger_property_suite(dd, 10, 7);
        for (const auto& [name, ok] : rep.checks) {
            INFO(name);
            CHECK(ok);
        }
        CHECK(rep.all_ok());
    }
    Context gf = random_context(4, 101, 11);
    DaggerReport rep = dagger_property_suite(build_dagger(gf), 25, 3);
    CHECK(rep.all_ok());
}

TEST_CASE("dagger is an antiautomorphism on explicit products") {
    Context ctx = krawtchouk_ctx(3, Q);
    DaggerData dd = build_dagger(ctx);
    SplitMix64 rng(42);
    for (int t = 0; t < 20; ++t) {
        ExactMatrix X = random_matrix(Q, 4, rng);
        ExactMatrix Y = random_matrix(Q, 4, rng);
        CHECK(dd.apply(X * Y) == dd.apply(Y) * dd.apply(X));
        CHECK(dd.apply(dd.apply(X)) == X);
        CHECK(dd.apply(X + Y) == dd.apply(X) + dd.apply(Y));
    }
    // fixes A, A*, every E*_i and every E_i
    CHECK(dd.apply(ctx.A) == ctx.A);
    CHECK(dd.apply(ctx.Astar) == ctx.Astar);
    for (const auto& E : ctx.dual_idempotents.members) CHECK(dd.apply(E) == E);
    for (const auto& E : ctx.eigen.idempotents) CHECK(dd.apply(E) == E);
}

TEST_CASE("basis certificate") {
    for (std::size_t d = 1; d <= 4; ++d)
        CHECK(basis_certificate(krawtchouk_ctx(d, Q)));
    CHECK(basis_certificate(krawtchouk_ctx(3, FieldSpec::gfp(101))));
    CHECK(basis_certificate(random_context(3, 101, 5)));
}

TEST_CASE("generation check reconstructs arbitrary operators") {
    Context ctx = krawtchouk_ctx(2, Q);
    SplitMix64 rng(13);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix X = random_matrix(Q, 3, rng);
        std::vector<FieldElement> coeffs = generation_check(ctx, X);
        REQUIRE(coeffs.size() == 9);
        ExactMatrix rebuilt(Q, 3, 3);
        std::size_t k = 0;
        for (std::size_t r = 0; r <= 2; ++r)
            for (std::size_t s = 0; s <= 2; ++s)
                rebuilt = rebuilt +
                          (ctx.A.pow(r) * ctx.dual_idempotents.members[0] * ctx.A.pow(s))
                              .scale(coeffs[k++]);
        CHECK(rebuilt == X);
    }
}

TEST_CASE("dagger transposes the basis coefficients") {
    // (A^r E*_0 A^s)^dagger = A^s E*_0 A^r, so dagger acts on coefficient
    // grids as the (r,s) transpose
    Context ctx = krawtchouk_ctx(3, Q);
    DaggerData dd = build_dagger(ctx);
    const ExactMatrix& E0 = ctx.dual_idempotents.members[0];
    for (std::size_t r = 0; r <= 3; ++r)
        for (std::size_t s = 0; s <= 3; ++s)
            CHECK(dd.apply(ctx.A.pow(r) * E0 * ctx.A.pow(s)) ==
                  ctx.A.pow(s) * E0 * ctx.A.pow(r));
}
