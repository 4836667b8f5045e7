#include <doctest.h>

#include "leonard/delta.hpp"
#include "leonard/instances.hpp"
#include "leonard/qpoly.hpp"

using namespace leonard;

namespace {
const FieldSpec Q = FieldSpec::rational();
}

TEST_CASE("krawtchouk construction") {
    KrawtchoukInstance k = krawtchouk(3, Q);
    CHECK(k.A == ExactMatrix::from_rows(Q, {{"0", "3", "0", "0"},
                                            {"1", "0", "2", "0"},
                                            {"0", "2", "0", "1"},
                                            {"0", "0", "3", "0"}}));
    std::vector<std::string> want = {"3", "1", "-1", "-3"};
    for (std::size_t i = 0; i <= 3; ++i)
        CHECK(k.theta_star[i] == FieldElement::parse(want[i], Q));
    // theta of A equals theta* as a set for this self-dual family
    CHECK(k.ctx.eigen.eigenvalues == k.theta_star);
    CHECK(verify_leonard_pair(k.A, k.Astar).is_pair);
}

TEST_CASE("krawtchouk d=1 matches the hand example") {
    KrawtchoukInstance k = krawtchouk(1, Q);
    CHECK(k.A == ExactMatrix::from_rows(Q, {{"0", "1"}, {"1", "0"}}));
    CHECK(k.theta_star[0] == FieldElement::from_integer(1, Q));
    CHECK(k.theta_star[1] == FieldElement::from_integer(-1, Q));
}

TEST_CASE("krawtchouk qpoly verdict is positive through d=6") {
    for (std::size_t d = 1; d <= 6; ++d) {
        Context ctx = krawtchouk(d, Q).ctx;
        CHECK(decide(ctx, 0, 1).qpoly);
    }
}

TEST_CASE("krawtchouk over GF(p)") {
    KrawtchoukInstance k = krawtchouk(3, FieldSpec::gfp(101));
    CHECK(verify_leonard_pair(k.A, k.Astar).is_pair);
    CHECK(decide(k.ctx, 0, 1).qpoly);
    // d - 2i collides mod small p: d=3 over GF(3) has 3-0 = 3 == 0 = 3-2*0?
    // theta* = (3,1,-1,-3) = (0,1,2,0) mod 3
    CHECK_THROWS_AS(krawtchouk(3, FieldSpec::gfp(3)), instance_error);
    // off-diagonal entry vanishes: entry 3 == 0 mod 3 already covered; over
    // GF(2), d=2 gives theta* (0,0,0) -> rejected
    CHECK_THROWS_AS(krawtchouk(2, FieldSpec::gfp(2)), instance_error);
}

TEST_CASE("random_context is deterministic and valid") {
    Context a = random_context(3, 101, 42);
    Context b = random_context(3, 101, 42);
    CHECK(a.A == b.A);
    CHECK(a.theta_star == b.theta_star);
    CHECK(a.d == 3);
    CHECK(is_irreducible_tridiagonal(a.A));
    // spectrum split and multiplicity-free by construction
    CHECK(a.eigen.eigenvalues.size() == 4);
    // distinct theta* by default
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(a.theta_star[i] != a.theta_star[j]);
    Context c = random_context(3, 101, 43);
    CHECK(a.A != c.A);
}

TEST_CASE("random_context with repeats allowed eventually repeats") {
    bool saw_repeat = false;
    for (std::uint64_t seed = 0; seed < 40 && !saw_repeat; ++seed) {
        Context ctx = random_context(2, 7, seed, true);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (ctx.theta_star[i] == ctx.theta_star[j]) saw_repeat = true;
    }
    CHECK(saw_repeat);
}

TEST_CASE("non_example_complete_delta has no tails") {
    for (std::size_t d = 2; d <= 3; ++d) {
        Context ctx = non_example_complete_delta(d, 101, 7);
        DeltaGraph g = build_delta(ctx);
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t j = 0; j <= d; ++j)
                if (i != j) CHECK_FALSE(is_tail(g, i, j).is_tail);
        CHECK(q_polynomial_orderings(g).empty());
    }
}

TEST_CASE("tridiagonal char poly recurrence agrees with the general routine") {
    for (std::size_t d = 1; d <= 5; ++d) {
        ExactMatrix A = krawtchouk(d, Q).A;
        CHECK(tridiagonal_char_poly(A) == char_poly(A));
    }
    Context gf = random_context(4, 101, 9);
    CHECK(tridiagonal_char_poly(gf.A) == char_poly(gf.A));
}
