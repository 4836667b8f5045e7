#include <doctest.h>

#include "leonard/instances.hpp"
#include "leonard/qpoly.hpp"

using namespace leonard;

namespace {
const FieldSpec Q = FieldSpec::rational();

std::vector<FieldElement> elems(const FieldSpec& F, std::vector<std::string> xs) {
    std::vector<FieldElement> out;
    for (const auto& x : xs) out.push_back(FieldElement::parse(x, F));
    return out;
}

FieldElement q(const std::string& s) { return FieldElement::parse(s, Q); }
} // namespace

TEST_CASE("beta_solve on arithmetic and geometric sequences") {
    // arithmetic theta* (Krawtchouk): beta = 2, gamma* = 0, delta* = step^2
    RecurrenceData rec = canonical_recurrence(elems(Q, {"3", "1", "-1", "-3"}));
    CHECK(rec.status == BetaStatus::Solution);
    CHECK(*rec.beta == q("2"));
    CHECK(*rec.gamma_star == q("0"));
    CHECK(*rec.delta_star == q("4"));

    // geometric theta* = 3^i: beta = q + 1/q = 10/3, gamma* = 0, delta* = 0
    RecurrenceData geo = canonical_recurrence(elems(Q, {"1", "3", "9", "27"}));
    CHECK(geo.status == BetaStatus::Solution);
    CHECK(*geo.beta == q("10/3"));
    CHECK(*geo.gamma_star == q("0"));
    CHECK(*geo.delta_star == q("0"));

    // inconsistent sequence, d = 4: i = 1 forces beta = 2, i = 2 forces 3
    RecurrenceData bad = beta_solve(elems(Q, {"0", "1", "2", "3", "5"}));
    CHECK(bad.status == BetaStatus::NoSolution);
    CHECK(canonical_recurrence(elems(Q, {"0", "1", "2", "3", "5"})).status ==
          BetaStatus::NoSolution);

    // d <= 2 is vacuous
    CHECK(beta_solve(elems(Q, {"1", "5"})).status == BetaStatus::Unconstrained);
    CHECK(beta_solve(elems(Q, {"1", "5", "2"})).status == BetaStatus::Unconstrained);
    CHECK(std::string(to_string(BetaStatus::Unconstrained)) == "unconstrained");
}

TEST_CASE("canonical choices when beta is unconstrained") {
    // d = 2: beta = 2, gamma* forced by the single equation
    RecurrenceData rec = canonical_recurrence(elems(Q, {"1", "5", "2"}));
    CHECK(rec.status == BetaStatus::Unconstrained);
    CHECK(*rec.beta == q("2"));
    CHECK(*rec.gamma_star == q("1") - q("2") * q("5") + q("2")); // = -7
    CHECK(*rec.gamma_star == q("-7"));
    // d = 1: beta = 2, gamma* = 0 by convention
    RecurrenceData one = canonical_recurrence(elems(Q, {"1", "5"}));
    CHECK(*one.beta == q("2"));
    CHECK(*one.gamma_star == q("0"));
    // p_1 = 1 - 2*5 + 25 = 16
    CHECK(*one.delta_star == q("16"));
}

TEST_CASE("gamma_delta validates its inputs") {
    auto ts = elems(Q, {"3", "1", "-1", "-3"});
    CHECK_THROWS_AS(gamma_delta(ts, q("5")), context_error);
    RecurrenceData rec = gamma_delta(ts, q("2"));
    REQUIRE(rec.p_values.size() == 3);
    for (const auto& p : rec.p_values) CHECK(p == q("4"));
}

TEST_CASE("bracket identity on positive instances") {
    for (std::size_t d = 1; d <= 4; ++d) {
        Context ctx = krawtchouk(d, Q).ctx;
        RecurrenceData rec = canonical_recurrence(ctx.theta_star);
        CHECK(bracket_identity_check(ctx, rec));
    }
    Context gf = random_context(4, 101, 17);
    RecurrenceData rec = canonical_recurrence(gf.theta_star);
    if (rec.status != BetaStatus::NoSolution) {
        // only meaningful when the sweep is positive somewhere; still must
        // not throw
        bracket_identity_check(gf, rec);
    }
}

TEST_CASE("bracket identity detects a corrupted constant") {
    Context ctx = krawtchouk(3, Q).ctx;
    RecurrenceData rec = canonical_recurrence(ctx.theta_star);
    RecurrenceData wrong = rec;
    wrong.delta_star = *rec.delta_star + q("1");
    CHECK(bracket_identity_check(ctx, rec));
    CHECK_FALSE(bracket_identity_check(ctx, wrong));
}

TEST_CASE("length-3 path relation") {
    Context ctx = krawtchouk(3, Q).ctx;
    RecurrenceData rec = canonical_recurrence(ctx.theta_star);
    PathRelationReport rep = path_relation_check(ctx, rec);
    // Delta is the path 0-1-2-3: exactly the two ordered pairs (0,3), (3,0)
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.all_ok());
    // no distance-3 pairs for d = 2: vacuous pass
    Context small = krawtchouk(2, Q).ctx;
    PathRelationReport vac =
        path_relation_check(small, canonical_recurrence(small.theta_star));
    CHECK(vac.entries.empty());
    CHECK(vac.all_ok());
    // d = 5: pairs (0,3),(1,4),(2,5) and reverses
    Context big = krawtchouk(5, Q).ctx;
    PathRelationReport six =
        path_relation_check(big, canonical_recurrence(big.theta_star));
    CHECK(six.entries.size() == 6);
    CHECK(six.all_ok());
}

TEST_CASE("decide on the classical fixture") {
    Context ctx = krawtchouk(3, Q).ctx;
    QPolyVerdict v = decide(ctx, 0, 1);
    CHECK(v.qpoly);
    CHECK(v.oracle_agrees);
    CHECK(v.tail.is_tail);
    CHECK(v.condition_iii);
    REQUIRE(v.certificate.has_value());
    CHECK(*v.certificate == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(v.failure_clause.empty());

    QPolyVerdict rev = decide(ctx, 3, 2);
    CHECK(rev.qpoly);
    CHECK(*rev.certificate == std::vector<std::size_t>{3, 2, 1, 0});

    QPolyVerdict mid = decide(ctx, 1, 2);
    CHECK_FALSE(mid.qpoly);
    CHECK(mid.failure_clause == "not_a_tail");
    CHECK(mid.oracle_agrees);

    CHECK_THROWS_AS(decide(ctx, 0, 0), context_error);
    CHECK_THROWS_AS(decide(ctx, 0, 9), context_error);
}

TEST_CASE("decide respects condition (iii)") {
    // theta* = (0, 1, 0, 2): theta*_0 repeats at position 2
    Context ctx = build_context(krawtchouk(3, Q).A, elems(Q, {"0", "1", "0", "2"}));
    SweepReport rep = theorem_equivalence_sweep(ctx);
    CHECK_FALSE(rep.any_positive);
    for (const auto& v : rep.verdicts) {
        CHECK(v.oracle_agrees);
        if (v.tail.is_tail && v.recurrence_ok)
            CHECK(v.failure_clause == "theta_star_0_repeats");
    }
}

TEST_CASE("decide respects condition (ii)") {
    // distinct theta* with no beta solution
    Context ctx = build_context(krawtchouk(4, Q).A, elems(Q, {"0", "1", "2", "3", "5"}));
    SweepReport rep = theorem_equivalence_sweep(ctx);
    CHECK_FALSE(rep.any_positive);
    for (const auto& v : rep.verdicts) {
        CHECK(v.oracle_agrees);
        CHECK(v.beta_status == BetaStatus::NoSolution);
        if (v.tail.is_tail) CHECK(v.failure_clause == "no_beta_recurrence");
    }
}

TEST_CASE("sweep on positive and negative fixtures") {
    for (std::size_t d = 1; d <= 4; ++d) {
        SweepReport rep = theorem_equivalence_sweep(krawtchouk(d, Q).ctx);
        CHECK(rep.any_positive);
        CHECK(rep.verdicts.size() == d * (d + 1));
        std::size_t positives = 0;
        for (const auto& v : rep.verdicts)
            if (v.qpoly) ++positives;
        CHECK(positives == (d == 1 ? 2 : 2)); // exactly the two path heads
    }
    Context neg = non_example_complete_delta(2, 101, 23);
    SweepReport rep = theorem_equivalence_sweep(neg);
    CHECK_FALSE(rep.any_positive);
    for (const auto& v : rep.verdicts) CHECK(v.failure_clause == "not_a_tail");
}

TEST_CASE("random GF(101) contexts never split decide from the oracle") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Context ctx = random_context(3, 101, seed);
        SweepReport rep = theorem_equivalence_sweep(ctx); // throws on any split
        for (const auto& v : rep.verdicts) CHECK(v.oracle_agrees);
    }
}

TEST_CASE("theta and theta* share the recurrence parameter") {
    for (std::size_t d = 1; d <= 5; ++d) {
        Context ctx = krawtchouk(d, Q).ctx;
        std::vector<std::size_t> fwd(d + 1);
        for (std::size_t k = 0; k <= d; ++k) fwd[k] = k;
        CHECK(theta_beta_crosscheck(ctx, fwd));
        std::vector<std::size_t> rev(fwd.rbegin(), fwd.rend());
        CHECK(theta_beta_crosscheck(ctx, rev));
    }
    Context ctx = krawtchouk(3, Q).ctx;
    CHECK_THROWS_AS(theta_beta_crosscheck(ctx, {1, 0, 2, 3}), context_error);
}
