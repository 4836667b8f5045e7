#include "leonard/qpoly.hpp"

#include <algorithm>

namespace leonard {

const char* to_string(BetaStatus s) {
    switch (s) {
        case BetaStatus::Solution: return "solution";
        case BetaStatus::Unconstrained: return "unconstrained";
        case BetaStatus::NoSolution: return "none";
    }
    return "?";
}

RecurrenceData beta_solve(const std::vector<FieldElement>& ts) {
    if (ts.size() < 2) throw context_error("beta_solve: need d >= 1");
    std::size_t d = ts.size() - 1;
    RecurrenceData rec;
    if (d <= 2) {
        // at most one i in range: constancy is vacuous
        rec.status = BetaStatus::Unconstrained;
        return rec;
    }
    // equating consecutive values: beta (theta*_i - theta*_{i+1}) =
    //   theta*_{i-1} + theta*_{i+1} - theta*_i - theta*_{i+2}, 1 <= i <= d-2
    std::optional<FieldElement> beta;
    bool inconsistent = false;
    for (std::size_t i = 1; i + 2 <= d; ++i) {
        FieldElement c = ts[i] - ts[i + 1];
        FieldElement r = ts[i - 1] + ts[i + 1] - ts[i] - ts[i + 2];
        if (c.is_zero()) {
            if (!r.is_zero()) inconsistent = true;
        } else {
            FieldElement b = r / c;
            if (beta && *beta != b) inconsistent = true;
            beta = b;
        }
        if (inconsistent) break;
    }
    if (inconsistent) {
        rec.status = BetaStatus::NoSolution;
    } else if (beta) {
        rec.status = BetaStatus::Solution;
        rec.beta = beta;
    } else {
        rec.status = BetaStatus::Unconstrained;
    }
    return rec;
}

RecurrenceData gamma_delta(const std::vector<FieldElement>& ts,
                           const FieldElement& beta,
                           const std::optional<FieldElement>& gamma_for_d1) {
    std::size_t d = ts.size() - 1;
    if (d < 1) throw context_error("gamma_delta: need d >= 1");
    RecurrenceData rec;
    rec.status = BetaStatus::Solution;
    rec.beta = beta;

    FieldElement gamma = FieldElement::zero(beta.spec());
    if (d >= 2) {
        gamma = ts[0] - beta * ts[1] + ts[2];
        // beta must actually solve the constancy condition
        for (std::size_t i = 1; i <= d - 1; ++i)
            if (ts[i - 1] - beta * ts[i] + ts[i + 1] != gamma)
                throw context_error("gamma_delta: beta does not solve the recurrence");
    } else {
        gamma = gamma_for_d1.value_or(FieldElement::zero(beta.spec()));
    }
    rec.gamma_star = gamma;

    for (std::size_t i = 1; i <= d; ++i) {
        FieldElement p = ts[i - 1] * ts[i - 1] - beta * ts[i - 1] * ts[i] +
                         ts[i] * ts[i] - gamma * (ts[i - 1] + ts[i]);
        rec.p_values.push_back(p);
    }
    rec.delta_star = rec.p_values.front();
    for (std::size_t i = 1; i < rec.p_values.size(); ++i) {
        if (rec.p_values[i] != *rec.delta_star)
            throw context_error("gamma_delta: p_i is not constant");
        // telescoping identity
        FieldElement lhs = rec.p_values[i - 1] - rec.p_values[i];
        FieldElement rhs = (ts[i - 1] - ts[i + 1]) *
                           (ts[i - 1] - beta * ts[i] + ts[i + 1] - gamma);
        if (lhs != rhs)
            throw context_error("gamma_delta: telescoping identity fails");
    }
    return rec;
}

RecurrenceData canonical_recurrence(const std::vector<FieldElement>& ts) {
    const FieldSpec& F = ts.front().spec();
    RecurrenceData base = beta_solve(ts);
    if (base.status == BetaStatus::NoSolution) return base;
    FieldElement beta = base.status == BetaStatus::Solution
                            ? *base.beta
                            : FieldElement::from_integer(2, F);
    RecurrenceData rec = gamma_delta(ts, beta);
    rec.status = base.status;
    return rec;
}

bool bracket_identity_check(const Context& ctx, const RecurrenceData& rec) {
    if (!rec.beta || !rec.gamma_star || !rec.delta_star)
        throw context_error("bracket_identity_check: concrete constants required");
    const ExactMatrix& A = ctx.A;
    const ExactMatrix& As = ctx.Astar;
    ExactMatrix inner = As * As * A - (As * A * As).scale(*rec.beta) + A * As * As -
                        (A * As + As * A).scale(*rec.gamma_star) -
                        A.scale(*rec.delta_star);
    ExactMatrix C = As * inner - inner * As;
    return C.is_zero();
}

PathRelationReport path_relation_check(const Context& ctx, const RecurrenceData& rec) {
    if (!rec.beta)
        throw context_error("path_relation_check: concrete beta required");
    std::size_t n = ctx.d + 1;
    DeltaGraph g = build_delta(ctx);

    // BFS distances
    std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, n + 1));
    for (std::size_t s = 0; s < n; ++s) {
        dist[s][s] = 0;
        std::vector<std::size_t> frontier = {s};
        std::size_t level = 0;
        while (!frontier.empty()) {
            ++level;
            std::vector<std::size_t> next;
            for (auto v : frontier)
                for (auto w : g.neighbors(v))
                    if (dist[s][w] > n) {
                        dist[s][w] = level;
                        next.push_back(w);
                    }
            frontier = std::move(next);
        }
    }

    const FieldElement one = FieldElement::one(ctx.field);
    FieldElement bp1 = *rec.beta + one;
    PathRelationReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || dist[i][j] != 3) continue;
            std::vector<std::array<std::size_t, 4>> paths;
            for (auto r : g.neighbors(i))
                for (auto s : g.neighbors(j))
                    if (g.adjacent(r, s)) paths.push_back({i, r, s, j});
            if (paths.size() != 1) continue;
            auto [pi, pr, ps, pj] = paths[0];
            PathRelationEntry e;
            e.quad = paths[0];
            const auto& th = ctx.eigen.eigenvalues;
            e.relation_holds =
                (th[pi] - bp1 * th[pr] + bp1 * th[ps] - th[pj]).is_zero();
            const auto& E = ctx.eigen.idempotents;
            e.product_nonzero =
                !(E[pi] * ctx.Astar * E[pr] * ctx.Astar * E[ps] * ctx.Astar * E[pj])
                     .is_zero();
            rep.entries.push_back(e);
        }
    return rep;
}

QPolyVerdict decide(const Context& ctx, std::size_t i, std::size_t j) {
    std::size_t n = ctx.d + 1;
    if (i >= n || j >= n || i == j)
        throw context_error("decide: need distinct vertex indices in range");

    QPolyVerdict v;
    v.pair = {i, j};
    DeltaGraph g = build_delta(ctx);
    v.tail = is_tail(g, i, j);

    RecurrenceData rec = beta_solve(ctx.theta_star);
    v.beta_status = rec.status;
    v.beta = rec.beta;
    v.recurrence_ok = rec.status != BetaStatus::NoSolution;

    v.condition_iii = true;
    for (std::size_t k = 1; k <= ctx.d; ++k)
        if (ctx.theta_star[0] == ctx.theta_star[k]) v.condition_iii = false;

    v.qpoly = v.tail.is_tail && v.recurrence_ok && v.condition_iii;
    if (!v.tail.is_tail)
        v.failure_clause = "not_a_tail";
    else if (!v.recurrence_ok)
        v.failure_clause = "no_beta_recurrence";
    else if (!v.condition_iii)
        v.failure_clause = "theta_star_0_repeats";

    // independent oracle: is (E_i, E_j) the head of a Q-polynomial ordering?
    for (const auto& order : q_polynomial_orderings(g)) {
        if (order.size() >= 2 && order[0] == i && order[1] == j &&
            verify_leonard_system(ctx, order).is_system) {
            v.oracle_qpoly = true;
            v.certificate = order;
        }
    }
    v.oracle_agrees = v.oracle_qpoly == v.qpoly;
    if (!v.oracle_agrees)
        throw integrity_error(
            "decide: conditions (i)-(iii) disagree with the path oracle on pair (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
    return v;
}

SweepReport theorem_equivalence_sweep(const Context& ctx) {
    SweepReport rep;
    std::size_t n = ctx.d + 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            QPolyVerdict v = decide(ctx, i, j);
            rep.any_positive = rep.any_positive || v.qpoly;
            rep.verdicts.push_back(std::move(v));
        }
    return rep;
}

bool theta_beta_crosscheck(const Context& ctx, const std::vector<std::size_t>& ordering) {
    if (!verify_leonard_system(ctx, ordering).is_system)
        throw context_error("theta_beta_crosscheck: ordering is not a Leonard system");
    if (ctx.d <= 2) return true;
    RecurrenceData rec = beta_solve(ctx.theta_star);
    if (rec.status == BetaStatus::NoSolution) return false;

    std::vector<FieldElement> th;
    for (auto k : ordering) th.push_back(ctx.eigen.eigenvalues[k]);
    if (rec.status == BetaStatus::Unconstrained)
        return beta_solve(th).status != BetaStatus::NoSolution;
    FieldElement gamma = th[0] - *rec.beta * th[1] + th[2];
    for (std::size_t i = 1; i <= ctx.d - 1; ++i)
        if (th[i - 1] - *rec.beta * th[i] + th[i + 1] != gamma) return false;
    return true;
}

} // namespace leonard
