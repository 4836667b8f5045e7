#ifndef LEONARD_QPOLY_HPP
#define LEONARD_QPOLY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "leonard/delta.hpp"

namespace leonard {

// decide() cross-validates the three-condition verdict against the
// path-oracle; a disagreement would falsify the implementation.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BetaStatus { Solution, Unconstrained, NoSolution };

const char* to_string(BetaStatus s);

/// Recurrence constants for a dual eigenvalue sequence: beta from the
/// three-term constancy, gamma* its common value, delta* the common value
/// of the quadratic expression p_i.
struct RecurrenceData {
    BetaStatus status = BetaStatus::NoSolution;
    std::optional<FieldElement> beta;
    std::optional<FieldElement> gamma_star;
    std::optional<FieldElement> delta_star;
    std::vector<FieldElement> p_values; // p_1 .. p_d
};

// Solves theta*_{i-1} - beta theta*_i + theta*_{i+1} = const over
// 1 <= i <= d-1. Vacuous for d <= 2 (Unconstrained); inconsistent systems
// report NoSolution.
RecurrenceData beta_solve(const std::vector<FieldElement>& theta_star);

// Fills gamma*/delta* for a concrete beta and verifies that p_i is constant
// and that consecutive differences telescope. For d = 1 gamma* is the
// caller's canonical choice.
RecurrenceData gamma_delta(const std::vector<FieldElement>& theta_star,
                           const FieldElement& beta,
                           const std::optional<FieldElement>& gamma_for_d1 = std::nullopt);

// Canonical constants used when beta is unconstrained: beta = 2 and, for
// d = 1, gamma* = 0.
RecurrenceData canonical_recurrence(const std::vector<FieldElement>& theta_star);

// C = [A*, A*^2 A - beta A* A A* + A A*^2 - gamma*(A A* + A* A) - delta* A];
// true iff C = 0.
bool bracket_identity_check(const Context& ctx, const RecurrenceData& rec);

struct PathRelationEntry {
    std::array<std::size_t, 4> quad; // (i, r, s, j)
    bool relation_holds = false;     // theta_i - (b+1)theta_r + (b+1)theta_s - theta_j = 0
    bool product_nonzero = false;    // E_i A* E_r A* E_s A* E_j != 0
};

struct PathRelationReport {
    std::vector<PathRelationEntry> entries;
    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.relation_holds || !e.product_nonzero) return false;
        return true;
    }
};

// Checks the length-3 relation on every ordered vertex pair at distance 3
// joined by a unique path. Vacuously passes when no such pair exists.
PathRelationReport path_relation_check(const Context& ctx, const RecurrenceData& rec);

struct QPolyVerdict {
    std::pair<std::size_t, std::size_t> pair;
    TailReport tail;
    BetaStatus beta_status = BetaStatus::NoSolution;
    std::optional<FieldElement> beta;
    bool recurrence_ok = false;
    bool condition_iii = false;
    bool qpoly = false;
    std::optional<std::vector<std::size_t>> certificate; // Q-polynomial ordering
    std::string failure_clause;
    bool oracle_qpoly = false;
    bool oracle_agrees = false;
};

// The main decision: conditions (i)-(iii) against the Delta-path oracle.
// Throws integrity_error if the two routes disagree.
QPolyVerdict decide(const Context& ctx, std::size_t i, std::size_t j);

struct SweepReport {
    std::vector<QPolyVerdict> verdicts; // all ordered pairs, lexicographic
    bool any_positive = false;
};

SweepReport theorem_equivalence_sweep(const Context& ctx);

// True iff the beta solving the theta*-recurrence also makes the theta
// sequence (in the given Q-polynomial ordering) satisfy its recurrence.
bool theta_beta_crosscheck(const Context& ctx, const std::vector<std::size_t>& ordering);

} // namespace leonard

#endif
