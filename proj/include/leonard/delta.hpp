#ifndef LEONARD_DELTA_HPP
#define LEONARD_DELTA_HPP

#include <cstdint>
#include <vector>

#include "leonard/context.hpp"

namespace leonard {

/// Undirected simple graph on the eigenline indices {0..d}:
/// i ~ j iff i != j and E_i A* E_j != 0.
struct DeltaGraph {
    std::size_t n_vertices = 0;
    std::vector<std::vector<bool>> adjacency; // symmetric, zero diagonal

    bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i][j]; }
    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::size_t degree(std::size_t i) const { return neighbors(i).size(); }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

struct TailReport {
    std::pair<std::size_t, std::size_t> pair;
    bool is_tail = false;
    bool pair_adjacent = false; // the definition does not require i ~ j
    std::vector<std::size_t> offending_neighbors_i; // neighbors of i besides j
    std::vector<std::size_t> offending_neighbors_j; // neighbors of j besides i
};

struct ConnectivityReport {
    bool connected = false;
    std::vector<std::vector<std::size_t>> components;
};

// Adjacency from the exact products E_i A* E_j; symmetry is asserted,
// a violation would mean an arithmetic bug upstream.
DeltaGraph build_delta(const Context& ctx);

// Tail test: (i) neighbors(i) subset of {j}; (ii) at most one neighbor of j
// besides i.
TailReport is_tail(const DeltaGraph& g, std::size_t i, std::size_t j);

// Empty unless g is a spanning path; otherwise the two end-to-end traversals.
std::vector<std::vector<std::size_t>> q_polynomial_orderings(const DeltaGraph& g);

// (first, second) vertices of each path traversal that verifies as a
// Leonard system, deduplicated.
std::vector<std::pair<std::size_t, std::size_t>> q_polynomial_pairs(const Context& ctx);

// U = sum_{h in S} E_h V as a list of spanning vectors; always A-invariant.
std::vector<Vector> invariant_subspace_A(const Context& ctx,
                                         const std::vector<std::size_t>& S);

// Recovers S from an A-invariant subspace given by spanning vectors; throws
// if the span is not A-invariant.
std::vector<std::size_t> classify_A_invariant(const Context& ctx,
                                              const std::vector<Vector>& U);

// Whether A* U is contained in U for U = sum_{h in S} E_h V, computed by direct
// containment; asserts agreement with the no-crossing-edge criterion on Delta.
bool astar_invariance_test(const Context& ctx, const std::vector<std::size_t>& S);

ConnectivityReport connectivity(const DeltaGraph& g);

bool is_path_graph(const DeltaGraph& g);

// DOT text for external visualization.
std::string to_dot(const DeltaGraph& g);

} // namespace leonard

#endif
