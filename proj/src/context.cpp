#include "leonard/context.hpp"

#include <algorithm>

namespace leonard {

const char* to_string(LeonardFailure f) {
    switch (f) {
        case LeonardFailure::None: return "none";
        case LeonardFailure::NotSplit: return "not_split";
        case LeonardFailure::NotMultiplicityFree: return "not_multiplicity_free";
        case LeonardFailure::NoTridiagonalBasisForA: return "no_tridiagonal_basis_for_A";
        case LeonardFailure::NoTridiagonalBasisForAstar: return "no_tridiagonal_basis_for_Astar";
        case LeonardFailure::DualEigenvaluesRepeat: return "dual_eigenvalues_repeat";
        case LeonardFailure::PatternConditionV: return "pattern_condition_v";
    }
    return "?";
}

Context build_context(const ExactMatrix& A,
                      const std::vector<FieldElement>& theta_star,
                      const std::optional<std::vector<FieldElement>>& eigen_order) {
    if (!A.is_square()) throw context_error("build_context: A must be square");
    std::size_t n = A.rows();
    if (n < 2) throw context_error("build_context: d >= 1 required");
    if (n > kMaxDim) throw context_error("build_context: dimension cap exceeded");
    if (theta_star.size() != n)
        throw context_error("build_context: theta_star has wrong length");
    const FieldSpec& F = A.spec();
    for (const auto& t : theta_star)
        if (t.spec() != F) throw context_error("build_context: mixed fields");

    // the shape invariant in the canonical model is literal tridiagonality
    if (!is_irreducible_tridiagonal(A))
        throw shape_violation("build_context: A is not irreducible tridiagonal "
                              "in the dual eigenbasis");

    IdempotentSystem duals;
    for (std::size_t i = 0; i < n; ++i) {
        ExactMatrix E(F, n, n);
        E.at(i, i) = FieldElement::one(F);
        duals.members.push_back(std::move(E));
    }
    ExactMatrix Astar(F, n, n);
    for (std::size_t i = 0; i < n; ++i) Astar.at(i, i) = theta_star[i];

    EigenData eigen = eigen_split(A, eigen_order);
    return Context{F, n - 1, A, std::move(duals), theta_star, std::move(Astar),
                   std::move(eigen)};
}

namespace {

// Is there an ordering of indices making the support of M (off-diagonal
// nonzero pattern) an irreducible tridiagonal matrix? The support graph must
// be a spanning path with both directions nonzero along it.
std::optional<std::vector<std::size_t>> tridiagonalizing_order(const ExactMatrix& M) {
    std::size_t n = M.rows();
    if (n == 1) return std::vector<std::size_t>{0};
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!M.at(i, j).is_zero() || !M.at(j, i).is_zero()) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            }
    if (edges != n - 1) return std::nullopt;
    std::size_t endpoint = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() > 2) return std::nullopt;
        if (adj[i].size() == 1 && endpoint == n) endpoint = i;
    }
    if (endpoint == n) return std::nullopt;
    // walk the path; |edges| = n-1 with max degree 2 and an endpoint makes
    // this traversal spanning iff the graph is connected
    std::vector<std::size_t> order = {endpoint};
    std::size_t prev = n, cur = endpoint;
    while (order.size() < n) {
        std::size_t next = n;
        for (auto v : adj[cur])
            if (v != prev) next = v;
        if (next == n) return std::nullopt; // disconnected
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (M.at(order[k], order[k + 1]).is_zero() ||
            M.at(order[k + 1], order[k]).is_zero())
            return std::nullopt;
    return order;
}

// Eigenbasis columns of a multiplicity-free operator, one per idempotent.
ExactMatrix eigenbasis_columns(const EigenData& ed) {
    std::size_t n = ed.op.rows();
    ExactMatrix P(ed.op.spec(), n, n);
    IdempotentSystem sys{ed.idempotents};
    Decomposition dec = decomposition_from_idempotents(sys);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            P.at(i, j) = dec.subspaces[j][i];
    return P;
}

// One direction of the pair definition: a basis of Y-eigenvectors in which X is
// irreducible tridiagonal (and Y diagonal).
std::optional<BasisChange> tridiagonal_witness(const ExactMatrix& X,
                                               const ExactMatrix& Y,
                                               LeonardFailure& why) {
    std::optional<EigenData> ed;
    try {
        ed = eigen_split(Y);
    } catch (const spectral_error& e) {
        why = e.kind == SpectralError::NotSplit ? LeonardFailure::NotSplit
                                                : LeonardFailure::NotMultiplicityFree;
        return std::nullopt;
    }
    ExactMatrix P = eigenbasis_columns(*ed);
    BasisChange B = BasisChange::from_columns(P);
    ExactMatrix Xrep = represent(X, B);
    auto order = tridiagonalizing_order(Xrep);
    if (!order) return std::nullopt;
    std::size_t n = X.rows();
    ExactMatrix Q(X.spec(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            Q.at(i, j) = P.at(i, (*order)[j]);
    return BasisChange::from_columns(Q);
}

} // namespace

LeonardVerdict verify_leonard_pair(const ExactMatrix& A, const ExactMatrix& Astar) {
    if (!A.is_square() || !Astar.is_square() || A.rows() != Astar.rows())
        throw context_error("verify_leonard_pair: dimension mismatch");
    if (A.spec() != Astar.spec())
        throw context_error("verify_leonard_pair: mixed fields");

    LeonardVerdict v;
    if (A.rows() == 1) { // d = 0: both conditions are vacuous
        v.is_pair = true;
        BasisChange id = BasisChange::from_columns(ExactMatrix::identity(A.spec(), 1));
        v.witness_basis_A = id;
        v.witness_basis_Astar = id;
        return v;
    }

    LeonardFailure whyA = LeonardFailure::NoTridiagonalBasisForA;
    auto wA = tridiagonal_witness(A, Astar, whyA);
    if (!wA) {
        v.failure_reason = whyA;
        return v;
    }
    LeonardFailure whyAstar = LeonardFailure::NoTridiagonalBasisForAstar;
    auto wAstar = tridiagonal_witness(Astar, A, whyAstar);
    if (!wAstar) {
        v.failure_reason = whyAstar;
        return v;
    }
    v.is_pair = true;
    v.witness_basis_A = *wA;
    v.witness_basis_Astar = *wAstar;
    return v;
}

LeonardVerdict verify_leonard_system(const Context& ctx,
                                     const std::vector<std::size_t>& ordering) {
    std::size_t n = ctx.d + 1;
    if (ordering.size() != n)
        throw context_error("verify_leonard_system: ordering has wrong length");
    std::vector<bool> seen(n, false);
    for (auto k : ordering) {
        if (k >= n || seen[k])
            throw context_error("verify_leonard_system: not a permutation");
        seen[k] = true;
    }

    LeonardVerdict v;
    // (i)/(iii): A is multiplicity-free by construction; A* = diag(theta*)
    // is multiplicity-free iff the theta* are distinct, in which case the
    // coordinate projections are exactly its primitive idempotents.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ctx.theta_star[i] == ctx.theta_star[j]) {
                v.failure_reason = LeonardFailure::DualEigenvaluesRepeat;
                return v;
            }
    // (ii) holds: ordering is a permutation of A's primitive idempotents.
    // (iv) holds by the context's shape invariant.
    // (v): E_{s(i)} A* E_{s(j)} zero iff |i-j| > 1, nonzero iff |i-j| = 1.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t gap = i > j ? i - j : j - i;
            if (gap == 0) continue;
            ExactMatrix prod = ctx.eigen.idempotents[ordering[i]] * ctx.Astar *
                               ctx.eigen.idempotents[ordering[j]];
            bool nz = !prod.is_zero();
            if ((gap > 1 && nz) || (gap == 1 && !nz)) {
                v.failure_reason = LeonardFailure::PatternConditionV;
                return v;
            }
        }
    v.is_pair = true;
    v.is_system = true;
    return v;
}

bool minimal_polynomial_check(const Context& ctx) {
    const FieldSpec& F = ctx.field;
    ExactPolynomial m(F, {FieldElement::one(F)});
    for (const auto& t : ctx.theta_star) {
        ExactPolynomial lin(F, {-t, FieldElement::one(F)});
        m = m * lin;
    }
    return minimal_polynomial(ctx.Astar) == m;
}

} // namespace leonard
