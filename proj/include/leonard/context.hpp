#ifndef LEONARD_CONTEXT_HPP
#define LEONARD_CONTEXT_HPP

#include <optional>
#include <vector>

#include "leonard/spectral.hpp"

namespace leonard {

struct context_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape failure: A is not irreducible tridiagonal with respect
// to the dual idempotents.
struct shape_violation : context_error {
    using context_error::context_error;
};

/// The standing assumption, realized in the dual eigenbasis: the E*_i are
/// the coordinate projections, A is irreducible tridiagonal, and
/// A* = diag(theta*). A is multiplicity-free with in-field spectrum.
struct Context {
    FieldSpec field;
    std::size_t d; // dimension is d+1
    ExactMatrix A;
    IdempotentSystem dual_idempotents;
    std::vector<FieldElement> theta_star;
    ExactMatrix Astar;
    EigenData eigen; // of A: {theta_i}, {E_i}
};

enum class LeonardFailure {
    None,
    NotSplit,
    NotMultiplicityFree,
    NoTridiagonalBasisForA,     // no ordering of A*'s eigenlines tridiagonalizes A
    NoTridiagonalBasisForAstar, // the symmetric failure
    DualEigenvaluesRepeat,
    PatternConditionV, // E_i A* E_j zero/nonzero pattern fails
};

const char* to_string(LeonardFailure f);

struct LeonardVerdict {
    bool is_pair = false;
    bool is_system = false;
    std::optional<BasisChange> witness_basis_A;     // A tridiagonal, A* diagonal
    std::optional<BasisChange> witness_basis_Astar; // A* tridiagonal, A diagonal
    LeonardFailure failure_reason = LeonardFailure::None;
};

// A is given in the dual eigenbasis; theta* may repeat at this stage.
// An explicit eigen_order fixes the ordering of A's spectrum.
Context build_context(const ExactMatrix& A,
                      const std::vector<FieldElement>& theta_star,
                      const std::optional<std::vector<FieldElement>>& eigen_order = std::nullopt);

// Decides Leonard-pair membership for a raw pair of operators by searching
// for the two witnessing bases (eigenline reorderings on each side).
LeonardVerdict verify_leonard_pair(const ExactMatrix& A, const ExactMatrix& Astar);

// Checks the five Leonard-system conditions for the E-ordering given as a
// permutation of the context's A-eigen indices.
LeonardVerdict verify_leonard_system(const Context& ctx,
                                     const std::vector<std::size_t>& ordering);

// True iff the minimal polynomial of A* equals prod (lambda - theta*_i).
bool minimal_polynomial_check(const Context& ctx);

} // namespace leonard

#endif
