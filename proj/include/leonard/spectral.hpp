#ifndef LEONARD_SPECTRAL_HPP
#define LEONARD_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "leonard/matrix.hpp"

namespace leonard {

enum class SpectralError {
    NotSplit,            // spectrum leaves the base field
    NotMultiplicityFree, // repeated eigenvalue
};

struct spectral_error : std::runtime_error {
    SpectralError kind;
    spectral_error(SpectralError k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

/// A multiplicity-free operator with its ordered eigenvalues and the
/// corresponding rank-1 primitive idempotents.
struct EigenData {
    ExactMatrix op; // the decomposed operator
    std::vector<FieldElement> eigenvalues;
    std::vector<ExactMatrix> idempotents;
};

/// Sequence {E_i} with E_i E_j = delta_ij E_i, rank(E_i) = 1, sum = I.
struct IdempotentSystem {
    std::vector<ExactMatrix> members;
};

/// One normalized spanning vector per one-dimensional summand.
struct Decomposition {
    std::vector<Vector> subspaces;
};

// Lagrange product: the projection onto the theta_i eigenspace,
// prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
ExactMatrix primitive_idempotent(const ExactMatrix& A,
                                 const std::vector<FieldElement>& theta,
                                 std::size_t i);

// Splits a multiplicity-free operator. Eigenvalues come out in canonical
// ascending order (numeric over Q, residue order over GF(p)) unless an
// explicit ordering is supplied; a supplied ordering must be a permutation
// of the spectrum.
EigenData eigen_split(const ExactMatrix& A,
                      const std::optional<std::vector<FieldElement>>& order = std::nullopt);

// Sorts eigenvalues into the canonical ascending order for their field.
void sort_canonical(std::vector<FieldElement>& vals);

IdempotentSystem idempotents_from_decomposition(const Decomposition& dec,
                                                const FieldSpec& spec);
Decomposition decomposition_from_idempotents(const IdempotentSystem& sys);

// Checks E_i E_j = delta_ij E_i, rank 1 and sum = I; throws on violation.
void validate_idempotent_system(const IdempotentSystem& sys);

// First nonzero coordinate scaled to 1.
Vector normalize_vector(const Vector& v);

} // namespace leonard

#endif
