#include "leonard/spectral.hpp"

#include <algorithm>

namespace leonard {

ExactMatrix primitive_idempotent(const ExactMatrix& A,
                                 const std::vector<FieldElement>& theta,
                                 std::size_t i) {
    const FieldSpec& F = A.spec();
    std::size_t n = A.rows();
    ExactMatrix E = ExactMatrix::identity(F, n);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        if (j == i) continue;
        FieldElement denom = theta[i] - theta[j];
        if (denom.is_zero())
            throw spectral_error(SpectralError::NotMultiplicityFree,
                                 "primitive_idempotent: repeated eigenvalue");
        ExactMatrix term = A;
        for (std::size_t k = 0; k < n; ++k) term.at(k, k) -= theta[j];
        E = E * term.scale(denom.inv());
    }
    return E;
}

void sort_canonical(std::vector<FieldElement>& vals) {
    std::sort(vals.begin(), vals.end(),
              [](const FieldElement& a, const FieldElement& b) {
                  if (a.spec().kind() == FieldSpec::Kind::PrimeField)
                      return a.residue() < b.residue();
                  return a.rational() < b.rational();
              });
}

EigenData eigen_split(const ExactMatrix& A,
                      const std::optional<std::vector<FieldElement>>& order) {
    if (!A.is_square()) throw matrix_error("eigen_split: non-square matrix");
    auto cp = char_poly(A);
    auto rep = roots_in_field(cp);
    if (!rep.splits)
        throw spectral_error(SpectralError::NotSplit,
                             "eigen_split: characteristic polynomial does not split over " +
                                 A.spec().to_string());
    for (const auto& [r, m] : rep.roots)
        if (m > 1)
            throw spectral_error(SpectralError::NotMultiplicityFree,
                                 "eigen_split: repeated eigenvalue " + r.to_string());

    std::vector<FieldElement> theta;
    for (const auto& [r, m] : rep.roots) theta.push_back(r);
    if (order) {
        if (order->size() != theta.size())
            throw matrix_error("eigen_split: ordering has wrong length");
        auto sorted_given = *order;
        auto sorted_have = theta;
        sort_canonical(sorted_given);
        sort_canonical(sorted_have);
        if (sorted_given != sorted_have)
            throw matrix_error("eigen_split: ordering is not a permutation of the spectrum");
        theta = *order;
    } else {
        sort_canonical(theta);
    }

    EigenData out{A, theta, {}};
    for (std::size_t i = 0; i < theta.size(); ++i)
        out.idempotents.push_back(primitive_idempotent(A, theta, i));
    return out;
}

Vector normalize_vector(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) {
            FieldElement s = x.inv();
            Vector out;
            out.reserve(v.size());
            for (const auto& y : v) out.push_back(y * s);
            return out;
        }
    throw matrix_error("normalize_vector: zero vector");
}

IdempotentSystem idempotents_from_decomposition(const Decomposition& dec,
                                                const FieldSpec& spec) {
    std::size_t n = dec.subspaces.size();
    if (n == 0) throw matrix_error("empty decomposition");
    ExactMatrix P(spec, n, n); // columns = subspace vectors
    for (std::size_t j = 0; j < n; ++j) {
        if (dec.subspaces[j].size() != n)
            throw matrix_error("decomposition vector has wrong length");
        for (std::size_t i = 0; i < n; ++i) P.at(i, j) = dec.subspaces[j][i];
    }
    ExactMatrix Pinv = inverse(P); // throws if the vectors are dependent
    IdempotentSystem sys;
    for (std::size_t i = 0; i < n; ++i) {
        // E_i = P * e_i e_i^T * P^{-1}: identity on U_i, zero on the others
        ExactMatrix sel(spec, n, n);
        sel.at(i, i) = FieldElement::one(spec);
        sys.members.push_back(P * sel * Pinv);
    }
    return sys;
}

Decomposition decomposition_from_idempotents(const IdempotentSystem& sys) {
    validate_idempotent_system(sys);
    Decomposition dec;
    for (const auto& E : sys.members) {
        // any nonzero column spans E V (rank 1)
        std::size_t n = E.rows();
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == n) throw matrix_error("idempotent has no nonzero column");
            Vector col(n, FieldElement::zero(E.spec()));
            bool nz = false;
            for (std::size_t i = 0; i < n; ++i) {
                col[i] = E.at(i, j);
                nz = nz || !col[i].is_zero();
            }
            if (nz) {
                dec.subspaces.push_back(normalize_vector(col));
                break;
            }
        }
    }
    return dec;
}

void validate_idempotent_system(const IdempotentSystem& sys) {
    if (sys.members.empty()) throw matrix_error("empty idempotent system");
    std::size_t n = sys.members[0].rows();
    if (sys.members.size() != n)
        throw matrix_error("idempotent system must have dim-many members");
    const FieldSpec& F = sys.members[0].spec();
    ExactMatrix sum(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rank(sys.members[i]) != 1)
            throw matrix_error("idempotent " + std::to_string(i) + " is not rank 1");
        for (std::size_t j = 0; j < n; ++j) {
            ExactMatrix prod = sys.members[i] * sys.members[j];
            if (i == j ? prod != sys.members[i] : !prod.is_zero())
                throw matrix_error("orthogonality fails at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
        }
        sum = sum + sys.members[i];
    }
    if (sum != ExactMatrix::identity(F, n))
        throw matrix_error("idempotents do not sum to the identity");
}

} // namespace leonard
