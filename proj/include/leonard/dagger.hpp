#ifndef LEONARD_DAGGER_HPP
#define LEONARD_DAGGER_HPP

#include <string>
#include <vector>

#include "leonard/context.hpp"

namespace leonard {

/// The antiautomorphism fixing A and E*_0, realized in the dual eigenbasis
/// as X -> D^{-1} X^t D for an explicit diagonal D with D_00 = 1.
struct DaggerData {
    const Context* ctx;
    ExactMatrix D;
    ExactMatrix Dinv;

    ExactMatrix apply(const ExactMatrix& X) const {
        return Dinv * X.transpose() * D;
    }
};

// The (d+1)^2 elements A^r E*_0 A^s are a basis of End(V): full-rank check
// on the flattened matrices, plus the triangular entry pattern
// (zero above (r,s), nonzero at (r,s) equal to the diagonal products).
bool basis_certificate(const Context& ctx);

// Coefficients of X in the A^r E*_0 A^s basis, row-major in (r,s);
// the reconstruction is exact because those elements form a basis.
std::vector<FieldElement> generation_check(const Context& ctx, const ExactMatrix& X);

// D_ii = (B_01 B_12 ... B_{i-1,i}) / (B_10 B_21 ... B_{i,i-1}); asserts
// D^{-1} A^t D = A before returning.
DaggerData build_dagger(const Context& ctx);

struct DaggerReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

// Verifies the dagger identities on the context's distinguished elements and
// on `samples` random X, Y pairs drawn from the given seed.
DaggerReport dagger_property_suite(const DaggerData& dd, std::size_t samples = 50,
                                   std::uint64_t seed = 0);

// Random matrix with small-integer entries over Q, uniform entries over GF(p).
// Shared by the property suites and the instance generators.
ExactMatrix random_matrix(const FieldSpec& spec, std::size_t n, class SplitMix64& rng);

} // namespace leonard

#endif
