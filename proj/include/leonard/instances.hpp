#ifndef LEONARD_INSTANCES_HPP
#define LEONARD_INSTANCES_HPP

#include "leonard/context.hpp"
#include "leonard/rng.hpp"

namespace leonard {

struct instance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The classical positive fixture: A_{i,i-1} = i, A_{i-1,i} = d-i+1,
/// A* = diag(d - 2i). Valid over characteristic 0 and over GF(p) whenever
/// the d - 2i stay distinct and the off-diagonal entries nonzero mod p.
struct KrawtchoukInstance {
    ExactMatrix A;
    ExactMatrix Astar;
    std::vector<FieldElement> theta_star;
    Context ctx;
};

KrawtchoukInstance krawtchouk(std::size_t d, const FieldSpec& field);

// Rejection-samples an irreducible tridiagonal A over GF(p) until its
// spectrum splits with distinct roots; theta* entries are sampled distinct
// unless allow_theta_star_repeats. Deterministic in (d, p, seed).
Context random_context(std::size_t d, std::uint32_t p, std::uint64_t seed,
                       bool allow_theta_star_repeats = false,
                       std::size_t max_retries = 200000);

// Searches random contexts until none of the ordered pairs is a tail in
// Delta (a negative fixture for the decision procedure).
Context non_example_complete_delta(std::size_t d, std::uint32_t p, std::uint64_t seed,
                                   std::size_t max_retries = 200000);

// Characteristic polynomial of a tridiagonal matrix by the three-term minor
// recurrence; used by the samplers (cheap) and as a cross-check of the
// general routine.
ExactPolynomial tridiagonal_char_poly(const ExactMatrix& X);

} // namespace leonard

#endif
