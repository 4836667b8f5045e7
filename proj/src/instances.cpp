#include "leonard/instances.hpp"

#include <algorithm>

#include "leonard/delta.hpp"

namespace leonard {

KrawtchoukInstance krawtchouk(std::size_t d, const FieldSpec& field) {
    if (d < 1) throw instance_error("krawtchouk: d >= 1 required");
    std::size_t n = d + 1;
    ExactMatrix A(field, n, n);
    for (std::size_t i = 1; i <= d; ++i) {
        A.at(i, i - 1) = FieldElement::from_integer(static_cast<long>(i), field);
        A.at(i - 1, i) = FieldElement::from_integer(static_cast<long>(d - i + 1), field);
        if (A.at(i, i - 1).is_zero() || A.at(i - 1, i).is_zero())
            throw instance_error("krawtchouk: off-diagonal entry vanishes mod p");
    }
    std::vector<FieldElement> theta_star;
    for (std::size_t i = 0; i < n; ++i)
        theta_star.push_back(FieldElement::from_integer(
            static_cast<long>(d) - 2 * static_cast<long>(i), field));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (theta_star[i] == theta_star[j])
                throw instance_error("krawtchouk: theta* collide mod p");

    ExactMatrix Astar(field, n, n);
    for (std::size_t i = 0; i < n; ++i) Astar.at(i, i) = theta_star[i];

    // the spectrum of A is {d - 2i} as well; order eigenvalues to match
    Context ctx = build_context(A, theta_star, theta_star);
    if (!verify_leonard_pair(A, Astar).is_pair)
        throw instance_error("krawtchouk: generated pair failed verification");
    return KrawtchoukInstance{A, Astar, theta_star, std::move(ctx)};
}

ExactPolynomial tridiagonal_char_poly(const ExactMatrix& X) {
    std::size_t n = X.rows();
    const FieldSpec& F = X.spec();
    // p_0 = 1, p_k = (lambda - a_k) p_{k-1} - b_{k-1} c_{k-1} p_{k-2}
    ExactPolynomial pm1(F, {FieldElement::one(F)});
    ExactPolynomial p = pm1;
    for (std::size_t k = 0; k < n; ++k) {
        ExactPolynomial lin(F, {-X.at(k, k), FieldElement::one(F)});
        ExactPolynomial next = lin * p;
        if (k > 0) {
            FieldElement bc = X.at(k - 1, k) * X.at(k, k - 1);
            auto sub = pm1 * ExactPolynomial(F, {-bc});
            std::vector<FieldElement> coeffs = next.coeffs();
            for (std::size_t t = 0; t < sub.coeffs().size(); ++t)
                coeffs[t] += sub.coeffs()[t];
            next = ExactPolynomial(F, std::move(coeffs));
        }
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

namespace {

// distinct in-field roots, counted the cheap way (Horner sweep over GF(p))
bool splits_multiplicity_free(const ExactPolynomial& cp, std::uint32_t p) {
    const FieldSpec& F = cp.spec();
    std::size_t found = 0;
    ExactPolynomial g = cp;
    for (std::uint64_t x = 0; x < p; ++x) {
        FieldElement r = FieldElement::from_integer(static_cast<long>(x), F);
        if (g.eval(r).is_zero()) {
            g = g.deflate(r);
            if (g.eval(r).is_zero()) return false; // repeated root
            ++found;
        }
        if (g.degree() == 0) break;
    }
    return found == static_cast<std::size_t>(cp.degree());
}

ExactMatrix sample_tridiagonal(std::size_t d, const FieldSpec& F, SplitMix64& rng) {
    std::size_t n = d + 1;
    std::uint32_t p = F.p();
    ExactMatrix A(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        A.at(i, i) = FieldElement::from_integer(static_cast<long>(rng.below(p)), F);
    for (std::size_t i = 1; i < n; ++i) {
        A.at(i, i - 1) =
            FieldElement::from_integer(static_cast<long>(rng.below(p - 1)) + 1, F);
        A.at(i - 1, i) =
            FieldElement::from_integer(static_cast<long>(rng.below(p - 1)) + 1, F);
    }
    return A;
}

std::vector<FieldElement> sample_theta_star(std::size_t d, const FieldSpec& F,
                                            SplitMix64& rng, bool allow_repeats) {
    std::size_t n = d + 1;
    std::uint32_t p = F.p();
    std::vector<FieldElement> ts;
    while (ts.size() < n) {
        FieldElement t = FieldElement::from_integer(static_cast<long>(rng.below(p)), F);
        if (!allow_repeats &&
            std::find(ts.begin(), ts.end(), t) != ts.end())
            continue;
        ts.push_back(t);
    }
    return ts;
}

} // namespace

Context random_context(std::size_t d, std::uint32_t p, std::uint64_t seed,
                       bool allow_theta_star_repeats, std::size_t max_retries) {
    if (d < 1) throw instance_error("random_context: d >= 1 required");
    FieldSpec F = FieldSpec::gfp(p);
    if (p <= d + 1 && !allow_theta_star_repeats)
        throw instance_error("random_context: p too small for distinct theta*");
    SplitMix64 rng(seed);
    for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
        ExactMatrix A = sample_tridiagonal(d, F, rng);
        if (!splits_multiplicity_free(tridiagonal_char_poly(A), p)) continue;
        auto ts = sample_theta_star(d, F, rng, allow_theta_star_repeats);
        return build_context(A, ts);
    }
    throw instance_error("random_context: retry budget exhausted (d=" +
                         std::to_string(d) + ", p=" + std::to_string(p) + ")");
}

Context non_example_complete_delta(std::size_t d, std::uint32_t p, std::uint64_t seed,
                                   std::size_t max_retries) {
    if (d < 2) throw instance_error("non_example_complete_delta: d >= 2 required");
    SplitMix64 rng(seed);
    for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
        Context ctx = random_context(d, p, rng.next(), false, max_retries);
        DeltaGraph g = build_delta(ctx);
        bool any_tail = false;
        for (std::size_t i = 0; i < g.n_vertices && !any_tail; ++i)
            for (std::size_t j = 0; j < g.n_vertices; ++j)
                if (i != j && is_tail(g, i, j).is_tail) {
                    any_tail = true;
                    break;
                }
        if (!any_tail) return ctx;
    }
    throw instance_error("non_example_complete_delta: retry budget exhausted");
}

} // namespace leonard
