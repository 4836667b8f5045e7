#include "leonard/dagger.hpp"

#include "leonard/rng.hpp"

namespace leonard {

namespace {

std::vector<ExactMatrix> spanning_family(const Context& ctx) {
    std::size_t n = ctx.d + 1;
    const ExactMatrix& E0 = ctx.dual_idempotents.members[0];
    std::vector<ExactMatrix> Apow = {ExactMatrix::identity(ctx.field, n)};
    for (std::size_t r = 1; r < n; ++r) Apow.push_back(Apow.back() * ctx.A);
    std::vector<ExactMatrix> fam;
    fam.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            fam.push_back(Apow[r] * E0 * Apow[s]);
    return fam;
}

ExactMatrix flatten_columns(const std::vector<ExactMatrix>& fam, const FieldSpec& F,
                            std::size_t n) {
    ExactMatrix M(F, n * n, fam.size());
    for (std::size_t c = 0; c < fam.size(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                M.at(i * n + j, c) = fam[c].at(i, j);
    return M;
}

} // namespace

bool basis_certificate(const Context& ctx) {
    std::size_t n = ctx.d + 1;
    auto fam = spanning_family(ctx);
    if (rank(flatten_columns(fam, ctx.field, n)) != n * n) return false;

    // triangular entry pattern of B^r F*_0 B^s, with the (r,s) entry equal
    // to (B^r)_{r0} (B^s)_{0s}, i.e. products of sub/superdiagonal entries
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const ExactMatrix& X = fam[r * n + s];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if ((i > r || j > s) && !X.at(i, j).is_zero()) return false;
            FieldElement expect = FieldElement::one(ctx.field);
            for (std::size_t h = 0; h < r; ++h) expect *= ctx.A.at(h + 1, h);
            for (std::size_t h = 0; h < s; ++h) expect *= ctx.A.at(h, h + 1);
            if (X.at(r, s) != expect || expect.is_zero()) return false;
        }
    return true;
}

std::vector<FieldElement> generation_check(const Context& ctx, const ExactMatrix& X) {
    std::size_t n = ctx.d + 1;
    if (X.rows() != n || X.cols() != n || X.spec() != ctx.field)
        throw context_error("generation_check: operand does not match context");
    auto fam = spanning_family(ctx);
    ExactMatrix S = flatten_columns(fam, ctx.field, n);
    Vector b;
    b.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.push_back(X.at(i, j));
    Vector coeffs = solve(S, b);

    ExactMatrix recon(ctx.field, n, n);
    for (std::size_t c = 0; c < fam.size(); ++c)
        if (!coeffs[c].is_zero()) recon = recon + fam[c].scale(coeffs[c]);
    if (recon != X)
        throw context_error("generation_check: reconstruction mismatch");
    return coeffs;
}

DaggerData build_dagger(const Context& ctx) {
    std::size_t n = ctx.d + 1;
    ExactMatrix D(ctx.field, n, n);
    FieldElement v = FieldElement::one(ctx.field);
    D.at(0, 0) = v;
    for (std::size_t i = 1; i < n; ++i) {
        v = v * ctx.A.at(i - 1, i) / ctx.A.at(i, i - 1);
        D.at(i, i) = v;
    }
    DaggerData dd{&ctx, D, inverse(D)};
    if (dd.apply(ctx.A) != ctx.A)
        throw context_error("build_dagger: D^{-1} A^t D != A");
    return dd;
}

ExactMatrix random_matrix(const FieldSpec& spec, std::size_t n, SplitMix64& rng) {
    ExactMatrix X(spec, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (spec.kind() == FieldSpec::Kind::PrimeField)
                X.at(i, j) = FieldElement::from_integer(
                    static_cast<long>(rng.below(spec.p())), spec);
            else
                X.at(i, j) = FieldElement::from_integer(
                    static_cast<long>(rng.below(19)) - 9, spec);
        }
    return X;
}

DaggerReport dagger_property_suite(const DaggerData& dd, std::size_t samples,
                                   std::uint64_t seed) {
    const Context& ctx = *dd.ctx;
    std::size_t n = ctx.d + 1;
    DaggerReport rep;
    auto check = [&](const std::string& name, bool ok) {
        rep.checks.emplace_back(name, ok);
    };

    check("A_dagger_fixed", dd.apply(ctx.A) == ctx.A);
    check("Astar_dagger_fixed", dd.apply(ctx.Astar) == ctx.Astar);
    bool duals_fixed = true;
    for (const auto& E : ctx.dual_idempotents.members)
        duals_fixed = duals_fixed && dd.apply(E) == E;
    check("dual_idempotents_fixed", duals_fixed);
    bool prims_fixed = true;
    for (const auto& E : ctx.eigen.idempotents)
        prims_fixed = prims_fixed && dd.apply(E) == E;
    check("primitive_idempotents_fixed", prims_fixed);

    SplitMix64 rng(seed);
    bool involution = true, antimult = true;
    for (std::size_t k = 0; k < samples; ++k) {
        ExactMatrix X = random_matrix(ctx.field, n, rng);
        ExactMatrix Y = random_matrix(ctx.field, n, rng);
        involution = involution && dd.apply(dd.apply(X)) == X;
        antimult = antimult && dd.apply(X * Y) == dd.apply(Y) * dd.apply(X);
    }
    check("double_dagger_identity", involution);
    check("antimultiplicative", antimult);

    // undirected-edge lemma: E_i A* E_j = 0 iff E_j A* E_i = 0
    bool symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool ij = (ctx.eigen.idempotents[i] * ctx.Astar * ctx.eigen.idempotents[j]).is_zero();
            bool ji = (ctx.eigen.idempotents[j] * ctx.Astar * ctx.eigen.idempotents[i]).is_zero();
            symmetric = symmetric && ij == ji;
        }
    check("delta_edge_symmetry", symmetric);
    return rep;
}

} // namespace leonard
