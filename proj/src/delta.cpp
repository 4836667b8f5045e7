#include "leonard/delta.hpp"

#include <algorithm>
#include <sstream>

namespace leonard {

std::vector<std::size_t> DeltaGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_vertices; ++j)
        if (adjacency[i][j]) out.push_back(j);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> DeltaGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_vertices; ++i)
        for (std::size_t j = i + 1; j < n_vertices; ++j)
            if (adjacency[i][j]) out.emplace_back(i, j);
    return out;
}

DeltaGraph build_delta(const Context& ctx) {
    std::size_t n = ctx.d + 1;
    DeltaGraph g;
    g.n_vertices = n;
    g.adjacency.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            g.adjacency[i][j] =
                !(ctx.eigen.idempotents[i] * ctx.Astar * ctx.eigen.idempotents[j])
                     .is_zero();
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacency[i][j] != g.adjacency[j][i])
                throw context_error("build_delta: adjacency not symmetric "
                                    "(arithmetic bug upstream)");
    return g;
}

TailReport is_tail(const DeltaGraph& g, std::size_t i, std::size_t j) {
    if (i == j) throw context_error("is_tail: i == j");
    TailReport rep;
    rep.pair = {i, j};
    rep.pair_adjacent = g.adjacent(i, j);
    for (auto v : g.neighbors(i))
        if (v != j) rep.offending_neighbors_i.push_back(v);
    for (auto v : g.neighbors(j))
        if (v != i) rep.offending_neighbors_j.push_back(v);
    rep.is_tail = rep.offending_neighbors_i.empty() &&
                  rep.offending_neighbors_j.size() <= 1;
    return rep;
}

ConnectivityReport connectivity(const DeltaGraph& g) {
    ConnectivityReport rep;
    std::vector<bool> seen(g.n_vertices, false);
    for (std::size_t s = 0; s < g.n_vertices; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp, stack = {s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        rep.components.push_back(std::move(comp));
    }
    rep.connected = rep.components.size() == 1;
    return rep;
}

bool is_path_graph(const DeltaGraph& g) {
    if (g.n_vertices == 1) return true;
    std::size_t edge_count = g.edges().size();
    if (edge_count != g.n_vertices - 1) return false;
    for (std::size_t i = 0; i < g.n_vertices; ++i)
        if (g.degree(i) > 2) return false;
    return connectivity(g).connected;
}

std::vector<std::vector<std::size_t>> q_polynomial_orderings(const DeltaGraph& g) {
    if (!is_path_graph(g)) return {};
    if (g.n_vertices == 1) return {{0}};
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t end = 0; end < g.n_vertices; ++end) {
        if (g.degree(end) != 1) continue;
        std::vector<std::size_t> order = {end};
        std::size_t prev = g.n_vertices, cur = end;
        while (order.size() < g.n_vertices) {
            std::size_t next = g.n_vertices;
            for (auto v : g.neighbors(cur))
                if (v != prev) next = v;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(order));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> q_polynomial_pairs(const Context& ctx) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    DeltaGraph g = build_delta(ctx);
    for (const auto& order : q_polynomial_orderings(g)) {
        if (order.size() < 2) continue;
        if (verify_leonard_system(ctx, order).is_system) {
            auto p = std::make_pair(order[0], order[1]);
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Vector idempotent_column(const ExactMatrix& E) {
    std::size_t n = E.rows();
    for (std::size_t j = 0; j < n; ++j) {
        Vector col(n, FieldElement::zero(E.spec()));
        bool nz = false;
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = E.at(i, j);
            nz = nz || !col[i].is_zero();
        }
        if (nz) return col;
    }
    throw matrix_error("idempotent_column: zero idempotent");
}

// rank of the span of a vector list, optionally with one extra vector
std::size_t span_rank(const std::vector<Vector>& vecs, const FieldSpec& F,
                      std::size_t dim, const Vector* extra = nullptr) {
    std::size_t m = vecs.size() + (extra ? 1 : 0);
    if (m == 0) return 0;
    ExactMatrix M(F, m, dim);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) M.at(i, j) = vecs[i][j];
    if (extra)
        for (std::size_t j = 0; j < dim; ++j) M.at(m - 1, j) = (*extra)[j];
    return rank(M);
}

bool in_span(const std::vector<Vector>& vecs, const Vector& v, const FieldSpec& F,
             std::size_t dim) {
    bool vzero = std::all_of(v.begin(), v.end(),
                             [](const FieldElement& x) { return x.is_zero(); });
    if (vzero) return true;
    if (vecs.empty()) return false;
    return span_rank(vecs, F, dim) == span_rank(vecs, F, dim, &v);
}

} // namespace

std::vector<Vector> invariant_subspace_A(const Context& ctx,
                                         const std::vector<std::size_t>& S) {
    std::vector<Vector> out;
    for (auto h : S) {
        if (h > ctx.d) throw context_error("invariant_subspace_A: index out of range");
        out.push_back(idempotent_column(ctx.eigen.idempotents[h]));
    }
    return out;
}

std::vector<std::size_t> classify_A_invariant(const Context& ctx,
                                              const std::vector<Vector>& U) {
    std::size_t n = ctx.d + 1;
    // A-invariance of the span
    for (const auto& u : U)
        if (!in_span(U, ctx.A.apply(u), ctx.field, n))
            throw context_error("classify_A_invariant: subspace is not A-invariant");
    std::vector<std::size_t> S;
    for (std::size_t h = 0; h < n; ++h) {
        // E_h U != 0 iff h belongs to S
        bool hit = false;
        for (const auto& u : U) {
            Vector proj = ctx.eigen.idempotents[h].apply(u);
            if (!std::all_of(proj.begin(), proj.end(),
                             [](const FieldElement& x) { return x.is_zero(); })) {
                hit = true;
                break;
            }
        }
        if (hit) S.push_back(h);
    }
    if (S.size() != span_rank(U, ctx.field, n))
        throw context_error("classify_A_invariant: dimension mismatch");
    return S;
}

bool astar_invariance_test(const Context& ctx, const std::vector<std::size_t>& S) {
    std::size_t n = ctx.d + 1;
    auto U = invariant_subspace_A(ctx, S);
    bool direct = true;
    for (const auto& u : U)
        if (!in_span(U, ctx.Astar.apply(u), ctx.field, n)) {
            direct = false;
            break;
        }

    DeltaGraph g = build_delta(ctx);
    std::vector<bool> in_s(n, false);
    for (auto h : S) in_s[h] = true;
    bool criterion = true;
    for (std::size_t i = 0; i < n && criterion; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (in_s[i] && !in_s[j] && g.adjacent(i, j)) {
                criterion = false;
                break;
            }
    if (direct != criterion)
        throw context_error("astar_invariance_test: direct test disagrees with "
                            "the crossing-edge criterion (arithmetic bug)");
    return direct;
}

std::string to_dot(const DeltaGraph& g) {
    std::ostringstream os;
    os << "graph delta {\n";
    for (std::size_t i = 0; i < g.n_vertices; ++i)
        os << "  " << i << ";\n";
    for (auto [i, j] : g.edges())
        os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace leonard
