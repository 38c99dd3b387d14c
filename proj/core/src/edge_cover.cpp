#include "semwidth/edge_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "semwidth/errors.hpp"
#include "semwidth/lp.hpp"

namespace semwidth {

namespace {

void check_target(const Hypergraph& H, const VertexSet& W) {
    for (const Vertex& v : W) {
        if (!H.vertices().count(v))
            throw DomainError("target vertex '" + v + "' is not in the hypergraph");
        bool covered = false;
        for (const Edge& e : H.edges())
            if (e.count(v)) {
                covered = true;
                break;
            }
        if (!covered)
            throw DomainError("infeasible: vertex '" + v + "' lies in no edge");
    }
}

}  // namespace

CoverCertificatePair rho_star(const Hypergraph& H) { return rho_star(H, H.vertices()); }

CoverCertificatePair rho_star(const Hypergraph& H, const VertexSet& W) {
    check_target(H, W);
    const std::vector<Edge> edges(H.edges().begin(), H.edges().end());
    const std::vector<Vertex> targets(W.begin(), W.end());

    LinearProgram lp;
    lp.num_vars = edges.size();
    lp.objective.assign(edges.size(), Rational(1));
    for (const Vertex& v : targets) {
        std::vector<Rational> row(edges.size(), Rational(0));
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (edges[j].count(v)) row[j] = Rational(1);
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rational(1));
    }

    const LPSolution solution = solve_min_lp(lp);
    if (!solution.feasible) throw DomainError("fractional edge cover LP is infeasible");

    CoverCertificatePair pair;
    pair.primal.target = W;
    pair.primal.total_weight = solution.objective;
    for (std::size_t j = 0; j < edges.size(); ++j) pair.primal.weights[edges[j]] = solution.x[j];
    for (const Vertex& v : H.vertices()) pair.dual.weights[v] = Rational(0);
    pair.dual.total_weight = Rational(0);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        pair.dual.weights[targets[i]] = solution.dual[i];
        pair.dual.total_weight += solution.dual[i];
    }

    // The pair is a certificate; refuse to hand out anything unverified.
    if (!verify_cover(H, W, pair.primal) || !verify_independent_set(H, pair.dual) ||
        pair.primal.total_weight != pair.dual.total_weight)
        throw DomainError("internal error: LP certificates failed verification");
    return pair;
}

IntegralCover rho_integral(const Hypergraph& H) { return rho_integral(H, H.vertices()); }

IntegralCover rho_integral(const Hypergraph& H, const VertexSet& W) {
    check_target(H, W);
    if (W.size() > 20) throw DomainError("integral cover target too large (max 20 vertices)");

    const std::vector<Vertex> targets(W.begin(), W.end());
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < targets.size(); ++i) index[targets[i]] = i;

    const std::vector<Edge> edges(H.edges().begin(), H.edges().end());
    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(edges.size());
    for (const Edge& e : edges) {
        std::uint32_t mask = 0;
        for (const Vertex& v : e) {
            auto it = index.find(v);
            if (it != index.end()) mask |= 1u << it->second;
        }
        edge_masks.push_back(mask);
    }

    // dp[S] = fewest edges covering S, with a parent pointer for the witness.
    const std::uint32_t full = targets.empty() ? 0 : (1u << targets.size()) - 1;
    const std::size_t none = edges.size();
    std::vector<std::size_t> dp(full + 1u, SIZE_MAX);
    std::vector<std::pair<std::uint32_t, std::size_t>> parent(full + 1u, {0, none});
    dp[0] = 0;
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty() && dp[full] == SIZE_MAX) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : frontier) {
            for (std::size_t j = 0; j < edges.size(); ++j) {
                const std::uint32_t t = s | edge_masks[j];
                if (dp[t] == SIZE_MAX) {
                    dp[t] = dp[s] + 1;
                    parent[t] = {s, j};
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    if (dp[full] == SIZE_MAX) throw DomainError("infeasible: no edge set covers the target");

    IntegralCover out;
    out.count = dp[full];
    for (std::uint32_t s = full; s != 0 && parent[s].second != none; s = parent[s].first)
        out.edges.insert(edges[parent[s].second]);
    return out;
}

FractionalCover transfer_cover(const VertexMap& f, const Hypergraph& G, const Hypergraph& H,
                               const FractionalCover& x) {
    if (!check_homomorphism(f, G, H))
        throw DomainError("transfer_cover: map is not a hypergraph homomorphism");
    if (!verify_cover(G, x.target, x))
        throw DomainError("transfer_cover: input cover is infeasible");

    FractionalCover out;
    for (const Vertex& v : x.target) out.target.insert(f.apply(v));
    out.total_weight = Rational(0);
    for (const Edge& h : H.edges()) out.weights[h] = Rational(0);
    for (const Edge& g : G.edges()) {
        auto it = x.weights.find(g);
        if (it == x.weights.end()) continue;
        out.weights[f.apply(g)] += it->second;
        out.total_weight += it->second;
    }

    if (!verify_cover(H, out.target, out))
        throw DomainError("internal error: transferred cover failed verification");
    return out;
}

bool verify_cover(const Hypergraph& H, const VertexSet& W, const FractionalCover& x) {
    for (const auto& [e, w] : x.weights) {
        if (!H.edges().count(e)) throw DomainError("cover weight on a non-edge");
        if (w < Rational(0)) return false;
    }
    Rational total(0);
    for (const auto& [e, w] : x.weights) total += w;
    if (total != x.total_weight) return false;
    for (const Vertex& v : W) {
        Rational incident(0);
        for (const auto& [e, w] : x.weights)
            if (e.count(v)) incident += w;
        if (incident < Rational(1)) return false;
    }
    return true;
}

bool verify_independent_set(const Hypergraph& H, const FractionalIndependentSet& y) {
    for (const auto& [v, w] : y.weights) {
        if (!H.vertices().count(v))
            throw DomainError("independent set weight on unknown vertex '" + v + "'");
        if (w < Rational(0)) return false;
    }
    Rational total(0);
    for (const auto& [v, w] : y.weights) total += w;
    if (total != y.total_weight) return false;
    for (const Edge& e : H.edges()) {
        Rational sum(0);
        for (const Vertex& v : e) {
            auto it = y.weights.find(v);
            if (it != y.weights.end()) sum += it->second;
        }
        if (sum > Rational(1)) return false;
    }
    return true;
}

}  // namespace semwidth
