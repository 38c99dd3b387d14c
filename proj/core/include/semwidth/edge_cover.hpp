#ifndef SEMWIDTH_EDGE_COVER_HPP
#define SEMWIDTH_EDGE_COVER_HPP

#include <cstddef>
#include <map>

#include "semwidth/hypergraph.hpp"
#include "semwidth/rational.hpp"

namespace semwidth {

// Nonnegative edge weights giving every target vertex incident weight >= 1.
// Weights are total on the edge set of the owning hypergraph; edges outside
// any optimal support simply carry weight zero.
struct FractionalCover {
    VertexSet target;
    std::map<Edge, Rational> weights;
    Rational total_weight;
};

// Nonnegative vertex weights summing to at most 1 on every edge; the LP dual
// of the fractional edge cover.
struct FractionalIndependentSet {
    std::map<Vertex, Rational> weights;
    Rational total_weight;
};

// Primal/dual pair with equal total weight: a self-contained optimality
// certificate by strong LP duality.
struct CoverCertificatePair {
    FractionalCover primal;
    FractionalIndependentSet dual;
};

struct IntegralCover {
    std::size_t count = 0;
    EdgeSet edges;
};

// Optimal fractional edge cover of W (default: all vertices) with a matching
// dual certificate, both exact. Throws DomainError when some vertex of W
// lies in no edge (infeasible LP) or W contains unknown vertices.
CoverCertificatePair rho_star(const Hypergraph& H);
CoverCertificatePair rho_star(const Hypergraph& H, const VertexSet& W);

// Minimum number of edges whose union contains W, with a witness edge set.
// Exact via dynamic programming over subsets of W.
IntegralCover rho_integral(const Hypergraph& H);
IntegralCover rho_integral(const Hypergraph& H, const VertexSet& W);

// Cover transfer along a hypergraph homomorphism f: G -> H. The output
// assigns each edge h of H the summed weight of its preimage edges; it covers
// f(target) with total weight exactly equal to the input's. Throws
// DomainError if f is not a homomorphism or x is not a feasible cover of its
// target in G.
FractionalCover transfer_cover(const VertexMap& f, const Hypergraph& G, const Hypergraph& H,
                               const FractionalCover& x);

// Exact feasibility check: every vertex of W has incident weight >= 1, all
// weights nonnegative, the recorded total matches. Throws DomainError when a
// weight is keyed by a non-edge of H.
bool verify_cover(const Hypergraph& H, const VertexSet& W, const FractionalCover& x);

// Exact edge-domination check: nonnegative weights, sum over every edge <= 1,
// recorded total matches. Throws DomainError on weights keyed by non-vertices.
bool verify_independent_set(const Hypergraph& H, const FractionalIndependentSet& y);

}  // namespace semwidth

#endif
