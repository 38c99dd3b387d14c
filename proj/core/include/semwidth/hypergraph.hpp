#ifndef SEMWIDTH_HYPERGRAPH_HPP
#define SEMWIDTH_HYPERGRAPH_HPP

#include <map>
#include <set>
#include <string>

#include "semwidth/cq.hpp"

namespace semwidth {

using Vertex = std::string;
using VertexSet = std::set<Vertex>;
using Edge = VertexSet;
using EdgeSet = std::set<Edge>;

// Finite hypergraph without isolated vertices. Edges are nonempty vertex
// sets; duplicates collapse. The empty hypergraph (no vertices, no edges)
// is a valid value.
class Hypergraph {
public:
    Hypergraph() = default;
    // Validates: edges nonempty and within the vertex set, no isolated
    // vertices. Throws DomainError on violation.
    Hypergraph(VertexSet vertices, EdgeSet edges);

    const VertexSet& vertices() const { return vertices_; }
    const EdgeSet& edges() const { return edges_; }

    bool empty() const { return vertices_.empty(); }

    bool operator==(const Hypergraph&) const = default;

private:
    VertexSet vertices_;
    EdgeSet edges_;
};

// Total map on the vertices of a source hypergraph.
struct VertexMap {
    std::map<Vertex, Vertex> mapping;

    const Vertex& apply(const Vertex& v) const;
    Edge apply(const Edge& e) const;
};

// Structural abstraction of a CQ: vertices are the body variables, one edge
// per atom holding its variable set (constants dropped, duplicates merged,
// variable-free atoms contribute nothing). Throws DomainError if no atom
// contains a variable, since every width notion needs a nonempty vertex set.
Hypergraph hypergraph_of(const ConjunctiveQuery& q);

// Homomorphic image: vertices f(V), edges { f(e) | e in E } deduplicated.
// f must be total on V(H).
Hypergraph image(const VertexMap& f, const Hypergraph& H);

// True iff f maps every edge of G onto an edge of H. f must be total on V(G).
bool check_homomorphism(const VertexMap& f, const Hypergraph& G, const Hypergraph& H);

}  // namespace semwidth

#endif
