#include "semwidth/hypergraph.hpp"

#include "semwidth/errors.hpp"

namespace semwidth {

Hypergraph::Hypergraph(VertexSet vertices, EdgeSet edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    VertexSet covered;
    for (const Edge& e : edges_) {
        if (e.empty()) throw DomainError("hypergraph edge is empty");
        for (const Vertex& v : e) {
            if (!vertices_.count(v))
                throw DomainError("hypergraph edge uses unknown vertex '" + v + "'");
            covered.insert(v);
        }
    }
    if (covered != vertices_) {
        for (const Vertex& v : vertices_)
            if (!covered.count(v)) throw DomainError("isolated vertex '" + v + "'");
    }
}

const Vertex& VertexMap::apply(const Vertex& v) const {
    auto it = mapping.find(v);
    if (it == mapping.end()) throw DomainError("vertex map not defined on '" + v + "'");
    return it->second;
}

Edge VertexMap::apply(const Edge& e) const {
    Edge out;
    for (const Vertex& v : e) out.insert(apply(v));
    return out;
}

Hypergraph hypergraph_of(const ConjunctiveQuery& q) {
    validate_query(q);
    VertexSet vertices = q.variables();
    if (vertices.empty())
        throw DomainError("degenerate hypergraph: no atom of the query contains a variable");
    EdgeSet edges;
    for (const Atom& a : q.body) {
        Edge e;
        for (const Term& t : a.args)
            if (t.is_variable()) e.insert(t.text);
        if (!e.empty()) edges.insert(std::move(e));
    }
    return Hypergraph(std::move(vertices), std::move(edges));
}

Hypergraph image(const VertexMap& f, const Hypergraph& H) {
    VertexSet vertices;
    for (const Vertex& v : H.vertices()) vertices.insert(f.apply(v));
    EdgeSet edges;
    for (const Edge& e : H.edges()) edges.insert(f.apply(e));
    return Hypergraph(std::move(vertices), std::move(edges));
}

bool check_homomorphism(const VertexMap& f, const Hypergraph& G, const Hypergraph& H) {
    for (const Vertex& v : G.vertices()) f.apply(v);  // totality
    for (const Edge& e : G.edges())
        if (!H.edges().count(f.apply(e))) return false;
    return true;
}

}  // namespace semwidth
