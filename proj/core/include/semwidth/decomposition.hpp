#ifndef SEMWIDTH_DECOMPOSITION_HPP
#define SEMWIDTH_DECOMPOSITION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semwidth/edge_cover.hpp"
#include "semwidth/hypergraph.hpp"
#include "semwidth/rational.hpp"

namespace semwidth {

// Tree of bags. Node ids are arbitrary ints; tree_edges hold unordered pairs
// stored as (min, max).
struct TreeDecomposition {
    std::set<int> nodes;
    std::set<std::pair<int, int>> tree_edges;
    std::map<int, VertexSet> bags;

    bool operator==(const TreeDecomposition&) const = default;
};

// Per-bag measure: the integral cover number rho, the fractional cover
// number rho*, or an explicit table over the subsets of a fixed domain.
// Table values are indexed by bitmask over the sorted domain; b(empty) = 0
// and nonnegativity are enforced at construction.
class WidthFunction {
public:
    enum class Kind { IntegralCover, FractionalCover, Table };

    static WidthFunction integral_cover();
    static WidthFunction fractional_cover();
    static WidthFunction table(std::vector<Vertex> domain, std::vector<Rational> values);

    Kind kind() const { return kind_; }
    const std::vector<Vertex>& domain() const;
    const std::vector<Rational>& values() const;

    Rational evaluate(const Hypergraph& H, const VertexSet& X) const;
    Rational evaluate_mask(std::uint32_t mask) const;  // table kind only

    // Table kind: b(X) <= b(Y) for all X subseteq Y. Rho kinds are monotone
    // by definition.
    bool is_monotone() const;

private:
    explicit WidthFunction(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<Vertex> domain_;     // sorted; table kind only
    std::vector<Rational> values_;   // size 2^|domain|; table kind only
};

struct IntegralCover;  // from edge_cover.hpp

using BagCertificate = std::variant<CoverCertificatePair, IntegralCover, Rational>;

// A width value that can be re-checked: the decomposition, plus one
// certificate (or explicit table value) per bag. value is the max over bags.
struct WidthReport {
    Rational value;
    TreeDecomposition decomposition;
    std::map<int, BagCertificate> per_bag_certificates;
};

struct FunctionReport {
    bool zero_at_empty = false;
    bool monotone = false;
    bool modular = false;
    bool submodular = false;
    bool edge_dominated = false;
};

enum class FunctionFamily { Modular, Submodular };

inline constexpr int kDefaultVertexCap = 12;

// Returns the reason a decomposition is invalid, or nullopt if it is valid.
std::optional<std::string> validate_decomposition(const Hypergraph& H,
                                                  const TreeDecomposition& td);
bool is_valid_decomposition(const Hypergraph& H, const TreeDecomposition& td);

// Max of b over the bags of a valid decomposition, with per-bag certificates.
WidthReport f_width(const Hypergraph& H, const TreeDecomposition& td, const WidthFunction& b);

// Exact minimal b-width over all tree decompositions, by memoized
// branch-and-bound over separators of the primal graph. Requires b monotone;
// throws DomainError beyond vertex_cap vertices.
WidthReport b_width_exact(const Hypergraph& H, const WidthFunction& b,
                          int vertex_cap = kDefaultVertexCap);

// ghw: minimal rho-width. fhw: minimal rho*-width.
WidthReport ghw_exact(const Hypergraph& H, int vertex_cap = kDefaultVertexCap);
WidthReport fhw_exact(const Hypergraph& H, int vertex_cap = kDefaultVertexCap);

// Re-checks a report bottom-up: decomposition validity, every per-bag
// certificate, and that the reported value is the max of the bag measures.
bool verify_width_report(const Hypergraph& H, const WidthFunction& b, const WidthReport& report);

// Intersects every bag with core_vertices, deletes nodes whose bag empties,
// and reattaches each surviving node to its nearest surviving ancestor (tree
// rooted at the lowest surviving node id). Node ids are preserved.
TreeDecomposition restrict_to_core(const TreeDecomposition& td, const VertexSet& core_vertices);

// Extension of a table function on V' to all of V(H): b(X) = b'(X intersect V').
// Throws DomainError when the result is not edge-dominated on H.
WidthFunction extend_function(const WidthFunction& b_core, const Hypergraph& H);

// Exhaustive property check over all subset pairs; table domains are capped
// at 10 vertices for this.
FunctionReport validate_function(const WidthFunction& b, const Hypergraph& H);

// b(X) = sum of fis weights over X, as a table on V(H). Throws DomainError if
// fis is not edge-dominated.
WidthFunction modular_from_fis(const FractionalIndependentSet& fis, const Hypergraph& H);

// Deterministic family of certified monotone edge-dominated functions with
// b(empty) = 0. The submodular family extends the modular samples for the
// same seed, so it is always a superset.
std::vector<WidthFunction> sample_width_functions(const Hypergraph& H, FunctionFamily family,
                                                  int count, std::uint64_t seed);

// Max b-width over the sampled family: a sound lower bound on adaptive width
// (modular family) or submodular width (submodular family).
Rational sampled_lower_bound_width(const Hypergraph& H, FunctionFamily family, int samples,
                                   std::uint64_t seed, int vertex_cap = kDefaultVertexCap);

}  // namespace semwidth

#endif
