#ifndef SEMWIDTH_HOMOMORPHISM_HPP
#define SEMWIDTH_HOMOMORPHISM_HPP

#include <map>
#include <optional>
#include <string>

#include "semwidth/cq.hpp"
#include "semwidth/hypergraph.hpp"

namespace semwidth {

// Variable-to-term mapping between conjunctive queries. A valid homomorphism
// q1 -> q2 fixes every head variable of q1 and maps every atom of q1 onto an
// atom of q2; constants always map to themselves.
struct CQHomomorphism {
    std::map<std::string, Term> mapping;

    Term apply(const Term& t) const;
    Atom apply(const Atom& a) const;

    bool operator==(const CQHomomorphism&) const = default;
};

// Independent checker: totality on vars(q1), head fixing, atom preservation.
bool check_cq_homomorphism(const CQHomomorphism& f, const ConjunctiveQuery& q1,
                           const ConjunctiveQuery& q2);

// (g o f): apply f, then g. g must be defined on every variable f maps to.
CQHomomorphism compose(const CQHomomorphism& g, const CQHomomorphism& f);

struct HomSearchOptions {
    bool injective = false;       // pairwise distinct images
    bool variables_only = false;  // candidates restricted to target variables
    bool reverse_order = false;   // iterate candidate values in reverse
};

// Backtracking search with forward checking over the target atom index.
// Deterministic: variables in most-constrained-first order (ties broken
// lexicographically), candidate terms in sorted order. Mismatched head lists
// yield nullopt; absence of a homomorphism is a value, not an error.
std::optional<CQHomomorphism> find_homomorphism(const ConjunctiveQuery& q1,
                                                const ConjunctiveQuery& q2,
                                                const HomSearchOptions& options = {});

// True iff homomorphisms exist in both directions.
bool is_equivalent(const ConjunctiveQuery& q1, const ConjunctiveQuery& q2);

// Bidirectional injective variables-only homomorphism search.
bool are_isomorphic(const ConjunctiveQuery& q1, const ConjunctiveQuery& q2);

struct CoreResult {
    ConjunctiveQuery core;       // subquery of the input: atoms(core) <= atoms(q)
    CQHomomorphism retraction;   // q -> core, identity on vars(core)
    CQHomomorphism witness_back; // the inclusion core -> q
};

enum class SearchOrder { Forward, Reverse };

// Iterates "find an endomorphism whose image drops at least one atom,
// restrict to the image atoms" until no such endomorphism exists, then
// normalizes the composed retraction to be the identity on the core.
CoreResult compute_core(const ConjunctiveQuery& q, SearchOrder order = SearchOrder::Forward);

// True iff no endomorphism of q has an image with strictly fewer atoms.
bool is_core(const ConjunctiveQuery& q);

// Given an endomorphism f: q -> core whose restriction to vars(core) is a
// variable renaming, returns f* = f^-1 o f with f*(v) = v on vars(core).
// Throws DomainError if f is not a homomorphism q -> core or the restriction
// is not an injective variable renaming.
CQHomomorphism normalize_retraction(const CQHomomorphism& f, const ConjunctiveQuery& q,
                                    const ConjunctiveQuery& core);

// Restricts a CQ homomorphism to a hypergraph vertex map. Throws DomainError
// if some variable maps to a constant: that case induces no hypergraph
// homomorphism and is flagged rather than guessed.
VertexMap to_vertex_map(const CQHomomorphism& f);

}  // namespace semwidth

#endif
