#ifndef SEMWIDTH_GENERATORS_HPP
#define SEMWIDTH_GENERATORS_HPP

#include <cstdint>

#include "semwidth/cq.hpp"

namespace semwidth {

// Boolean query over one binary relation R with one atom per grid edge,
// oriented even-parity endpoint first. The orientation guarantees an
// endomorphism onto a single atom, so the core is a single atom.
ConjunctiveQuery gen_parity_grid(int rows, int cols);

// Deterministic random query: relation arities are fixed on first use, the
// head is a (possibly empty) subset of the used variables, so safety always
// holds. Identical seeds give identical queries.
ConjunctiveQuery gen_random_cq(std::uint64_t seed, int n_vars, int n_atoms, int max_arity);

// Adds `steps` atoms, each the image of an existing atom with some positions
// replaced by fresh variables that map back to the original terms. The result
// is equivalent to q by construction.
ConjunctiveQuery gen_inflation(const ConjunctiveQuery& q, int steps, std::uint64_t seed);

}  // namespace semwidth

#endif
