#include "semwidth/generators.hpp"

#include <random>
#include <vector>

#include "semwidth/errors.hpp"

namespace semwidth {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::string grid_var(int i, int j) {
    return "x" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

ConjunctiveQuery gen_parity_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw DomainError("grid dimensions must be positive");
    if (rows * cols > 64) throw DomainError("grid too large (max 64 vertices)");
    if (rows == 1 && cols == 1) throw DomainError("a 1x1 grid has no edges");

    ConjunctiveQuery q;
    auto add_edge = [&](int i1, int j1, int i2, int j2) {
        const bool first_even = (i1 + j1) % 2 == 0;
        Atom a;
        a.relation = "R";
        a.args = {Term::var(grid_var(first_even ? i1 : i2, first_even ? j1 : j2)),
                  Term::var(grid_var(first_even ? i2 : i1, first_even ? j2 : j1))};
        q.body.insert(std::move(a));
    };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) add_edge(i, j, i, j + 1);
            if (i + 1 < rows) add_edge(i, j, i + 1, j);
        }
    validate_query(q);
    return q;
}

ConjunctiveQuery gen_random_cq(std::uint64_t seed, int n_vars, int n_atoms, int max_arity) {
    if (n_vars < 1 || n_atoms < 1 || max_arity < 1)
        throw DomainError("generator parameters must be positive");
    if (n_vars > 26 || n_atoms > 64 || max_arity > 6)
        throw DomainError("generator parameters exceed desk-scale caps");

    std::mt19937_64 rng(seed);
    const int n_relations = std::max(1, n_atoms / 2);
    // Arity depends only on the relation index, so queries drawn from
    // different seeds stay arity-compatible and can share databases.
    auto arity = [&](int rel) { return 1 + rel % max_arity; };

    ConjunctiveQuery q;
    for (int a = 0; a < n_atoms; ++a) {
        const int rel = static_cast<int>(draw(rng, n_relations));
        Atom atom;
        atom.relation = "R" + std::to_string(rel);
        for (int i = 0; i < arity(rel); ++i)
            atom.args.push_back(Term::var("v" + std::to_string(draw(rng, n_vars))));
        q.body.insert(std::move(atom));
    }
    const std::set<std::string> used = q.variables();
    for (const std::string& v : used)
        if (draw(rng, 4) == 0) q.head_vars.push_back(v);
    validate_query(q);
    return q;
}

ConjunctiveQuery gen_inflation(const ConjunctiveQuery& q, int steps, std::uint64_t seed) {
    validate_query(q);
    if (steps < 0) throw DomainError("inflation steps must be nonnegative");

    std::mt19937_64 rng(seed);
    const std::vector<Atom> base(q.body.begin(), q.body.end());
    std::set<std::string> taken = q.variables();
    int fresh_counter = 0;
    auto fresh_var = [&]() {
        std::string name;
        do {
            name = "w" + std::to_string(fresh_counter++);
        } while (taken.count(name));
        taken.insert(name);
        return name;
    };

    ConjunctiveQuery out = q;
    for (int s = 0; s < steps; ++s) {
        const Atom& origin = base[draw(rng, base.size())];
        if (origin.args.empty()) continue;  // nothing to rename
        Atom added;
        added.relation = origin.relation;
        added.args = origin.args;
        bool renamed = false;
        for (Term& t : added.args) {
            if (draw(rng, 2) == 0) {
                t = Term::var(fresh_var());
                renamed = true;
            }
        }
        if (!renamed) {
            const std::size_t pos = draw(rng, added.args.size());
            added.args[pos] = Term::var(fresh_var());
        }
        out.body.insert(std::move(added));
    }
    validate_query(out);
    return out;
}

}  // namespace semwidth
