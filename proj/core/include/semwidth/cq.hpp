#ifndef SEMWIDTH_CQ_HPP
#define SEMWIDTH_CQ_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace semwidth {

// A term is either a variable (bare lowercase identifier) or a constant
// (the unquoted literal value). The two lexical classes are disjoint.
struct Term {
    enum class Kind { Variable = 0, Constant = 1 };

    Kind kind = Kind::Variable;
    std::string text;

    static Term var(std::string name) { return Term{Kind::Variable, std::move(name)}; }
    static Term constant(std::string value) { return Term{Kind::Constant, std::move(value)}; }

    bool is_variable() const { return kind == Kind::Variable; }
    bool is_constant() const { return kind == Kind::Constant; }

    auto operator<=>(const Term&) const = default;
};

struct Atom {
    std::string relation;
    std::vector<Term> args;

    auto operator<=>(const Atom&) const = default;
};

// Rule-based conjunctive query: ans(head_vars) <- body. The body is a set,
// so duplicate atoms collapse. An empty head makes the query Boolean.
struct ConjunctiveQuery {
    std::vector<std::string> head_vars;
    std::set<Atom> body;

    // All variables occurring in the body, sorted.
    std::set<std::string> variables() const;
    // All constant values occurring in the body, sorted.
    std::set<std::string> constants() const;

    bool operator==(const ConjunctiveQuery&) const = default;
};

// Relation instances keyed by relation name; every value is a plain string.
struct Database {
    std::map<std::string, std::set<std::vector<std::string>>> relations;

    // All values occurring in some tuple.
    std::set<std::string> universe() const;
};

struct AnswerRelation {
    std::vector<std::string> attributes;
    std::set<std::vector<std::string>> tuples;

    bool operator==(const AnswerRelation&) const = default;
};

// Throws DomainError unless q satisfies all model invariants: nonempty body,
// safety (head vars occur in the body), one arity per relation name, and
// lexically valid names so that render/parse round-trips.
void validate_query(const ConjunctiveQuery& q);

// Parses one `ans(<vars>) <- atom, atom, ... .` statement.
// Throws ParseError with position info, or DomainError for safety/arity
// violations.
ConjunctiveQuery parse_query(const std::string& text);

// Canonical text: atoms sorted by relation name then argument list; constants
// rendered as integer literals when numeric and quoted otherwise.
// parse_query(render_query(q)) is structurally equal to q.
std::string render_query(const ConjunctiveQuery& q);

// Chandra-Merlin construction: freezes every variable into a fresh constant
// and turns each atom into a tuple. Real constants pass through unchanged.
Database canonical_database(const ConjunctiveQuery& q);

// Brute-force answer semantics: enumerates every substitution from vars(q)
// into the database universe. This is a desk-scale oracle, not an optimizer.
AnswerRelation evaluate(const ConjunctiveQuery& q, const Database& db);

}  // namespace semwidth

#endif
