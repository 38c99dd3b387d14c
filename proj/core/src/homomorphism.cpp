#include "semwidth/homomorphism.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "semwidth/errors.hpp"

namespace semwidth {

Term CQHomomorphism::apply(const Term& t) const {
    if (t.is_constant()) return t;
    auto it = mapping.find(t.text);
    if (it == mapping.end())
        throw DomainError("homomorphism not defined on variable '" + t.text + "'");
    return it->second;
}

Atom CQHomomorphism::apply(const Atom& a) const {
    Atom out;
    out.relation = a.relation;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(apply(t));
    return out;
}

bool check_cq_homomorphism(const CQHomomorphism& f, const ConjunctiveQuery& q1,
                           const ConjunctiveQuery& q2) {
    for (const std::string& v : q1.variables())
        if (!f.mapping.count(v)) return false;
    for (const std::string& h : q1.head_vars) {
        auto it = f.mapping.find(h);
        if (it == f.mapping.end() || it->second != Term::var(h)) return false;
    }
    for (const Atom& a : q1.body)
        if (!q2.body.count(f.apply(a))) return false;
    return true;
}

CQHomomorphism compose(const CQHomomorphism& g, const CQHomomorphism& f) {
    CQHomomorphism out;
    for (const auto& [v, t] : f.mapping) out.mapping.emplace(v, g.apply(t));
    return out;
}

namespace {

// One search node's state: a candidate list per source variable. A variable
// is decided once its domain is a singleton.
using Domains = std::vector<std::vector<Term>>;

class HomSearch {
public:
    HomSearch(const ConjunctiveQuery& q1, const ConjunctiveQuery& q2,
              const HomSearchOptions& opts,
              std::function<bool(const CQHomomorphism&)> accept)
        : source_(q1), target_(q2), opts_(opts), accept_(std::move(accept)) {
        const std::set<std::string> var_set = q1.variables();
        vars_.assign(var_set.begin(), var_set.end());
        for (std::size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = i;
        src_atoms_.assign(q1.body.begin(), q1.body.end());
        for (const Atom& a : q2.body) tgt_by_rel_[a.relation].push_back(a);

        std::set<Term> candidate_set;
        for (const Atom& a : q2.body)
            for (const Term& t : a.args) {
                if (opts_.variables_only && t.is_constant()) continue;
                candidate_set.insert(t);
            }
        candidates_.assign(candidate_set.begin(), candidate_set.end());
    }

    std::optional<CQHomomorphism> run() {
        if (source_.head_vars != target_.head_vars) return std::nullopt;
        Domains domains(vars_.size(), candidates_);
        const std::set<std::string> head(source_.head_vars.begin(), source_.head_vars.end());
        for (const std::string& h : head) {
            domains[var_index_.at(h)] = {Term::var(h)};
        }
        if (opts_.injective) {
            for (const std::string& h : head)
                if (!remove_from_others(domains, var_index_.at(h), Term::var(h)))
                    return std::nullopt;
        }
        std::optional<CQHomomorphism> found;
        search(domains, found);
        return found;
    }

private:
    static bool remove_from_others(Domains& domains, std::size_t keep, const Term& value) {
        for (std::size_t i = 0; i < domains.size(); ++i) {
            if (i == keep) continue;
            auto it = std::find(domains[i].begin(), domains[i].end(), value);
            if (it != domains[i].end()) {
                domains[i].erase(it);
                if (domains[i].empty()) return false;
            }
        }
        return true;
    }

    bool domain_has(const std::vector<Term>& domain, const Term& t) const {
        return std::binary_search(domain.begin(), domain.end(), t);
    }

    // Target atom t is compatible with source atom a under the current
    // domains: constants match exactly, each variable position lies in the
    // variable's domain, and repeated variables get equal images.
    bool compatible(const Atom& a, const Atom& t, const Domains& domains) const {
        if (t.args.size() != a.args.size()) return false;
        std::map<std::string, const Term*> seen;
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            const Term& s = a.args[i];
            if (s.is_constant()) {
                if (t.args[i] != s) return false;
                continue;
            }
            if (!domain_has(domains[var_index_.at(s.text)], t.args[i])) return false;
            auto [it, inserted] = seen.emplace(s.text, &t.args[i]);
            if (!inserted && *it->second != t.args[i]) return false;
        }
        return true;
    }

    // Arc-consistency pass: for every source atom, intersect each variable's
    // domain with the values offered by compatible target atoms. Returns
    // false when some atom has no compatible target or a domain empties.
    bool propagate(Domains& domains) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Atom& a : src_atoms_) {
                auto bucket = tgt_by_rel_.find(a.relation);
                if (bucket == tgt_by_rel_.end()) return false;
                std::map<std::size_t, std::set<Term>> allowed;
                bool any = false;
                for (const Atom& t : bucket->second) {
                    if (!compatible(a, t, domains)) continue;
                    any = true;
                    for (std::size_t i = 0; i < a.args.size(); ++i)
                        if (a.args[i].is_variable())
                            allowed[var_index_.at(a.args[i].text)].insert(t.args[i]);
                }
                if (!any) return false;
                for (auto& [vi, values] : allowed) {
                    std::vector<Term> next;
                    next.reserve(domains[vi].size());
                    for (const Term& x : domains[vi])
                        if (values.count(x)) next.push_back(x);
                    if (next.size() != domains[vi].size()) {
                        if (next.empty()) return false;
                        domains[vi] = std::move(next);
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    // Most-constrained variable: smallest open domain, ties broken by the
    // sorted variable order.
    std::optional<std::size_t> pick_variable(const Domains& domains) const {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < domains.size(); ++i) {
            if (domains[i].size() < 2) continue;
            if (!best || domains[i].size() < domains[*best].size()) best = i;
        }
        return best;
    }

    bool search(Domains domains, std::optional<CQHomomorphism>& found) const {
        if (!propagate(domains)) return false;
        const auto open = pick_variable(domains);
        if (!open) {
            CQHomomorphism f;
            for (std::size_t i = 0; i < vars_.size(); ++i) f.mapping[vars_[i]] = domains[i][0];
            if (!check_cq_homomorphism(f, source_, target_)) return false;
            if (!accept_(f)) return false;  // keep searching
            found = std::move(f);
            return true;
        }
        std::vector<Term> values = domains[*open];
        if (opts_.reverse_order) std::reverse(values.begin(), values.end());
        for (const Term& value : values) {
            Domains next = domains;
            next[*open] = {value};
            if (opts_.injective && !remove_from_others(next, *open, value)) continue;
            if (search(std::move(next), found)) return true;
        }
        return false;
    }

    const ConjunctiveQuery& source_;
    const ConjunctiveQuery& target_;
    HomSearchOptions opts_;
    std::function<bool(const CQHomomorphism&)> accept_;
    std::vector<std::string> vars_;
    std::map<std::string, std::size_t> var_index_;
    std::vector<Atom> src_atoms_;
    std::map<std::string, std::vector<Atom>> tgt_by_rel_;
    std::vector<Term> candidates_;
};

// Number of distinct atoms in the image of f.
std::size_t image_atom_count(const CQHomomorphism& f, const ConjunctiveQuery& q) {
    std::set<Atom> image;
    for (const Atom& a : q.body) image.insert(f.apply(a));
    return image.size();
}

// First endomorphism (in search order) whose image has strictly fewer atoms.
std::optional<CQHomomorphism> find_shrinking_endomorphism(const ConjunctiveQuery& q,
                                                          SearchOrder order) {
    HomSearchOptions opts;
    opts.reverse_order = (order == SearchOrder::Reverse);
    const std::size_t n = q.body.size();
    HomSearch search(q, q, opts,
                     [&](const CQHomomorphism& f) { return image_atom_count(f, q) < n; });
    return search.run();
}

CQHomomorphism identity_homomorphism(const ConjunctiveQuery& q) {
    CQHomomorphism f;
    for (const std::string& v : q.variables()) f.mapping[v] = Term::var(v);
    return f;
}

}  // namespace

std::optional<CQHomomorphism> find_homomorphism(const ConjunctiveQuery& q1,
                                                const ConjunctiveQuery& q2,
                                                const HomSearchOptions& options) {
    HomSearch search(q1, q2, options, [](const CQHomomorphism&) { return true; });
    return search.run();
}

bool is_equivalent(const ConjunctiveQuery& q1, const ConjunctiveQuery& q2) {
    return find_homomorphism(q1, q2).has_value() && find_homomorphism(q2, q1).has_value();
}

bool are_isomorphic(const ConjunctiveQuery& q1, const ConjunctiveQuery& q2) {
    if (q1.body.size() != q2.body.size()) return false;
    if (q1.variables().size() != q2.variables().size()) return false;
    HomSearchOptions opts;
    opts.injective = true;
    opts.variables_only = true;
    return find_homomorphism(q1, q2, opts).has_value() &&
           find_homomorphism(q2, q1, opts).has_value();
}

CoreResult compute_core(const ConjunctiveQuery& q, SearchOrder order) {
    validate_query(q);
    ConjunctiveQuery current = q;
    CQHomomorphism retraction = identity_homomorphism(q);
    while (true) {
        auto shrink = find_shrinking_endomorphism(current, order);
        if (!shrink) break;
        ConjunctiveQuery next;
        next.head_vars = current.head_vars;
        for (const Atom& a : current.body) next.body.insert(shrink->apply(a));
        retraction = compose(*shrink, retraction);
        current = std::move(next);
    }

    CoreResult result;
    result.core = current;
    result.retraction = normalize_retraction(retraction, q, current);
    result.witness_back = identity_homomorphism(current);
    return result;
}

bool is_core(const ConjunctiveQuery& q) {
    validate_query(q);
    return !find_shrinking_endomorphism(q, SearchOrder::Forward).has_value();
}

CQHomomorphism normalize_retraction(const CQHomomorphism& f, const ConjunctiveQuery& q,
                                    const ConjunctiveQuery& core) {
    if (!check_cq_homomorphism(f, q, core))
        throw DomainError("normalize_retraction: f is not a homomorphism onto the core");
    const std::set<std::string> core_vars = core.variables();

    // f restricted to the core must be a variable renaming of the core.
    std::map<std::string, std::string> renaming;
    std::set<std::string> hit;
    for (const std::string& v : core_vars) {
        const Term t = f.apply(Term::var(v));
        if (t.is_constant() || !core_vars.count(t.text))
            throw DomainError("normalize_retraction: f does not rename the core variables");
        if (!hit.insert(t.text).second)
            throw DomainError("normalize_retraction: f is not injective on the core");
        renaming[v] = t.text;
    }

    bool already_identity = true;
    CQHomomorphism inverse;
    for (const auto& [v, w] : renaming) {
        inverse.mapping[w] = Term::var(v);
        if (v != w) already_identity = false;
    }
    if (already_identity) return f;

    if (!check_cq_homomorphism(inverse, core, core))
        throw DomainError("normalize_retraction: inverse renaming is not an endomorphism");
    CQHomomorphism normalized = compose(inverse, f);
    for (const std::string& v : core_vars) {
        if (normalized.apply(Term::var(v)) != Term::var(v))
            throw DomainError("normalize_retraction: normalization failed to fix the core");
    }
    if (!check_cq_homomorphism(normalized, q, core))
        throw DomainError("normalize_retraction: normalized map is not a homomorphism");
    return normalized;
}

VertexMap to_vertex_map(const CQHomomorphism& f) {
    VertexMap out;
    for (const auto& [v, t] : f.mapping) {
        if (t.is_constant())
            throw DomainError("variable '" + v +
                              "' maps to a constant; no induced hypergraph homomorphism");
        out.mapping[v] = t.text;
    }
    return out;
}

}  // namespace semwidth
