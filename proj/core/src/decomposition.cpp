#include "semwidth/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "semwidth/errors.hpp"

namespace semwidth {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Bitmask view of a hypergraph over its sorted vertex list, with primal-graph
// adjacency masks.
struct MaskedHypergraph {
    std::vector<Vertex> verts;
    std::map<Vertex, int> index;
    std::vector<std::uint32_t> edge_masks;
    std::vector<std::uint32_t> adjacency;  // per vertex, excluding itself
    std::uint32_t full = 0;

    explicit MaskedHypergraph(const Hypergraph& H) {
        verts.assign(H.vertices().begin(), H.vertices().end());
        for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        adjacency.assign(verts.size(), 0);
        for (const Edge& e : H.edges()) {
            std::uint32_t mask = 0;
            for (const Vertex& v : e) mask |= 1u << index.at(v);
            edge_masks.push_back(mask);
            for (const Vertex& v : e) adjacency[index.at(v)] |= mask & ~(1u << index.at(v));
        }
        full = verts.size() == 32 ? ~0u : (1u << verts.size()) - 1u;
    }

    VertexSet unmask(std::uint32_t mask) const {
        VertexSet out;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (mask & (1u << i)) out.insert(verts[i]);
        return out;
    }

    std::uint32_t mask_of(const VertexSet& X) const {
        std::uint32_t mask = 0;
        for (const Vertex& v : X) {
            auto it = index.find(v);
            if (it == index.end()) throw DomainError("vertex '" + v + "' not in hypergraph");
            mask |= 1u << it->second;
        }
        return mask;
    }

    std::uint32_t neighborhood(std::uint32_t C) const {
        std::uint32_t n = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (C & (1u << i)) n |= adjacency[i];
        return n & ~C;
    }

    // Connected components of the primal graph induced on `mask`, in
    // ascending order of their lowest vertex bit.
    std::vector<std::uint32_t> components(std::uint32_t mask) const {
        std::vector<std::uint32_t> out;
        std::uint32_t remaining = mask;
        while (remaining) {
            std::uint32_t comp = remaining & (~remaining + 1u);  // lowest bit
            while (true) {
                std::uint32_t grown = comp;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (comp & (1u << i)) grown |= adjacency[i] & mask;
                if (grown == comp) break;
                comp = grown;
            }
            out.push_back(comp);
            remaining &= ~comp;
        }
        return out;
    }
};

// Exact minimal b-width via the separator recursion: a component C of the
// primal graph with boundary S = N(C) is decomposed by a bag B = S union D
// (D a nonempty subset of C), paying b(B) and recursing into the components
// of C minus D. Memoized on C; correct for monotone b.
class WidthSearch {
public:
    WidthSearch(const Hypergraph& H, const WidthFunction& b)
        : H_(H), hg_(H), b_(b) {}

    WidthReport run() {
        std::vector<std::uint32_t> roots = hg_.components(hg_.full);
        Rational value(0);
        for (std::uint32_t comp : roots) value = std::max(value, solve(comp).value);

        TreeDecomposition td;
        int next_id = 0;
        std::vector<int> root_ids;
        for (std::uint32_t comp : roots) root_ids.push_back(build(comp, td, next_id));
        for (std::size_t i = 0; i + 1 < root_ids.size(); ++i)
            td.tree_edges.insert(norm_edge(root_ids[i], root_ids[i + 1]));

        WidthReport report;
        report.value = value;
        report.decomposition = std::move(td);
        return report;
    }

private:
    struct StateResult {
        Rational value;
        std::uint32_t bag = 0;
    };

    Rational bag_cost(std::uint32_t B) {
        auto it = cost_memo_.find(B);
        if (it != cost_memo_.end()) return it->second;
        Rational cost = b_.kind() == WidthFunction::Kind::Table
                            ? b_.evaluate_mask(B)
                            : b_.evaluate(H_, hg_.unmask(B));
        cost_memo_.emplace(B, cost);
        return cost;
    }

    const StateResult& solve(std::uint32_t C) {
        auto hit = memo_.find(C);
        if (hit != memo_.end()) return hit->second;

        const std::uint32_t S = hg_.neighborhood(C);
        StateResult best;
        bool have_best = false;
        // Nonempty submasks of C in descending numeric order; the first
        // minimum found is kept, so the choice is deterministic.
        for (std::uint32_t D = C;; D = (D - 1) & C) {
            const std::uint32_t B = S | D;
            const Rational cost = bag_cost(B);
            if (!have_best || cost < best.value) {
                Rational total = cost;
                bool pruned = false;
                for (std::uint32_t child : hg_.components(C & ~D)) {
                    total = std::max(total, solve(child).value);
                    if (have_best && total >= best.value) {
                        pruned = true;
                        break;
                    }
                }
                if (!pruned && (!have_best || total < best.value)) {
                    best = {total, B};
                    have_best = true;
                }
            }
            if (D == (C & (~C + 1u))) break;  // lowest bit was the last submask
        }
        return memo_.emplace(C, best).first->second;
    }

    int build(std::uint32_t C, TreeDecomposition& td, int& next_id) {
        const StateResult& chosen = solve(C);
        const int node = next_id++;
        td.nodes.insert(node);
        td.bags[node] = hg_.unmask(chosen.bag);
        for (std::uint32_t child : hg_.components(C & ~chosen.bag)) {
            const int child_node = build(child, td, next_id);
            td.tree_edges.insert(norm_edge(node, child_node));
        }
        return node;
    }

    const Hypergraph& H_;
    MaskedHypergraph hg_;
    const WidthFunction& b_;
    std::map<std::uint32_t, Rational> cost_memo_;
    std::map<std::uint32_t, StateResult> memo_;
};

BagCertificate make_certificate(const Hypergraph& H, const WidthFunction& b,
                                const VertexSet& bag) {
    switch (b.kind()) {
        case WidthFunction::Kind::FractionalCover:
            return rho_star(H, bag);
        case WidthFunction::Kind::IntegralCover:
            return rho_integral(H, bag);
        case WidthFunction::Kind::Table:
            return b.evaluate(H, bag);
    }
    throw DomainError("unknown width function kind");
}

Rational certificate_value(const BagCertificate& cert) {
    if (const auto* pair = std::get_if<CoverCertificatePair>(&cert))
        return pair->primal.total_weight;
    if (const auto* integral = std::get_if<IntegralCover>(&cert))
        return Rational(static_cast<long long>(integral->count));
    return std::get<Rational>(cert);
}

void attach_certificates(const Hypergraph& H, const WidthFunction& b, WidthReport& report) {
    for (const auto& [node, bag] : report.decomposition.bags)
        report.per_bag_certificates.emplace(node, make_certificate(H, b, bag));
}

}  // namespace

WidthFunction WidthFunction::integral_cover() { return WidthFunction(Kind::IntegralCover); }
WidthFunction WidthFunction::fractional_cover() { return WidthFunction(Kind::FractionalCover); }

WidthFunction WidthFunction::table(std::vector<Vertex> domain, std::vector<Rational> values) {
    if (domain.size() > 20) throw DomainError("table function domain too large (max 20 vertices)");
    std::vector<Vertex> sorted = domain;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != domain)
        throw DomainError("table function domain must be sorted");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("table function domain has duplicate vertices");
    if (values.size() != (std::size_t{1} << domain.size()))
        throw DomainError("table function needs one value per subset of its domain");
    if (!values.empty() && values[0] != Rational(0))
        throw DomainError("table function must have b(empty) = 0");
    for (const Rational& v : values)
        if (v < Rational(0)) throw DomainError("table function values must be nonnegative");
    WidthFunction f(Kind::Table);
    f.domain_ = std::move(domain);
    f.values_ = std::move(values);
    return f;
}

const std::vector<Vertex>& WidthFunction::domain() const {
    if (kind_ != Kind::Table) throw DomainError("width function has no explicit domain");
    return domain_;
}

const std::vector<Rational>& WidthFunction::values() const {
    if (kind_ != Kind::Table) throw DomainError("width function has no explicit table");
    return values_;
}

Rational WidthFunction::evaluate_mask(std::uint32_t mask) const {
    if (kind_ != Kind::Table) throw DomainError("mask evaluation requires a table function");
    return values_[mask];
}

Rational WidthFunction::evaluate(const Hypergraph& H, const VertexSet& X) const {
    switch (kind_) {
        case Kind::IntegralCover:
            return Rational(static_cast<long long>(rho_integral(H, X).count));
        case Kind::FractionalCover:
            return rho_star(H, X).primal.total_weight;
        case Kind::Table: {
            std::uint32_t mask = 0;
            for (const Vertex& v : X) {
                auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
                if (it == domain_.end() || *it != v)
                    throw DomainError("table function not defined on vertex '" + v + "'");
                mask |= 1u << (it - domain_.begin());
            }
            return values_[mask];
        }
    }
    throw DomainError("unknown width function kind");
}

bool WidthFunction::is_monotone() const {
    if (kind_ != Kind::Table) return true;
    const std::size_t n = domain_.size();
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t bit = 1u << v;
        for (std::uint32_t mask = 0; mask < values_.size(); ++mask)
            if (!(mask & bit) && values_[mask] > values_[mask | bit]) return false;
    }
    return true;
}

std::optional<std::string> validate_decomposition(const Hypergraph& H,
                                                  const TreeDecomposition& td) {
    if (td.nodes.empty()) return "decomposition has no nodes";
    for (int u : td.nodes)
        if (!td.bags.count(u)) return "node " + std::to_string(u) + " has no bag";
    for (const auto& [u, bag] : td.bags) {
        if (!td.nodes.count(u)) return "bag for unknown node " + std::to_string(u);
        for (const Vertex& v : bag)
            if (!H.vertices().count(v)) return "bag vertex '" + v + "' not in hypergraph";
    }

    std::map<int, std::set<int>> adjacency;
    for (const auto& [a, b] : td.tree_edges) {
        if (a == b) return "self-loop tree edge";
        if (!td.nodes.count(a) || !td.nodes.count(b)) return "tree edge uses unknown node";
        adjacency[a].insert(b);
        adjacency[b].insert(a);
    }
    if (td.tree_edges.size() != td.nodes.size() - 1) return "tree edge count is not nodes - 1";
    std::set<int> seen;
    std::vector<int> stack{*td.nodes.begin()};
    seen.insert(*td.nodes.begin());
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adjacency[u])
            if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != td.nodes.size()) return "tree is not connected";

    for (const Edge& e : H.edges()) {
        bool covered = false;
        for (const auto& [u, bag] : td.bags) {
            if (std::includes(bag.begin(), bag.end(), e.begin(), e.end())) {
                covered = true;
                break;
            }
        }
        if (!covered) return "hyperedge not contained in any bag";
    }

    for (const Vertex& v : H.vertices()) {
        std::set<int> holding;
        for (const auto& [u, bag] : td.bags)
            if (bag.count(v)) holding.insert(u);
        if (holding.empty()) continue;
        std::set<int> reached;
        std::vector<int> frontier{*holding.begin()};
        reached.insert(*holding.begin());
        while (!frontier.empty()) {
            int u = frontier.back();
            frontier.pop_back();
            for (int w : adjacency[u])
                if (holding.count(w) && reached.insert(w).second) frontier.push_back(w);
        }
        if (reached != holding) return "vertex '" + v + "' does not induce a connected subtree";
    }
    return std::nullopt;
}

bool is_valid_decomposition(const Hypergraph& H, const TreeDecomposition& td) {
    return !validate_decomposition(H, td).has_value();
}

WidthReport f_width(const Hypergraph& H, const TreeDecomposition& td, const WidthFunction& b) {
    if (auto reason = validate_decomposition(H, td))
        throw DomainError("invalid decomposition: " + *reason);
    WidthReport report;
    report.value = Rational(0);
    report.decomposition = td;
    attach_certificates(H, b, report);
    for (const auto& [node, cert] : report.per_bag_certificates)
        report.value = std::max(report.value, certificate_value(cert));
    return report;
}

WidthReport b_width_exact(const Hypergraph& H, const WidthFunction& b, int vertex_cap) {
    if (H.empty()) throw DomainError("degenerate hypergraph: no vertices");
    if (static_cast<int>(H.vertices().size()) > vertex_cap)
        throw DomainError("hypergraph exceeds the decomposition vertex cap (" +
                          std::to_string(vertex_cap) + ")");
    if (b.kind() == WidthFunction::Kind::Table) {
        const std::vector<Vertex> verts(H.vertices().begin(), H.vertices().end());
        if (b.domain() != verts)
            throw DomainError("table function domain must equal the vertex set");
        if (!b.is_monotone())
            throw DomainError("b_width_exact requires a monotone width function");
    }
    WidthReport report = WidthSearch(H, b).run();
    attach_certificates(H, b, report);
    return report;
}

WidthReport ghw_exact(const Hypergraph& H, int vertex_cap) {
    return b_width_exact(H, WidthFunction::integral_cover(), vertex_cap);
}

WidthReport fhw_exact(const Hypergraph& H, int vertex_cap) {
    return b_width_exact(H, WidthFunction::fractional_cover(), vertex_cap);
}

bool verify_width_report(const Hypergraph& H, const WidthFunction& b,
                         const WidthReport& report) {
    if (!is_valid_decomposition(H, report.decomposition)) return false;
    Rational maximum(0);
    for (const auto& [node, bag] : report.decomposition.bags) {
        auto it = report.per_bag_certificates.find(node);
        if (it == report.per_bag_certificates.end()) return false;
        const BagCertificate& cert = it->second;
        switch (b.kind()) {
            case WidthFunction::Kind::FractionalCover: {
                const auto* pair = std::get_if<CoverCertificatePair>(&cert);
                if (!pair) return false;
                if (pair->primal.target != bag) return false;
                if (!verify_cover(H, bag, pair->primal)) return false;
                if (!verify_independent_set(H, pair->dual)) return false;
                if (pair->primal.total_weight != pair->dual.total_weight) return false;
                break;
            }
            case WidthFunction::Kind::IntegralCover: {
                const auto* integral = std::get_if<IntegralCover>(&cert);
                if (!integral) return false;
                if (integral->edges.size() != integral->count) return false;
                VertexSet covered;
                for (const Edge& e : integral->edges) {
                    if (!H.edges().count(e)) return false;
                    covered.insert(e.begin(), e.end());
                }
                if (!std::includes(covered.begin(), covered.end(), bag.begin(), bag.end()))
                    return false;
                if (rho_integral(H, bag).count != integral->count) return false;
                break;
            }
            case WidthFunction::Kind::Table: {
                const auto* value = std::get_if<Rational>(&cert);
                if (!value || *value != b.evaluate(H, bag)) return false;
                break;
            }
        }
        maximum = std::max(maximum, certificate_value(cert));
    }
    return maximum == report.value;
}

TreeDecomposition restrict_to_core(const TreeDecomposition& td, const VertexSet& core_vertices) {
    if (core_vertices.empty()) throw DomainError("core vertex set is empty");
    VertexSet bag_union;
    for (const auto& [u, bag] : td.bags) bag_union.insert(bag.begin(), bag.end());
    for (const Vertex& v : core_vertices)
        if (!bag_union.count(v))
            throw DomainError("core vertex '" + v + "' occurs in no bag");

    std::map<int, std::set<int>> adjacency;
    for (const auto& [a, b] : td.tree_edges) {
        adjacency[a].insert(b);
        adjacency[b].insert(a);
    }

    std::map<int, VertexSet> restricted;
    std::set<int> surviving;
    for (const auto& [u, bag] : td.bags) {
        VertexSet cut;
        std::set_intersection(bag.begin(), bag.end(), core_vertices.begin(), core_vertices.end(),
                              std::inserter(cut, cut.end()));
        restricted[u] = std::move(cut);
        if (!restricted[u].empty()) surviving.insert(u);
    }

    // Root at the lowest surviving node id, so every surviving node other
    // than the root has a surviving ancestor to reattach to.
    const int root = *surviving.begin();
    std::map<int, int> parent;
    parent[root] = root;
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : adjacency[order[i]]) {
            if (!parent.count(w)) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    if (order.size() != td.nodes.size())
        throw DomainError("decomposition tree is not connected");

    TreeDecomposition out;
    out.nodes = surviving;
    for (int u : surviving) out.bags[u] = restricted[u];
    for (int u : surviving) {
        if (u == root) continue;
        int ancestor = parent.at(u);
        while (!surviving.count(ancestor)) ancestor = parent.at(ancestor);
        out.tree_edges.insert(norm_edge(u, ancestor));
    }
    return out;
}

WidthFunction extend_function(const WidthFunction& b_core, const Hypergraph& H) {
    if (b_core.kind() != WidthFunction::Kind::Table)
        throw DomainError("extend_function requires an explicit table function");
    const std::vector<Vertex> verts(H.vertices().begin(), H.vertices().end());
    if (verts.size() > 20) throw DomainError("extension target too large (max 20 vertices)");
    const std::vector<Vertex>& core_domain = b_core.domain();
    for (const Vertex& v : core_domain)
        if (!H.vertices().count(v))
            throw DomainError("core domain vertex '" + v + "' not in the target vertex set");

    // Bit positions of the core vertices inside the big domain.
    std::vector<int> core_bit_of(verts.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto it = std::lower_bound(core_domain.begin(), core_domain.end(), verts[i]);
        if (it != core_domain.end() && *it == verts[i])
            core_bit_of[i] = static_cast<int>(it - core_domain.begin());
    }

    std::vector<Rational> values(std::size_t{1} << verts.size());
    for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
        std::uint32_t core_mask = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if ((mask & (1u << i)) && core_bit_of[i] >= 0) core_mask |= 1u << core_bit_of[i];
        values[mask] = b_core.evaluate_mask(core_mask);
    }
    WidthFunction extended = WidthFunction::table(verts, std::move(values));

    for (const Edge& e : H.edges()) {
        if (extended.evaluate(H, e) > Rational(1))
            throw DomainError("extended function is not edge-dominated on the target hypergraph");
    }
    return extended;
}

FunctionReport validate_function(const WidthFunction& b, const Hypergraph& H) {
    if (b.kind() != WidthFunction::Kind::Table)
        throw DomainError("validate_function requires an explicit table function");
    const std::vector<Vertex> verts(H.vertices().begin(), H.vertices().end());
    if (b.domain() != verts)
        throw DomainError("table function domain must equal the vertex set");
    const std::size_t n = verts.size();
    if (n > 10) throw DomainError("domain too large for exhaustive validation (max 10)");

    const std::vector<Rational>& values = b.values();
    FunctionReport report;
    report.zero_at_empty = values[0] == Rational(0);
    report.monotone = b.is_monotone();
    report.modular = true;
    report.submodular = true;
    const std::uint32_t count = 1u << n;
    for (std::uint32_t x = 0; x < count; ++x) {
        for (std::uint32_t y = 0; y < count; ++y) {
            const Rational lhs = values[x] + values[y];
            const Rational rhs = values[x & y] + values[x | y];
            if (lhs != rhs) report.modular = false;
            if (lhs < rhs) {
                report.submodular = false;
                break;
            }
        }
        if (!report.submodular) break;
    }
    // The pair sweep above stops early once submodularity fails, so rerun the
    // modularity check independently when needed.
    if (!report.submodular && report.modular) {
        for (std::uint32_t x = 0; x < count && report.modular; ++x)
            for (std::uint32_t y = 0; y < count; ++y)
                if (values[x] + values[y] != values[x & y] + values[x | y]) {
                    report.modular = false;
                    break;
                }
    }
    report.edge_dominated = true;
    MaskedHypergraph hg(H);
    for (std::uint32_t e : hg.edge_masks)
        if (values[e] > Rational(1)) report.edge_dominated = false;
    return report;
}

WidthFunction modular_from_fis(const FractionalIndependentSet& fis, const Hypergraph& H) {
    if (!verify_independent_set(H, fis))
        throw DomainError("fractional independent set is not edge-dominated");
    const std::vector<Vertex> verts(H.vertices().begin(), H.vertices().end());
    if (verts.size() > 20) throw DomainError("vertex set too large for a table (max 20)");
    std::vector<Rational> weights(verts.size(), Rational(0));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto it = fis.weights.find(verts[i]);
        if (it != fis.weights.end()) weights[i] = it->second;
    }
    std::vector<Rational> values(std::size_t{1} << verts.size(), Rational(0));
    for (std::uint32_t mask = 1; mask < values.size(); ++mask) {
        const std::uint32_t low = mask & (~mask + 1u);
        int bit = 0;
        while (!(low & (1u << bit))) ++bit;
        values[mask] = values[mask & ~low] + weights[bit];
    }
    return WidthFunction::table(verts, std::move(values));
}

namespace {

// Draws in [0, bound) pinned to the raw engine output, so results do not
// depend on the standard library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

FractionalIndependentSet scaled_fis(const Hypergraph& H, std::map<Vertex, Rational> weights) {
    Rational max_edge_sum(0);
    for (const Edge& e : H.edges()) {
        Rational sum(0);
        for (const Vertex& v : e) sum += weights.at(v);
        max_edge_sum = std::max(max_edge_sum, sum);
    }
    FractionalIndependentSet fis;
    fis.total_weight = Rational(0);
    for (auto& [v, w] : weights) {
        if (max_edge_sum > Rational(1)) w /= max_edge_sum;
        fis.weights[v] = w;
        fis.total_weight += w;
    }
    return fis;
}

}  // namespace

std::vector<WidthFunction> sample_width_functions(const Hypergraph& H, FunctionFamily family,
                                                  int count, std::uint64_t seed) {
    if (H.empty()) throw DomainError("degenerate hypergraph: no vertices");
    if (H.vertices().size() > 10)
        throw DomainError("function sampling capped at 10 vertices");
    if (count < 1) throw DomainError("sample count must be positive");

    std::mt19937_64 rng(seed);
    std::vector<WidthFunction> samples;
    std::vector<Rational> modular_totals;

    // Sample 0 is the uniform fractional independent set: weight 1 on every
    // vertex, scaled down by the largest edge size.
    {
        std::map<Vertex, Rational> uniform;
        for (const Vertex& v : H.vertices()) uniform[v] = Rational(1);
        const FractionalIndependentSet fis = scaled_fis(H, std::move(uniform));
        samples.push_back(modular_from_fis(fis, H));
        modular_totals.push_back(fis.total_weight);
    }
    for (int i = 1; i < count; ++i) {
        std::map<Vertex, Rational> weights;
        for (const Vertex& v : H.vertices())
            weights[v] = Rational(static_cast<long long>(draw(rng, 9)), 8);
        const FractionalIndependentSet fis = scaled_fis(H, std::move(weights));
        samples.push_back(modular_from_fis(fis, H));
        modular_totals.push_back(fis.total_weight);
    }
    if (family == FunctionFamily::Modular) return samples;

    // Submodular family: the modular samples plus truncations min(b, t).
    const int modular_count = static_cast<int>(samples.size());
    for (int i = 0; i < modular_count; ++i) {
        const Rational full_value = modular_totals[i];
        if (full_value.is_zero()) continue;
        const Rational threshold =
            full_value * Rational(static_cast<long long>(1 + draw(rng, 8)), 8);
        std::vector<Rational> truncated = samples[i].values();
        for (Rational& v : truncated) v = std::min(v, threshold);
        samples.push_back(
            WidthFunction::table(samples[i].domain(), std::move(truncated)));
    }
    return samples;
}

Rational sampled_lower_bound_width(const Hypergraph& H, FunctionFamily family, int samples,
                                   std::uint64_t seed, int vertex_cap) {
    Rational bound(0);
    for (const WidthFunction& b : sample_width_functions(H, family, samples, seed))
        bound = std::max(bound, b_width_exact(H, b, vertex_cap).value);
    return bound;
}

}  // namespace semwidth
