#include <doctest.h>

#include <random>

#include "semwidth/decomposition.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/generators.hpp"
#include "semwidth/homomorphism.hpp"
#include "support/test_support.hpp"

using namespace semwidth;

namespace {

TreeDecomposition trivial_decomposition(const Hypergraph& H) {
    TreeDecomposition td;
    td.nodes = {0};
    td.bags[0] = H.vertices();
    return td;
}

}  // namespace

TEST_CASE("the one-bag decomposition is always valid") {
    const Hypergraph H = testing::triangle_hypergraph();
    CHECK(is_valid_decomposition(H, trivial_decomposition(H)));
}

TEST_CASE("a path decomposition of a path is valid") {
    const Hypergraph H({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    TreeDecomposition td;
    td.nodes = {0, 1, 2};
    td.tree_edges = {{0, 1}, {1, 2}};
    td.bags = {{0, {"a", "b"}}, {1, {"b", "c"}}, {2, {"c", "d"}}};
    CHECK(is_valid_decomposition(H, td));
}

TEST_CASE("disconnected occurrences break validity") {
    const Hypergraph H({"a", "b", "v"}, {{"a", "v"}, {"b", "v"}, {"a", "b"}});
    TreeDecomposition td;
    td.nodes = {0, 1, 2};
    td.tree_edges = {{0, 1}, {1, 2}};
    td.bags = {{0, {"a", "v"}}, {1, {"a", "b"}}, {2, {"b", "v"}}};
    // v sits in the two end bags but not the middle one.
    CHECK_FALSE(is_valid_decomposition(H, td));
    CHECK(validate_decomposition(H, td).value().find("connected subtree") != std::string::npos);
}

TEST_CASE("broken trees and uncovered edges are rejected") {
    const Hypergraph H({"a", "b"}, {{"a", "b"}});
    TreeDecomposition forest;
    forest.nodes = {0, 1};
    forest.bags = {{0, {"a", "b"}}, {1, {"a"}}};
    CHECK_FALSE(is_valid_decomposition(H, forest));  // two nodes, no edge

    TreeDecomposition uncovered;
    uncovered.nodes = {0, 1};
    uncovered.tree_edges = {{0, 1}};
    uncovered.bags = {{0, {"a"}}, {1, {"b"}}};
    CHECK_FALSE(is_valid_decomposition(H, uncovered));
}

TEST_CASE("f_width evaluates bags with certificates") {
    const Hypergraph H = testing::triangle_hypergraph();
    const WidthReport report =
        f_width(H, trivial_decomposition(H), WidthFunction::fractional_cover());
    CHECK(report.value == Rational(3, 2));
    CHECK(verify_width_report(H, WidthFunction::fractional_cover(), report));
}

TEST_CASE("f_width of the zero table is zero") {
    const Hypergraph H = testing::triangle_hypergraph();
    const std::vector<Vertex> verts(H.vertices().begin(), H.vertices().end());
    const WidthFunction zero =
        WidthFunction::table(verts, std::vector<Rational>(8, Rational(0)));
    CHECK(f_width(H, trivial_decomposition(H), zero).value == Rational(0));
}

TEST_CASE("f_width with integral bags counts edges") {
    const Hypergraph H({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    TreeDecomposition td;
    td.nodes = {0, 1};
    td.tree_edges = {{0, 1}};
    td.bags = {{0, {"x", "y"}}, {1, {"y", "z"}}};
    const WidthReport report = f_width(H, td, WidthFunction::integral_cover());
    CHECK(report.value == Rational(1));
    CHECK(verify_width_report(H, WidthFunction::integral_cover(), report));
}

TEST_CASE("ghw fixtures") {
    const Hypergraph path({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(ghw_exact(path).value == Rational(1));
    CHECK(ghw_exact(testing::triangle_hypergraph()).value == Rational(2));
    const Hypergraph single({"x", "y"}, {{"x", "y"}});
    CHECK(ghw_exact(single).value == Rational(1));
}

TEST_CASE("fhw fixtures") {
    const Hypergraph single({"x", "y"}, {{"x", "y"}});
    CHECK(fhw_exact(single).value == Rational(1));
    CHECK(fhw_exact(testing::triangle_hypergraph()).value == Rational(3, 2));
    const Hypergraph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(fhw_exact(path).value == Rational(1));
}

TEST_CASE("width searches agree with the chordal-supergraph oracle") {
    std::mt19937_64 rng(31);
    std::vector<Hypergraph> instances = {
        Hypergraph({"x", "y"}, {{"x", "y"}}),
        Hypergraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
        testing::triangle_hypergraph(),
        hypergraph_of(testing::four_cycle_query()),
    };
    for (int i = 0; i < 8; ++i) instances.push_back(testing::random_hypergraph(rng, 5, 6));

    for (const Hypergraph& H : instances) {
        if (H.vertices().size() > 5) continue;
        const Rational ghw_oracle = testing::oracle_min_width(
            H, [&](const VertexSet& bag) { return testing::oracle_integral_cover(H, bag); });
        CHECK(ghw_exact(H).value == ghw_oracle);
        const Rational fhw_oracle = testing::oracle_min_width(H, [&](const VertexSet& bag) {
            return rho_star(H, bag).primal.total_weight;  // certificate-verified value
        });
        CHECK(fhw_exact(H).value == fhw_oracle);
    }
}

TEST_CASE("width reports are self-certifying and fhw <= ghw") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 25; ++i) {
        const Hypergraph H = testing::random_hypergraph(rng, 7, 8);
        const WidthReport ghw = ghw_exact(H);
        const WidthReport fhw = fhw_exact(H);
        CHECK(verify_width_report(H, WidthFunction::integral_cover(), ghw));
        CHECK(verify_width_report(H, WidthFunction::fractional_cover(), fhw));
        CHECK(fhw.value <= ghw.value);
        CHECK(is_valid_decomposition(H, ghw.decomposition));
        CHECK(is_valid_decomposition(H, fhw.decomposition));
    }
}

TEST_CASE("b_width_exact reproduces fhw through the table route") {
    const Hypergraph H = testing::triangle_hypergraph();
    const std::vector<Vertex> verts(H.vertices().begin(), H.vertices().end());
    std::vector<Rational> values;
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        VertexSet X;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (mask & (1u << i)) X.insert(verts[i]);
        values.push_back(mask == 0 ? Rational(0) : rho_star(H, X).primal.total_weight);
    }
    const WidthFunction table = WidthFunction::table(verts, values);
    CHECK(b_width_exact(H, table).value == fhw_exact(H).value);
    CHECK(b_width_exact(H, WidthFunction::fractional_cover()).value == Rational(3, 2));
}

TEST_CASE("b_width_exact rejects non-monotone tables") {
    const Hypergraph H({"x", "y"}, {{"x", "y"}});
    // b({x}) = 1 > b({x,y}) = 0 is not monotone.
    const WidthFunction bad = WidthFunction::table(
        {"x", "y"}, {Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK_THROWS_AS(b_width_exact(H, bad), DomainError);
}

TEST_CASE("modular 1/2-weights on the triangle give single-bag width 3/2") {
    const Hypergraph H = testing::triangle_hypergraph();
    FractionalIndependentSet fis;
    for (const Vertex& v : H.vertices()) fis.weights[v] = Rational(1, 2);
    fis.total_weight = Rational(3, 2);
    const WidthFunction b = modular_from_fis(fis, H);
    CHECK(b_width_exact(H, b).value == Rational(3, 2));
}

TEST_CASE("restrict_to_core with all vertices is the identity") {
    const Hypergraph H = testing::triangle_hypergraph();
    const TreeDecomposition td = fhw_exact(H).decomposition;
    CHECK(restrict_to_core(td, H.vertices()) == td);
}

TEST_CASE("restrict_to_core intersects bags") {
    TreeDecomposition td;
    td.nodes = {0, 1};
    td.tree_edges = {{0, 1}};
    td.bags = {{0, {"x", "y"}}, {1, {"y", "z"}}};
    const TreeDecomposition restricted = restrict_to_core(td, {"y", "z"});
    CHECK(restricted.nodes == std::set<int>{0, 1});
    CHECK(restricted.bags.at(0) == VertexSet{"y"});
    CHECK(restricted.bags.at(1) == VertexSet{"y", "z"});
    CHECK(restricted.tree_edges == std::set<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("restrict_to_core deletes empty bags and reattaches") {
    TreeDecomposition td;
    td.nodes = {0, 1, 2};
    td.tree_edges = {{0, 1}, {1, 2}};
    td.bags = {{0, {"x"}}, {1, {"x", "y"}}, {2, {"y"}}};
    const TreeDecomposition restricted = restrict_to_core(td, {"y"});
    CHECK(restricted.nodes == std::set<int>{1, 2});
    CHECK(restricted.bags.at(1) == VertexSet{"y"});
    CHECK(restricted.bags.at(2) == VertexSet{"y"});
    CHECK(restricted.tree_edges == std::set<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("restrict_to_core bridges over deleted interior nodes") {
    // Path 1 - 0 - 2 where only the outer bags survive; node 2 reattaches to
    // the new root 1.
    TreeDecomposition td;
    td.nodes = {0, 1, 2};
    td.tree_edges = {{0, 1}, {0, 2}};
    td.bags = {{0, {"z"}}, {1, {"a", "z"}}, {2, {"a", "z"}}};
    const TreeDecomposition restricted = restrict_to_core(td, {"a"});
    CHECK(restricted.nodes == std::set<int>{1, 2});
    CHECK(restricted.tree_edges == std::set<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("restrict_to_core rejects vertices outside every bag") {
    TreeDecomposition td;
    td.nodes = {0};
    td.bags = {{0, {"x"}}};
    CHECK_THROWS_AS(restrict_to_core(td, {"ghost"}), DomainError);
    CHECK_THROWS_AS(restrict_to_core(td, VertexSet{}), DomainError);
}

TEST_CASE("restriction can only shrink rho and rho* widths") {
    // The Lemma 5.2 mechanism: transfer each bag's cover along the core
    // retraction and check the restricted bag is covered by weight <= k.
    for (int seed = 0; seed < 25; ++seed) {
        ConjunctiveQuery base = gen_random_cq(seed, 4, 3, 2);
        base.head_vars.clear();
        const ConjunctiveQuery q = gen_inflation(base, 3, seed + 500);
        const CoreResult core = compute_core(q);
        if (core.core.variables().empty()) continue;
        const Hypergraph H = hypergraph_of(q);
        const Hypergraph Hc = hypergraph_of(core.core);
        const VertexMap retraction = to_vertex_map(core.retraction);

        const WidthReport fhw_q = fhw_exact(H);
        const TreeDecomposition restricted =
            restrict_to_core(fhw_q.decomposition, Hc.vertices());
        CHECK(is_valid_decomposition(Hc, restricted));

        for (const auto& [node, bag] : fhw_q.decomposition.bags) {
            const FractionalCover gamma = rho_star(H, bag).primal;
            const FractionalCover moved = transfer_cover(retraction, H, Hc, gamma);
            CHECK(moved.total_weight <= fhw_q.value);
            if (restricted.bags.count(node)) {
                // B'_u is inside f(B_u), so the transferred cover covers it.
                CHECK(verify_cover(Hc, restricted.bags.at(node), moved));
            }
        }
        const WidthReport fhw_core = f_width(Hc, restricted, WidthFunction::fractional_cover());
        CHECK(fhw_core.value <= fhw_q.value);
        const WidthReport ghw_q = ghw_exact(H);
        const TreeDecomposition ghw_restricted =
            restrict_to_core(ghw_q.decomposition, Hc.vertices());
        CHECK(f_width(Hc, ghw_restricted, WidthFunction::integral_cover()).value <= ghw_q.value);
    }
}

TEST_CASE("extend_function with the full vertex set is the identity") {
    const Hypergraph H = testing::triangle_hypergraph();
    const WidthFunction b = sample_width_functions(H, FunctionFamily::Modular, 1, 0)[0];
    const WidthFunction extended = extend_function(b, H);
    CHECK(extended.values() == b.values());
}

TEST_CASE("extend_function ignores vertices outside the core domain") {
    // b' gives weight 1 to the single core vertex v; sets without v get 0.
    const WidthFunction b_core =
        WidthFunction::table({"v"}, {Rational(0), Rational(1)});
    const Hypergraph H({"v", "w"}, {{"v"}, {"w"}});
    const WidthFunction b = extend_function(b_core, H);
    CHECK(b.evaluate(H, {"w"}) == Rational(0));
    CHECK(b.evaluate(H, {"v", "w"}) == Rational(1));
}

TEST_CASE("extend_function applies b(X) = b_core(X intersect core)") {
    // Triangle core x,y,z inside a 4-vertex hypergraph with extra vertex w.
    const Hypergraph H({"w", "x", "y", "z"},
                       {{"x", "y"}, {"y", "z"}, {"z", "x"}, {"x", "w"}});
    FractionalIndependentSet fis;
    fis.weights = {{"x", Rational(1, 2)}, {"y", Rational(1, 2)}, {"z", Rational(1, 2)}};
    fis.total_weight = Rational(3, 2);
    const Hypergraph core = testing::triangle_hypergraph();
    const WidthFunction b_core = modular_from_fis(fis, core);
    const WidthFunction b = extend_function(b_core, H);
    CHECK(b.evaluate(H, {"x", "w"}) == Rational(1, 2));
    CHECK(b.evaluate(H, {"x", "y", "z"}) == Rational(3, 2));
    CHECK(b.evaluate(H, {"w"}) == Rational(0));
}

TEST_CASE("extend_function reports broken edge domination") {
    // b' is edge-dominated on the core {v} but the bigger hypergraph has an
    // edge {v,w} with b-value > 1 ... impossible for monotone extension, so
    // build the failing case from a core with two vertices and a big edge.
    const WidthFunction b_core = WidthFunction::table(
        {"p", "q"}, {Rational(0), Rational(1), Rational(1), Rational(2)});
    const Hypergraph H({"p", "q"}, {{"p"}, {"q"}, {"p", "q"}});
    CHECK_THROWS_AS(extend_function(b_core, H), DomainError);
}

TEST_CASE("validate_function classifies cardinality as modular") {
    const Hypergraph H({"x", "y"}, {{"x"}, {"y"}});
    const WidthFunction card = WidthFunction::table(
        {"x", "y"}, {Rational(0), Rational(1), Rational(1), Rational(2)});
    // |X| with singleton edges: modular and monotone, but edge values reach 1.
    const FunctionReport report = validate_function(card, H);
    CHECK(report.zero_at_empty);
    CHECK(report.monotone);
    CHECK(report.modular);
    CHECK(report.submodular);
    CHECK(report.edge_dominated);
}

TEST_CASE("validate_function separates submodular from modular") {
    const Hypergraph H({"x", "y"}, {{"x", "y"}});
    const WidthFunction truncated = WidthFunction::table(
        {"x", "y"}, {Rational(0), Rational(1), Rational(1), Rational(1)});
    const FunctionReport report = validate_function(truncated, H);
    CHECK(report.submodular);
    CHECK_FALSE(report.modular);
    CHECK(report.monotone);
}

TEST_CASE("validate_function measures rho* tables") {
    const Hypergraph H = hypergraph_of(testing::four_cycle_query());
    const std::vector<Vertex> verts(H.vertices().begin(), H.vertices().end());
    std::vector<Rational> values;
    for (std::uint32_t mask = 0; mask < (1u << verts.size()); ++mask) {
        VertexSet X;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (mask & (1u << i)) X.insert(verts[i]);
        values.push_back(rho_star(H, X).primal.total_weight);
    }
    const FunctionReport report = validate_function(WidthFunction::table(verts, values), H);
    CHECK(report.zero_at_empty);
    CHECK(report.monotone);
    CHECK(report.edge_dominated);
    // Submodularity of rho* is measured, not assumed; whatever the verdict,
    // the call must succeed.
}

TEST_CASE("modular_from_fis builds the summation table") {
    const Hypergraph H = testing::triangle_hypergraph();
    FractionalIndependentSet zero;
    zero.total_weight = Rational(0);
    CHECK(b_width_exact(H, modular_from_fis(zero, H)).value == Rational(0));

    FractionalIndependentSet halves;
    for (const Vertex& v : H.vertices()) halves.weights[v] = Rational(1, 2);
    halves.total_weight = Rational(3, 2);
    const WidthFunction b = modular_from_fis(halves, H);
    CHECK(b.evaluate(H, H.vertices()) == Rational(3, 2));

    const Hypergraph single({"v"}, {{"v"}});
    FractionalIndependentSet unit;
    unit.weights = {{"v", Rational(1)}};
    unit.total_weight = Rational(1);
    CHECK(modular_from_fis(unit, single).evaluate(single, {"v"}) == Rational(1));

    FractionalIndependentSet exceeding;
    for (const Vertex& v : H.vertices()) exceeding.weights[v] = Rational(1);
    exceeding.total_weight = Rational(3);
    CHECK_THROWS_AS(modular_from_fis(exceeding, H), DomainError);
}

TEST_CASE("sampled functions are certified members of their family") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 6; ++i) {
        const Hypergraph H = testing::random_hypergraph(rng, 6, 6);
        for (const WidthFunction& b :
             sample_width_functions(H, FunctionFamily::Submodular, 5, i)) {
            const FunctionReport report = validate_function(b, H);
            CHECK(report.zero_at_empty);
            CHECK(report.monotone);
            CHECK(report.submodular);
            CHECK(report.edge_dominated);
        }
        for (const WidthFunction& b :
             sample_width_functions(H, FunctionFamily::Modular, 5, i)) {
            CHECK(validate_function(b, H).modular);
        }
    }
}

TEST_CASE("sampled lower bounds stay below fhw") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        const Hypergraph H = testing::random_hypergraph(rng, 6, 6);
        const Rational fhw = fhw_exact(H).value;
        const Rational adw = sampled_lower_bound_width(H, FunctionFamily::Modular, 6, i);
        const Rational subw = sampled_lower_bound_width(H, FunctionFamily::Submodular, 6, i);
        CHECK(adw <= fhw);
        CHECK(subw <= fhw);
        CHECK(adw <= subw);  // the submodular family contains the modular samples
    }
}

TEST_CASE("the uniform triangle FIS pushes the modular bound to 3/2") {
    const Rational bound = sampled_lower_bound_width(testing::triangle_hypergraph(),
                                                     FunctionFamily::Modular, 5, 0);
    CHECK(bound == Rational(3, 2));
}
