#include <doctest.h>

#include <random>

#include "semwidth/errors.hpp"
#include "semwidth/generators.hpp"
#include "semwidth/homomorphism.hpp"
#include "semwidth/hypergraph.hpp"
#include "support/test_support.hpp"

using namespace semwidth;

TEST_CASE("hypergraph_of builds one edge per atom") {
    const Hypergraph H = hypergraph_of(parse_query("ans() <- R(x,y), S(y,z)."));
    CHECK(H.vertices() == VertexSet{"x", "y", "z"});
    CHECK(H.edges() == EdgeSet{{"x", "y"}, {"y", "z"}});
}

TEST_CASE("hypergraph_of merges coincident edges") {
    const Hypergraph H = hypergraph_of(parse_query("ans() <- R(x,y), S(x,y)."));
    CHECK(H.edges() == EdgeSet{{"x", "y"}});
}

TEST_CASE("hypergraph_of drops constants") {
    const Hypergraph H = hypergraph_of(parse_query("ans() <- R(x,\"c\")."));
    CHECK(H.vertices() == VertexSet{"x"});
    CHECK(H.edges() == EdgeSet{{"x"}});
}

TEST_CASE("hypergraph_of flags variable-free queries as degenerate") {
    CHECK_THROWS_AS(hypergraph_of(parse_query("ans() <- R(\"a\",\"b\").")), DomainError);
}

TEST_CASE("hypergraph constructor rejects bad structures") {
    CHECK_THROWS_AS(Hypergraph({"x"}, {Edge{}}), DomainError);
    CHECK_THROWS_AS(Hypergraph({"x"}, {Edge{"y"}}), DomainError);
    CHECK_THROWS_AS(Hypergraph({"x", "y"}, {Edge{"x"}}), DomainError);  // isolated y
}

TEST_CASE("image under the identity is the identity") {
    const Hypergraph H = testing::triangle_hypergraph();
    VertexMap id;
    for (const Vertex& v : H.vertices()) id.mapping[v] = v;
    CHECK(image(id, H) == H);
}

TEST_CASE("image applies element-wise and deduplicates") {
    const Hypergraph G({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    VertexMap f;
    f.mapping = {{"a", "c"}, {"b", "b"}, {"c", "c"}};
    const Hypergraph img = image(f, G);
    CHECK(img.vertices() == VertexSet{"b", "c"});
    CHECK(img.edges() == EdgeSet{{"b", "c"}});
}

TEST_CASE("constant map collapses to a single loop vertex") {
    const Hypergraph G({"a", "b"}, {{"a", "b"}, {"a"}});
    VertexMap f;
    f.mapping = {{"a", "z"}, {"b", "z"}};
    const Hypergraph img = image(f, G);
    CHECK(img.vertices() == VertexSet{"z"});
    CHECK(img.edges() == EdgeSet{{"z"}});
}

TEST_CASE("check_homomorphism verifies edge preservation") {
    const Hypergraph G({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    VertexMap id;
    for (const Vertex& v : G.vertices()) id.mapping[v] = v;
    CHECK(check_homomorphism(id, G, G));

    VertexMap f;
    f.mapping = {{"a", "c"}, {"b", "b"}, {"c", "c"}};
    const Hypergraph H({"b", "c"}, {{"b", "c"}});
    CHECK(check_homomorphism(f, G, H));

    const Hypergraph H2({"a", "b", "c"}, {{"a", "b"}, {"c"}});
    CHECK_FALSE(check_homomorphism(f, G, H2));
}

TEST_CASE("images never grow and never isolate vertices") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const Hypergraph G = testing::random_hypergraph(rng, 7, 8);
        const auto [f, H] = testing::random_hom_target(rng, G);
        const Hypergraph img = image(f, G);
        CHECK(img.vertices().size() <= G.vertices().size());
        CHECK(img.edges().size() <= G.edges().size());
        CHECK(check_homomorphism(f, G, H));
        VertexSet covered;
        for (const Edge& e : img.edges()) covered.insert(e.begin(), e.end());
        CHECK(covered == img.vertices());
    }
}

TEST_CASE("CQ homomorphisms induce hypergraph homomorphisms") {
    for (int seed = 0; seed < 40; ++seed) {
        ConjunctiveQuery q = gen_random_cq(seed, 5, 4, 3);
        q.head_vars.clear();
        const ConjunctiveQuery inflated = gen_inflation(q, 3, seed);
        const auto hom = find_homomorphism(inflated, q);
        REQUIRE(hom.has_value());
        const VertexMap f = to_vertex_map(*hom);
        CHECK(check_homomorphism(f, hypergraph_of(inflated), hypergraph_of(q)));
    }
}
