#include <doctest.h>

#include "semwidth/errors.hpp"
#include "semwidth/generators.hpp"
#include "semwidth/homomorphism.hpp"
#include "semwidth/hypergraph.hpp"
#include "semwidth/semantic.hpp"
#include "support/test_support.hpp"

using namespace semwidth;

TEST_CASE("a 1x2 grid is a single atom and already a core") {
    const ConjunctiveQuery q = gen_parity_grid(1, 2);
    CHECK(q.body.size() == 1);
    CHECK(q.head_vars.empty());
    CHECK(is_core(q));
}

TEST_CASE("grid atoms are oriented even parity first") {
    const ConjunctiveQuery q = gen_parity_grid(1, 2);
    const Atom a = *q.body.begin();
    CHECK(a.relation == "R");
    CHECK(a.args[0] == Term::var("x0_0"));
    CHECK(a.args[1] == Term::var("x0_1"));
}

TEST_CASE("2x2 grid has four atoms collapsing to one") {
    const ConjunctiveQuery q = gen_parity_grid(2, 2);
    CHECK(q.body.size() == 4);
    CHECK(compute_core(q).core.body.size() == 1);
}

TEST_CASE("2x3 grid widths") {
    const ConjunctiveQuery q = gen_parity_grid(2, 3);
    CHECK(q.body.size() == 7);
    CHECK(compute_core(q).core.body.size() == 1);
    const SemanticWidthReport report = semantic_width(q, WidthNotion::RhoStar);
    CHECK(report.original_value == Rational(3));
    CHECK(report.core_value == Rational(1));
}

TEST_CASE("degenerate grids are rejected") {
    CHECK_THROWS_AS(gen_parity_grid(1, 1), DomainError);
    CHECK_THROWS_AS(gen_parity_grid(0, 3), DomainError);
}

TEST_CASE("random queries are deterministic per seed") {
    for (int seed = 0; seed < 20; ++seed) {
        const ConjunctiveQuery a = gen_random_cq(seed, 6, 5, 3);
        const ConjunctiveQuery b = gen_random_cq(seed, 6, 5, 3);
        CHECK(a == b);
        CHECK(render_query(a) == render_query(b));
    }
    CHECK(gen_random_cq(1, 6, 5, 3) != gen_random_cq(2, 6, 5, 3));
}

TEST_CASE("single-atom random queries are their own core") {
    for (int seed = 0; seed < 10; ++seed) {
        const ConjunctiveQuery q = gen_random_cq(seed, 4, 1, 3);
        CHECK(q.body.size() == 1);
        CHECK(is_core(q));
    }
}

TEST_CASE("generated queries survive the full model validation") {
    for (int seed = 0; seed < 100; ++seed) {
        const ConjunctiveQuery q = gen_random_cq(seed, 6, 6, 3);
        CHECK_NOTHROW(validate_query(q));
        CHECK(parse_query(render_query(q)) == q);
    }
}

TEST_CASE("inflation with zero steps is the identity") {
    const ConjunctiveQuery q = testing::triangle_query();
    CHECK(gen_inflation(q, 0, 42) == q);
}

TEST_CASE("inflations stay equivalent and add atoms") {
    const ConjunctiveQuery atom = parse_query("ans() <- R(a,b).");
    const ConjunctiveQuery inflated = gen_inflation(atom, 3, 5);
    CHECK(inflated.body.size() == 4);
    CHECK(is_equivalent(atom, inflated));

    for (int seed = 0; seed < 30; ++seed) {
        ConjunctiveQuery base = gen_random_cq(seed, 4, 3, 2);
        const ConjunctiveQuery q = gen_inflation(base, 4, seed);
        CHECK(is_equivalent(base, q));
    }
}

TEST_CASE("inflating the triangle preserves semantic rho* 3/2") {
    const ConjunctiveQuery q = gen_inflation(testing::triangle_query(), 4, 11);
    const SemanticWidthReport report = semantic_width(q, WidthNotion::RhoStar);
    CHECK(report.core_value == Rational(3, 2));
}
