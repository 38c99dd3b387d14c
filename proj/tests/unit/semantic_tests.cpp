#include <doctest.h>

#include <map>

#include "semwidth/errors.hpp"
#include "semwidth/generators.hpp"
#include "semwidth/json_io.hpp"
#include "semwidth/semantic.hpp"
#include "support/test_support.hpp"

using namespace semwidth;

TEST_CASE("a core query has equal semantic and plain width") {
    const ConjunctiveQuery q = testing::triangle_query();
    for (WidthNotion notion : {WidthNotion::RhoStar, WidthNotion::Ghw, WidthNotion::Fhw}) {
        const SemanticWidthReport report = semantic_width(q, notion);
        CHECK(report.core.core == q);
        CHECK(report.core_value == report.original_value);
        CHECK(report.exactness == "exact");
    }
}

TEST_CASE("redundant loop query keeps rho* = 1 on both sides") {
    const SemanticWidthReport report =
        semantic_width(parse_query("ans() <- R(x,y), R(y,y)."), WidthNotion::RhoStar);
    CHECK(report.core_value == Rational(1));
    CHECK(report.original_value == Rational(1));
    CHECK(render_query(report.core.core) == "ans() <- R(y,y).");
}

TEST_CASE("2x2 parity grid drops from rho* 2 to semantic rho* 1") {
    const SemanticWidthReport report =
        semantic_width(gen_parity_grid(2, 2), WidthNotion::RhoStar);
    CHECK(report.original_value == Rational(2));
    CHECK(report.core_value == Rational(1));
    CHECK(report.core.core.body.size() == 1);
}

TEST_CASE("triangle fixture widths") {
    const ConjunctiveQuery q = testing::triangle_query();
    CHECK(semantic_width(q, WidthNotion::RhoStar).core_value == Rational(3, 2));
    CHECK(semantic_width(q, WidthNotion::Fhw).core_value == Rational(3, 2));
    CHECK(semantic_width(q, WidthNotion::Ghw).core_value == Rational(2));
}

TEST_CASE("lower-bound notions are labeled and bounded by fhw") {
    const ConjunctiveQuery q = testing::triangle_query();
    const SemanticWidthReport adw = semantic_width(q, WidthNotion::AdwLower);
    CHECK(adw.exactness == "lower_bound");
    CHECK(adw.core_value <= semantic_width(q, WidthNotion::Fhw).core_value);
    CHECK(adw.core_value == Rational(3, 2));  // uniform FIS sample achieves it
}

TEST_CASE("reformulation decision brackets the core width") {
    const ConjunctiveQuery grid = gen_parity_grid(2, 2);
    CHECK(reformulation_decision(grid, WidthNotion::RhoStar, Rational(1)));
    CHECK(reformulation_decision(grid, WidthNotion::RhoStar, Rational(2)));
    CHECK_FALSE(reformulation_decision(grid, WidthNotion::RhoStar, Rational(1, 2)));

    const ConjunctiveQuery triangle = testing::triangle_query();
    CHECK_FALSE(reformulation_decision(triangle, WidthNotion::Fhw, Rational(1)));
    CHECK(reformulation_decision(triangle, WidthNotion::Fhw, Rational(3, 2)));
}

TEST_CASE("reformulation decision rejects lower-bound notions") {
    CHECK_THROWS_AS(
        reformulation_decision(testing::triangle_query(), WidthNotion::AdwLower, Rational(1)),
        DomainError);
}

TEST_CASE("core minimality holds on random inflations") {
    for (int seed = 0; seed < 20; ++seed) {
        ConjunctiveQuery base = gen_random_cq(seed, 4, 3, 2);
        base.head_vars.clear();
        const ConjunctiveQuery q = gen_inflation(base, 3, seed + 99);
        if (hypergraph_of(q).vertices().size() > 10) continue;
        for (WidthNotion notion : {WidthNotion::RhoStar, WidthNotion::Ghw, WidthNotion::Fhw})
            CHECK(verify_core_minimality(q, notion));
    }
}

TEST_CASE("width values are invariant under variable renaming") {
    const ConjunctiveQuery q = gen_parity_grid(2, 2);
    std::map<std::string, std::string> renaming;
    int i = 0;
    for (const std::string& v : q.variables()) renaming[v] = "zz" + std::to_string(i++);
    ConjunctiveQuery renamed;
    for (const Atom& a : q.body) {
        Atom out = a;
        for (Term& t : out.args) t = Term::var(renaming.at(t.text));
        renamed.body.insert(out);
    }
    for (WidthNotion notion : {WidthNotion::RhoStar, WidthNotion::Ghw, WidthNotion::Fhw}) {
        const SemanticWidthReport a = semantic_width(q, notion);
        const SemanticWidthReport b = semantic_width(renamed, notion);
        CHECK(a.core_value == b.core_value);
        CHECK(a.original_value == b.original_value);
    }
}

TEST_CASE("equivalent queries share semantic widths") {
    for (int seed = 0; seed < 10; ++seed) {
        ConjunctiveQuery base = gen_random_cq(seed, 4, 3, 2);
        base.head_vars.clear();
        const ConjunctiveQuery q1 = gen_inflation(base, 2, seed);
        const ConjunctiveQuery q2 = gen_inflation(base, 3, seed + 7);
        REQUIRE(is_equivalent(q1, q2));
        for (WidthNotion notion : {WidthNotion::RhoStar, WidthNotion::Fhw}) {
            CHECK(semantic_width(q1, notion).core_value ==
                  semantic_width(q2, notion).core_value);
        }
    }
}

TEST_CASE("semantic_width rejects variable-free queries as degenerate") {
    CHECK_THROWS_AS(semantic_width(parse_query("ans() <- R(\"a\")."), WidthNotion::RhoStar),
                    DomainError);
}
