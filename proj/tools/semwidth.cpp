// semwidth: conjunctive query analyzer.
//
// Subcommands: parse, core, hom, equiv, cover, width, semwidth, restrict,
// transfer, gen, eval. Exit codes: 0 success, 1 domain error (unsafe query,
// infeasible cover, degenerate hypergraph, caps), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "semwidth/cq.hpp"
#include "semwidth/decomposition.hpp"
#include "semwidth/edge_cover.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/generators.hpp"
#include "semwidth/homomorphism.hpp"
#include "semwidth/hypergraph.hpp"
#include "semwidth/json_io.hpp"
#include "semwidth/semantic.hpp"

namespace {

using namespace semwidth;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::pair<int, int> parse_grid_spec(const std::string& spec) {
    const auto x = spec.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == spec.size())
        throw CLI::ValidationError("--grid", "expected ROWSxCOLS, e.g. 2x3");
    try {
        return {std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--grid", "expected ROWSxCOLS, e.g. 2x3");
    }
}

// Shared -q/-f/--grid query source.
struct QueryInput {
    std::string inline_text;
    std::string file;
    std::string grid;

    void attach(CLI::App* cmd, bool with_grid = true) {
        auto* q = cmd->add_option("-q,--query", inline_text, "inline query text");
        auto* f = cmd->add_option("-f,--file", file, "read the query from a file");
        q->excludes(f);
        if (with_grid) {
            auto* g = cmd->add_option("--grid", grid, "parity grid ROWSxCOLS as the query");
            g->excludes(q);
            g->excludes(f);
        }
    }

    ConjunctiveQuery get() const {
        if (!inline_text.empty()) return parse_query(inline_text);
        if (!file.empty()) return parse_query(read_file(file));
        if (!grid.empty()) {
            const auto [rows, cols] = parse_grid_spec(grid);
            return gen_parity_grid(rows, cols);
        }
        throw DomainError("no query given; use -q, -f or --grid");
    }
};

void emit(bool as_json, const std::string& json_text, const std::string& human_text) {
    if (as_json)
        std::cout << pretty_json(json_text) << "\n";
    else
        std::cout << human_text;
}

std::string describe_mapping(const CQHomomorphism& f) {
    std::string out;
    for (const auto& [v, t] : f.mapping) {
        if (!out.empty()) out += ", ";
        out += v + " -> " + (t.is_variable() ? t.text : "\"" + t.text + "\"");
    }
    return out;
}

std::string describe_cover(const FractionalCover& cover) {
    std::string out;
    for (const auto& [e, w] : cover.weights) {
        if (w.is_zero()) continue;
        out += "  edge {";
        bool first = true;
        for (const Vertex& v : e) {
            if (!first) out += ",";
            first = false;
            out += v;
        }
        out += "}: " + w.str() + "\n";
    }
    out += "  total: " + cover.total_weight.str() + "\n";
    return out;
}

std::string describe_decomposition(const TreeDecomposition& td) {
    std::string out;
    for (const auto& [node, bag] : td.bags) {
        out += "  bag " + std::to_string(node) + ": {";
        bool first = true;
        for (const Vertex& v : bag) {
            if (!first) out += ",";
            first = false;
            out += v;
        }
        out += "}\n";
    }
    if (!td.tree_edges.empty()) {
        out += "  tree:";
        for (const auto& [a, b] : td.tree_edges)
            out += " " + std::to_string(a) + "-" + std::to_string(b);
        out += "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conjunctive query widths, cores and their semantic variants"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    AnalysisOptions options;

    // parse ------------------------------------------------------------
    auto* cmd_parse = app.add_subcommand("parse", "parse and canonicalize a query");
    auto parse_in = std::make_shared<QueryInput>();
    parse_in->attach(cmd_parse);
    cmd_parse->callback([=, &as_json]() {
        const ConjunctiveQuery q = parse_in->get();
        emit(as_json, nlohmann::json{{"query", render_query(q)}}.dump(),
             render_query(q) + "\n");
    });

    // core ---------------------------------------------------------------
    auto* cmd_core = app.add_subcommand("core", "compute the core and its retraction");
    auto core_in = std::make_shared<QueryInput>();
    core_in->attach(cmd_core);
    cmd_core->callback([=, &as_json]() {
        const ConjunctiveQuery q = core_in->get();
        const CoreResult core = compute_core(q);
        nlohmann::json out{{"core_query", render_query(core.core)},
                           {"atoms_before", q.body.size()},
                           {"atoms_after", core.core.body.size()},
                           {"retraction", nlohmann::json::parse(to_json(core.retraction))}};
        std::string human = "core: " + render_query(core.core) + "\n";
        human += "atoms: " + std::to_string(q.body.size()) + " -> " +
                 std::to_string(core.core.body.size()) + "\n";
        human += "retraction: " + describe_mapping(core.retraction) + "\n";
        emit(as_json, out.dump(), human);
    });

    // hom ----------------------------------------------------------------
    auto* cmd_hom = app.add_subcommand("hom", "search a homomorphism between two queries");
    auto hom_in = std::make_shared<QueryInput>();
    hom_in->attach(cmd_hom);
    auto hom_q2 = std::make_shared<QueryInput>();
    cmd_hom->add_option("--q2", hom_q2->inline_text, "target query text");
    cmd_hom->add_option("--f2", hom_q2->file, "target query file");
    cmd_hom->callback([=, &as_json]() {
        const ConjunctiveQuery q1 = hom_in->get();
        const ConjunctiveQuery q2 = hom_q2->get();
        const auto hom = find_homomorphism(q1, q2);
        if (hom) {
            emit(as_json,
                 nlohmann::json{{"found", true},
                                {"homomorphism", nlohmann::json::parse(to_json(*hom))}}
                     .dump(),
                 "homomorphism found: " + describe_mapping(*hom) + "\n");
        } else {
            emit(as_json, nlohmann::json{{"found", false}}.dump(), "no homomorphism\n");
        }
    });

    // equiv --------------------------------------------------------------
    auto* cmd_equiv = app.add_subcommand("equiv", "decide homomorphic equivalence");
    auto equiv_in = std::make_shared<QueryInput>();
    equiv_in->attach(cmd_equiv);
    auto equiv_q2 = std::make_shared<QueryInput>();
    cmd_equiv->add_option("--q2", equiv_q2->inline_text, "second query text");
    cmd_equiv->add_option("--f2", equiv_q2->file, "second query file");
    cmd_equiv->callback([=, &as_json]() {
        const bool eq = is_equivalent(equiv_in->get(), equiv_q2->get());
        emit(as_json, nlohmann::json{{"equivalent", eq}}.dump(),
             eq ? "equivalent\n" : "not equivalent\n");
    });

    // cover ----------------------------------------------------------------
    auto* cmd_cover = app.add_subcommand("cover", "optimal fractional edge cover with dual");
    auto cover_in = std::make_shared<QueryInput>();
    cover_in->attach(cmd_cover);
    auto cover_integral = std::make_shared<bool>(false);
    cmd_cover->add_flag("--integral", *cover_integral, "also report the integral cover");
    cmd_cover->callback([=, &as_json]() {
        const Hypergraph H = hypergraph_of(cover_in->get());
        const CoverCertificatePair pair = rho_star(H);
        nlohmann::json out = nlohmann::json::parse(to_json(pair));
        std::string human = "rho* = " + pair.primal.total_weight.str() + "\n";
        human += describe_cover(pair.primal);
        human += "dual total: " + pair.dual.total_weight.str() + "\n";
        if (*cover_integral) {
            const IntegralCover integral = rho_integral(H);
            out["integral"] = nlohmann::json::parse(to_json(integral));
            human += "rho = " + std::to_string(integral.count) + "\n";
        }
        emit(as_json, out.dump(), human);
    });

    // width ----------------------------------------------------------------
    auto* cmd_width = app.add_subcommand("width", "width of the query itself");
    auto width_in = std::make_shared<QueryInput>();
    width_in->attach(cmd_width);
    auto width_notion = std::make_shared<std::string>("fhw");
    cmd_width->add_option("--notion", *width_notion,
                          "one of rho_star, ghw, fhw, adw_lower, subw_lower");
    cmd_width->add_option("--samples", options.samples, "sample count for lower bounds");
    cmd_width->add_option("--seed", options.seed, "sampling seed");
    cmd_width->add_option("--cap", options.vertex_cap, "decomposition vertex cap");
    cmd_width->callback([=, &as_json, &options]() {
        const WidthNotion notion = notion_from_name(*width_notion);
        const Hypergraph H = hypergraph_of(width_in->get());
        const WidthResult result = compute_width(H, notion, options);
        std::string human = notion_name(notion) + " = " + width_value(result).str() + "\n";
        if (const auto* report = std::get_if<WidthReport>(&result))
            human += describe_decomposition(report->decomposition);
        emit(as_json, to_json(result), human);
    });

    // semwidth ---------------------------------------------------------------
    auto* cmd_sem = app.add_subcommand("semwidth", "semantic width via the core");
    auto sem_in = std::make_shared<QueryInput>();
    sem_in->attach(cmd_sem);
    auto sem_notion = std::make_shared<std::string>("fhw");
    auto sem_k = std::make_shared<std::string>();
    cmd_sem->add_option("--notion", *sem_notion,
                        "one of rho_star, ghw, fhw, adw_lower, subw_lower");
    cmd_sem->add_option("--k", *sem_k, "also decide reformulability at threshold p/q");
    cmd_sem->add_option("--samples", options.samples, "sample count for lower bounds");
    cmd_sem->add_option("--seed", options.seed, "sampling seed");
    cmd_sem->add_option("--cap", options.vertex_cap, "decomposition vertex cap");
    cmd_sem->callback([=, &as_json, &options]() {
        const WidthNotion notion = notion_from_name(*sem_notion);
        const ConjunctiveQuery q = sem_in->get();
        const SemanticWidthReport report = semantic_width(q, notion, options);
        nlohmann::json out = nlohmann::json::parse(to_json(report));
        std::string human = "core: " + render_query(report.core.core) + "\n";
        human += "original " + notion_name(notion) + " = " + report.original_value.str() +
                 ", semantic " + notion_name(notion) + " = " + report.core_value.str() + " (" +
                 report.exactness + ")\n";
        if (!sem_k->empty()) {
            const Rational k = Rational::parse(*sem_k);
            const bool decision = reformulation_decision(q, notion, k, options);
            out["reformulable_at_k"] = decision;
            out["k"] = k.str();
            human += "reformulation with " + notion_name(notion) + " <= " + k.str() + ": " +
                     (decision ? "yes" : "no") + "\n";
        }
        emit(as_json, out.dump(), human);
    });

    // restrict -----------------------------------------------------------------
    auto* cmd_restrict =
        app.add_subcommand("restrict", "restrict a decomposition of q to its core");
    auto restrict_in = std::make_shared<QueryInput>();
    restrict_in->attach(cmd_restrict);
    auto restrict_td = std::make_shared<std::string>();
    cmd_restrict->add_option("--td", *restrict_td,
                             "decomposition JSON file (default: optimal fhw decomposition)");
    cmd_restrict->add_option("--cap", options.vertex_cap, "decomposition vertex cap");
    cmd_restrict->callback([=, &as_json, &options]() {
        const ConjunctiveQuery q = restrict_in->get();
        const Hypergraph H = hypergraph_of(q);
        const TreeDecomposition td = restrict_td->empty()
                                         ? fhw_exact(H, options.vertex_cap).decomposition
                                         : decomposition_from_json(read_file(*restrict_td));
        if (auto reason = validate_decomposition(H, td))
            throw DomainError("invalid decomposition: " + *reason);
        const CoreResult core = compute_core(q);
        const Hypergraph Hc = hypergraph_of(core.core);
        const TreeDecomposition restricted = restrict_to_core(td, Hc.vertices());
        const bool valid = is_valid_decomposition(Hc, restricted);
        nlohmann::json out{{"core_query", render_query(core.core)},
                           {"original", nlohmann::json::parse(to_json(td))},
                           {"restricted", nlohmann::json::parse(to_json(restricted))},
                           {"valid_for_core", valid}};
        std::string human = "core: " + render_query(core.core) + "\n";
        human += "original decomposition:\n" + describe_decomposition(td);
        human += "restricted decomposition:\n" + describe_decomposition(restricted);
        human += std::string("valid for the core hypergraph: ") + (valid ? "yes" : "no") + "\n";
        emit(as_json, out.dump(), human);
    });

    // transfer -----------------------------------------------------------------
    auto* cmd_transfer =
        app.add_subcommand("transfer", "transfer the optimal cover along the core retraction");
    auto transfer_in = std::make_shared<QueryInput>();
    transfer_in->attach(cmd_transfer);
    cmd_transfer->callback([=, &as_json]() {
        const ConjunctiveQuery q = transfer_in->get();
        const CoreResult core = compute_core(q);
        const Hypergraph G = hypergraph_of(q);
        const Hypergraph H = hypergraph_of(core.core);
        const VertexMap f = to_vertex_map(core.retraction);
        const FractionalCover x = rho_star(G).primal;
        const FractionalCover moved = transfer_cover(f, G, H, x);
        nlohmann::json out{{"cover", nlohmann::json::parse(to_json(x))},
                           {"transferred", nlohmann::json::parse(to_json(moved))},
                           {"weights_equal", x.total_weight == moved.total_weight}};
        std::string human = "cover of the query hypergraph:\n" + describe_cover(x);
        human += "transferred to the core hypergraph:\n" + describe_cover(moved);
        emit(as_json, out.dump(), human);
    });

    // gen ------------------------------------------------------------------
    auto* cmd_gen = app.add_subcommand("gen", "generate queries: grids, random, inflations");
    auto gen_grid = std::make_shared<std::string>();
    auto gen_random = std::make_shared<bool>(false);
    auto gen_inflate = std::make_shared<int>(-1);
    auto gen_base = std::make_shared<QueryInput>();
    auto gen_vars = std::make_shared<int>(5);
    auto gen_atoms = std::make_shared<int>(4);
    auto gen_arity = std::make_shared<int>(2);
    auto gen_seed = std::make_shared<std::uint64_t>(0);
    cmd_gen->add_option("--grid", *gen_grid, "parity grid ROWSxCOLS");
    cmd_gen->add_flag("--random", *gen_random, "random query");
    cmd_gen->add_option("--inflate", *gen_inflate, "equivalent inflation of -q/-f by N steps");
    cmd_gen->add_option("-q,--query", gen_base->inline_text, "base query for --inflate");
    cmd_gen->add_option("-f,--file", gen_base->file, "base query file for --inflate");
    cmd_gen->add_option("--vars", *gen_vars, "random: variable pool size");
    cmd_gen->add_option("--atoms", *gen_atoms, "random: atom count");
    cmd_gen->add_option("--arity", *gen_arity, "random: maximum arity");
    cmd_gen->add_option("--seed", *gen_seed, "random/inflation seed");
    cmd_gen->callback([=, &as_json]() {
        const int modes = (!gen_grid->empty() ? 1 : 0) + (*gen_random ? 1 : 0) +
                          (*gen_inflate >= 0 ? 1 : 0);
        if (modes != 1)
            throw CLI::ValidationError("gen", "choose exactly one of --grid, --random, --inflate");
        ConjunctiveQuery q;
        if (!gen_grid->empty()) {
            const auto [rows, cols] = parse_grid_spec(*gen_grid);
            q = gen_parity_grid(rows, cols);
        } else if (*gen_random) {
            q = gen_random_cq(*gen_seed, *gen_vars, *gen_atoms, *gen_arity);
        } else {
            q = gen_inflation(gen_base->get(), *gen_inflate, *gen_seed);
        }
        emit(as_json, nlohmann::json{{"query", render_query(q)}}.dump(),
             render_query(q) + "\n");
    });

    // eval -----------------------------------------------------------------
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a query over a JSON database");
    auto eval_in = std::make_shared<QueryInput>();
    eval_in->attach(cmd_eval);
    auto eval_db = std::make_shared<std::string>();
    cmd_eval->add_option("--db", *eval_db, "database JSON file")->required();
    cmd_eval->callback([=, &as_json]() {
        const ConjunctiveQuery q = eval_in->get();
        const AnswerRelation answer = evaluate(q, database_from_json(read_file(*eval_db)));
        std::string human;
        for (const auto& tuple : answer.tuples) {
            human += "(";
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i) human += ",";
                human += tuple[i];
            }
            human += ")\n";
        }
        human += std::to_string(answer.tuples.size()) + " tuple(s)\n";
        emit(as_json, to_json(answer), human);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
