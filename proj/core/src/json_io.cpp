#include "semwidth/json_io.hpp"

#include <json.hpp>

#include "semwidth/errors.hpp"

namespace semwidth {

namespace {

using nlohmann::json;

json jarray_of_set(const VertexSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

json jedges(const EdgeSet& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(jarray_of_set(e));
    return out;
}

json jdatabase(const Database& db) {
    json relations = json::object();
    for (const auto& [name, tuples] : db.relations) {
        json rows = json::array();
        for (const auto& tuple : tuples) rows.push_back(tuple);
        relations[name] = std::move(rows);
    }
    return json{{"relations", std::move(relations)}};
}

json janswer(const AnswerRelation& answer) {
    json tuples = json::array();
    for (const auto& tuple : answer.tuples) tuples.push_back(tuple);
    return json{{"attributes", answer.attributes}, {"tuples", std::move(tuples)}};
}

json jhypergraph(const Hypergraph& H) {
    return json{{"vertices", jarray_of_set(H.vertices())}, {"edges", jedges(H.edges())}};
}

json jhomomorphism(const CQHomomorphism& f) {
    json mapping = json::object();
    for (const auto& [v, t] : f.mapping) {
        if (t.is_variable())
            mapping[v] = json{{"var", t.text}};
        else
            mapping[v] = json{{"const", t.text}};
    }
    return json{{"mapping", std::move(mapping)}};
}

json jcover(const FractionalCover& cover) {
    json weights = json::array();
    for (const auto& [e, w] : cover.weights)
        weights.push_back(json{{"edge", jarray_of_set(e)}, {"w", w.str()}});
    return json{{"weights", std::move(weights)}, {"total", cover.total_weight.str()}};
}

json jfis(const FractionalIndependentSet& fis) {
    json weights = json::array();
    for (const auto& [v, w] : fis.weights)
        weights.push_back(json{{"vertex", v}, {"w", w.str()}});
    return json{{"vertex_weights", std::move(weights)}, {"total", fis.total_weight.str()}};
}

json jpair(const CoverCertificatePair& pair) {
    return json{{"primal", jcover(pair.primal)}, {"dual", jfis(pair.dual)}};
}

json jintegral(const IntegralCover& cover) {
    return json{{"count", cover.count}, {"edges", jedges(cover.edges)}};
}

json jdecomposition(const TreeDecomposition& td) {
    json edges = json::array();
    for (const auto& [a, b] : td.tree_edges) edges.push_back(json::array({a, b}));
    json bags = json::object();
    for (const auto& [u, bag] : td.bags) bags[std::to_string(u)] = jarray_of_set(bag);
    return json{{"nodes", std::vector<int>(td.nodes.begin(), td.nodes.end())},
                {"tree_edges", std::move(edges)},
                {"bags", std::move(bags)}};
}

json jcertificate(const BagCertificate& cert) {
    if (const auto* pair = std::get_if<CoverCertificatePair>(&cert)) return jpair(*pair);
    if (const auto* integral = std::get_if<IntegralCover>(&cert)) return jintegral(*integral);
    return json{{"value", std::get<Rational>(cert).str()}};
}

json jwidth_report(const WidthReport& report) {
    json certs = json::object();
    for (const auto& [node, cert] : report.per_bag_certificates)
        certs[std::to_string(node)] = jcertificate(cert);
    return json{{"value", report.value.str()},
                {"decomposition", jdecomposition(report.decomposition)},
                {"certificates", std::move(certs)}};
}

json jwidth_result(const WidthResult& result) {
    if (const auto* pair = std::get_if<CoverCertificatePair>(&result)) return jpair(*pair);
    if (const auto* report = std::get_if<WidthReport>(&result)) return jwidth_report(*report);
    return json{{"value", std::get<Rational>(result).str()}};
}

json jsemantic(const SemanticWidthReport& report) {
    return json{{"notion", notion_name(report.notion)},
                {"exactness", report.exactness},
                {"core_query", render_query(report.core.core)},
                {"retraction", jhomomorphism(report.core.retraction)},
                {"core_value", report.core_value.str()},
                {"original_value", report.original_value.str()},
                {"core_width", jwidth_result(report.core_width)},
                {"original_width", jwidth_result(report.original_width)}};
}

json parse_json(const std::string& text) {
    json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) throw DomainError("malformed JSON document");
    return parsed;
}

}  // namespace

std::string to_json(const Database& db) { return jdatabase(db).dump(); }
std::string to_json(const AnswerRelation& answer) { return janswer(answer).dump(); }
std::string to_json(const Hypergraph& H) { return jhypergraph(H).dump(); }
std::string to_json(const CQHomomorphism& f) { return jhomomorphism(f).dump(); }
std::string to_json(const FractionalCover& cover) { return jcover(cover).dump(); }
std::string to_json(const FractionalIndependentSet& fis) { return jfis(fis).dump(); }
std::string to_json(const CoverCertificatePair& pair) { return jpair(pair).dump(); }
std::string to_json(const IntegralCover& cover) { return jintegral(cover).dump(); }
std::string to_json(const TreeDecomposition& td) { return jdecomposition(td).dump(); }
std::string to_json(const WidthReport& report) { return jwidth_report(report).dump(); }
std::string to_json(const WidthResult& result) { return jwidth_result(result).dump(); }
std::string to_json(const SemanticWidthReport& report) { return jsemantic(report).dump(); }

Database database_from_json(const std::string& text) {
    const json parsed = parse_json(text);
    if (!parsed.is_object() || !parsed.contains("relations") || !parsed["relations"].is_object())
        throw DomainError("database JSON needs a 'relations' object");
    Database db;
    for (const auto& [name, rows] : parsed["relations"].items()) {
        if (!rows.is_array()) throw DomainError("relation '" + name + "' must be an array");
        auto& tuples = db.relations[name];
        std::size_t arity = 0;
        for (const auto& row : rows) {
            if (!row.is_array()) throw DomainError("tuple must be an array of strings");
            std::vector<std::string> tuple;
            for (const auto& value : row) {
                if (!value.is_string()) throw DomainError("tuple values must be strings");
                tuple.push_back(value.get<std::string>());
            }
            if (tuples.empty())
                arity = tuple.size();
            else if (tuple.size() != arity)
                throw DomainError("database relation '" + name + "' has mixed arities");
            tuples.insert(std::move(tuple));
        }
    }
    return db;
}

Hypergraph hypergraph_from_json(const std::string& text) {
    const json parsed = parse_json(text);
    if (!parsed.is_object() || !parsed.contains("vertices") || !parsed.contains("edges"))
        throw DomainError("hypergraph JSON needs 'vertices' and 'edges'");
    VertexSet vertices;
    for (const auto& v : parsed["vertices"]) {
        if (!v.is_string()) throw DomainError("vertices must be strings");
        vertices.insert(v.get<std::string>());
    }
    EdgeSet edges;
    for (const auto& e : parsed["edges"]) {
        if (!e.is_array()) throw DomainError("edges must be arrays of vertices");
        Edge edge;
        for (const auto& v : e) {
            if (!v.is_string()) throw DomainError("edge vertices must be strings");
            edge.insert(v.get<std::string>());
        }
        edges.insert(std::move(edge));
    }
    return Hypergraph(std::move(vertices), std::move(edges));
}

TreeDecomposition decomposition_from_json(const std::string& text) {
    const json parsed = parse_json(text);
    if (!parsed.is_object() || !parsed.contains("nodes") || !parsed.contains("tree_edges") ||
        !parsed.contains("bags"))
        throw DomainError("decomposition JSON needs 'nodes', 'tree_edges' and 'bags'");
    TreeDecomposition td;
    for (const auto& n : parsed["nodes"]) {
        if (!n.is_number_integer()) throw DomainError("nodes must be integers");
        td.nodes.insert(n.get<int>());
    }
    for (const auto& e : parsed["tree_edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw DomainError("tree edges must be integer pairs");
        const int a = e[0].get<int>();
        const int b = e[1].get<int>();
        td.tree_edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (const auto& [key, bag] : parsed["bags"].items()) {
        int node = 0;
        try {
            node = std::stoi(key);
        } catch (const std::exception&) {
            throw DomainError("bag keys must be node ids");
        }
        VertexSet vertices;
        for (const auto& v : bag) {
            if (!v.is_string()) throw DomainError("bag vertices must be strings");
            vertices.insert(v.get<std::string>());
        }
        td.bags[node] = std::move(vertices);
    }
    return td;
}

std::string pretty_json(const std::string& text) { return parse_json(text).dump(2); }

}  // namespace semwidth
