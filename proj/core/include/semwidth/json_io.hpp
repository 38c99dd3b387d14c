#ifndef SEMWIDTH_JSON_IO_HPP
#define SEMWIDTH_JSON_IO_HPP

#include <string>

#include "semwidth/cq.hpp"
#include "semwidth/decomposition.hpp"
#include "semwidth/edge_cover.hpp"
#include "semwidth/homomorphism.hpp"
#include "semwidth/hypergraph.hpp"
#include "semwidth/semantic.hpp"

namespace semwidth {

// Serializers emit compact JSON with sorted keys and sorted containers, so
// identical inputs always produce byte-identical output. Rationals are "p/q"
// strings ("p" when integral).

std::string to_json(const Database& db);
std::string to_json(const AnswerRelation& answer);
std::string to_json(const Hypergraph& H);
std::string to_json(const CQHomomorphism& f);
std::string to_json(const FractionalCover& cover);
std::string to_json(const FractionalIndependentSet& fis);
std::string to_json(const CoverCertificatePair& pair);
std::string to_json(const IntegralCover& cover);
std::string to_json(const TreeDecomposition& td);
std::string to_json(const WidthReport& report);
std::string to_json(const WidthResult& result);
std::string to_json(const SemanticWidthReport& report);

Database database_from_json(const std::string& text);
Hypergraph hypergraph_from_json(const std::string& text);
TreeDecomposition decomposition_from_json(const std::string& text);

// Reformats any JSON document with 2-space indentation (for CLI output).
std::string pretty_json(const std::string& text);

}  // namespace semwidth

#endif
