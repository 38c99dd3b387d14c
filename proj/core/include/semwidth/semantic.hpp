#ifndef SEMWIDTH_SEMANTIC_HPP
#define SEMWIDTH_SEMANTIC_HPP

#include <string>
#include <variant>

#include "semwidth/decomposition.hpp"
#include "semwidth/homomorphism.hpp"

namespace semwidth {

// Exact notions carry full certificates; the adaptive/submodular entries are
// certified lower bounds over sampled function families, never exact values.
enum class WidthNotion { RhoStar, Ghw, Fhw, AdwLower, SubwLower };

bool is_exact_notion(WidthNotion notion);
std::string notion_name(WidthNotion notion);
WidthNotion notion_from_name(const std::string& name);

struct AnalysisOptions {
    int vertex_cap = kDefaultVertexCap;
    int samples = 20;
    std::uint64_t seed = 0;
};

// rho_star -> CoverCertificatePair; ghw/fhw -> WidthReport;
// adw_lower/subw_lower -> bare bound value.
using WidthResult = std::variant<CoverCertificatePair, WidthReport, Rational>;

Rational width_value(const WidthResult& result);

// The notion applied to one hypergraph (no core involved).
WidthResult compute_width(const Hypergraph& H, WidthNotion notion,
                          const AnalysisOptions& options = {});

struct SemanticWidthReport {
    WidthNotion notion;
    CoreResult core;
    WidthResult core_width;
    WidthResult original_width;
    Rational core_value;
    Rational original_value;
    std::string exactness;  // "exact" or "lower_bound"
};

// Computes Core(q), then the notion's width of the core (the semantic width
// for exact notions) next to the input query's own width.
SemanticWidthReport semantic_width(const ConjunctiveQuery& q, WidthNotion notion,
                                   const AnalysisOptions& options = {});

// True iff some query equivalent to q has width <= k; decided as
// width(Core(q)) <= k. Exact notions only; lower-bound notions are rejected
// because the reduction is not sound for them.
bool reformulation_decision(const ConjunctiveQuery& q, WidthNotion notion, const Rational& k,
                            const AnalysisOptions& options = {});

// Property-test entry point: width(Core(q)) <= width(q), exact notions only.
bool verify_core_minimality(const ConjunctiveQuery& q, WidthNotion notion,
                            const AnalysisOptions& options = {});

}  // namespace semwidth

#endif
