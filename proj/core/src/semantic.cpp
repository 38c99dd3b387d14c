#include "semwidth/semantic.hpp"

#include "semwidth/errors.hpp"

namespace semwidth {

bool is_exact_notion(WidthNotion notion) {
    return notion == WidthNotion::RhoStar || notion == WidthNotion::Ghw ||
           notion == WidthNotion::Fhw;
}

std::string notion_name(WidthNotion notion) {
    switch (notion) {
        case WidthNotion::RhoStar: return "rho_star";
        case WidthNotion::Ghw: return "ghw";
        case WidthNotion::Fhw: return "fhw";
        case WidthNotion::AdwLower: return "adw_lower";
        case WidthNotion::SubwLower: return "subw_lower";
    }
    throw DomainError("unknown width notion");
}

WidthNotion notion_from_name(const std::string& name) {
    if (name == "rho_star") return WidthNotion::RhoStar;
    if (name == "ghw") return WidthNotion::Ghw;
    if (name == "fhw") return WidthNotion::Fhw;
    if (name == "adw_lower") return WidthNotion::AdwLower;
    if (name == "subw_lower") return WidthNotion::SubwLower;
    throw DomainError("unknown width notion: '" + name + "'");
}

Rational width_value(const WidthResult& result) {
    if (const auto* pair = std::get_if<CoverCertificatePair>(&result))
        return pair->primal.total_weight;
    if (const auto* report = std::get_if<WidthReport>(&result)) return report->value;
    return std::get<Rational>(result);
}

WidthResult compute_width(const Hypergraph& H, WidthNotion notion,
                          const AnalysisOptions& options) {
    switch (notion) {
        case WidthNotion::RhoStar: return rho_star(H);
        case WidthNotion::Ghw: return ghw_exact(H, options.vertex_cap);
        case WidthNotion::Fhw: return fhw_exact(H, options.vertex_cap);
        case WidthNotion::AdwLower:
            return sampled_lower_bound_width(H, FunctionFamily::Modular, options.samples,
                                             options.seed, options.vertex_cap);
        case WidthNotion::SubwLower:
            return sampled_lower_bound_width(H, FunctionFamily::Submodular, options.samples,
                                             options.seed, options.vertex_cap);
    }
    throw DomainError("unknown width notion");
}

SemanticWidthReport semantic_width(const ConjunctiveQuery& q, WidthNotion notion,
                                   const AnalysisOptions& options) {
    validate_query(q);
    SemanticWidthReport report;
    report.notion = notion;
    report.core = compute_core(q);
    report.exactness = is_exact_notion(notion) ? "exact" : "lower_bound";

    const Hypergraph original = hypergraph_of(q);
    const Hypergraph core = hypergraph_of(report.core.core);
    report.original_width = compute_width(original, notion, options);
    report.core_width = compute_width(core, notion, options);
    report.original_value = width_value(report.original_width);
    report.core_value = width_value(report.core_width);
    return report;
}

bool reformulation_decision(const ConjunctiveQuery& q, WidthNotion notion, const Rational& k,
                            const AnalysisOptions& options) {
    if (!is_exact_notion(notion))
        throw DomainError("reformulation decision is only sound for exact notions");
    validate_query(q);
    const CoreResult core = compute_core(q);
    const Hypergraph H = hypergraph_of(core.core);
    return width_value(compute_width(H, notion, options)) <= k;
}

bool verify_core_minimality(const ConjunctiveQuery& q, WidthNotion notion,
                            const AnalysisOptions& options) {
    if (!is_exact_notion(notion))
        throw DomainError("core minimality verification requires an exact notion");
    const SemanticWidthReport report = semantic_width(q, notion, options);
    return report.core_value <= report.original_value;
}

}  // namespace semwidth
