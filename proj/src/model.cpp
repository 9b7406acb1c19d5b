#include "nomad/backends/model.hpp"

#include <algorithm>

namespace nomad {

std::string ModelRequest::rendered() const {
    std::string out = system;
    for (const auto& m : messages) {
        out += "\n";
        out += m.text;
    }
    return out;
}

const std::vector<std::string>& registered_role_tags() {
    static const std::vector<std::string> kTags = {
        // map construction
        "concept_extraction", "concept_disambiguation", "concept_description",
        "doc_metadata", "insight_potential", "topic_tree", "top_down_tree",
        "seed_insertion",
        // hypothesis engine
        "hypothesis_generation", "relevance_isolated", "relevance_relative",
        "impact_relative",
        // explorer / verifier
        "explorer", "subclaim_decomposition", "verifier",
        // tool subagents
        "sql_generate", "sql_patterns", "sql_verify_match", "sql_analyze",
        "doc_decompose_decision", "doc_decompose", "doc_hyde", "doc_reflect",
        "doc_enhance", "doc_answer", "doc_synthesize",
        "web_strategy", "web_page_summary", "web_aggregate",
        // report generation
        "outline", "title_summary", "section", "chart_section",
        "citation_audit", "poster",
        // meta reports
        "meta_persona", "meta_audience", "meta_highlight", "meta_entities",
        "meta_clusters", "meta_assign", "meta_theme", "meta_enrich",
        "meta_condense", "meta_subject", "meta_category", "meta_overview",
        "meta_themes_section", "meta_implications", "meta_recommendations",
        "meta_metrics",
        // evaluation
        "eval_claims", "eval_fact_judge", "eval_quality", "eval_distinct",
    };
    return kTags;
}

bool is_registered_role_tag(const std::string& tag) {
    const auto& tags = registered_role_tags();
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

}  // namespace nomad
