#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nomad/result.hpp"

#include <json.hpp>

namespace nomad {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s);
std::string to_lower(const std::string& s);
bool iequals(const std::string& a, const std::string& b);
std::vector<std::string> split_lines(const std::string& s);
std::vector<std::string> split_whitespace(const std::string& s);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
size_t word_count(const std::string& s);
std::string truncate_words(const std::string& s, size_t max_words);

/// Case-folded key with whitespace collapsed, used for surface-form merging
/// and fixture lookups.
std::string normalized_key(const std::string& s);

/// Lowercase alnum-and-dash identifier derived from free text.
std::string slugify(const std::string& s, size_t max_len = 40);

/// URL normalization for dedup: lowercased scheme/host, trailing slash and
/// fragment dropped.
std::string normalize_url(const std::string& url);

/// Splits free text into sentences on terminal punctuation followed by
/// whitespace and an uppercase letter or digit. A small abbreviation allowlist
/// (e.g. "Dr.", "U.S.", "et al.") suppresses false splits.
std::vector<std::string> split_sentences(const std::string& text);

/// Extracts the first JSON value from model output. Handles ```json fences,
/// bare JSON, and JSON embedded in surrounding prose.
Result<Json> extract_json(const std::string& text);

/// Extracts every top-level JSON value found in the text, in order.
std::vector<Json> extract_json_values(const std::string& text);

/// Content of <tag>...</tag>. Errors name the missing tag.
Result<std::string> extract_tag(const std::string& text, const std::string& tag);
std::vector<std::string> extract_all_tags(const std::string& text, const std::string& tag);

/// Inline citation keys, e.g. "[WEB_SEARCH_3]" -> "WEB_SEARCH_3". Keys match
/// [A-Z_]+_[0-9]+ inside square brackets.
std::vector<std::string> extract_citation_keys(const std::string& text);
std::string strip_citation_keys(const std::string& text);

/// Whitespace-token count scaled by `factor`; the token-budget approximation
/// used by meta-report enrichment.
double approx_tokens(const std::string& text, double factor = 1.0);

uint64_t fnv1a(const std::string& s);

/// Days since civil epoch for "YYYY-MM-DD"; -1 on malformed input.
int64_t parse_date_days(const std::string& iso_date);

Result<std::string> read_file(const std::string& path);
Status write_file(const std::string& path, const std::string& content);

}  // namespace nomad
