#include "nomad/backends/search.hpp"

namespace nomad {

std::string time_range_name(TimeRange r) {
    switch (r) {
        case TimeRange::kNotApplicable: return "Not Applicable";
        case TimeRange::kPastDay: return "Past Day";
        case TimeRange::kPastWeek: return "Past Week";
        case TimeRange::kPastMonth: return "Past Month";
        case TimeRange::kPastYear: return "Past Year";
    }
    return "Not Applicable";
}

std::optional<TimeRange> parse_time_range(const std::string& s) {
    std::string key = normalized_key(s);
    if (key == "not applicable" || key == "none" || key.empty()) return TimeRange::kNotApplicable;
    if (key == "past day") return TimeRange::kPastDay;
    if (key == "past week") return TimeRange::kPastWeek;
    if (key == "past month") return TimeRange::kPastMonth;
    if (key == "past year") return TimeRange::kPastYear;
    return std::nullopt;
}

Result<FixtureSearchBackend> FixtureSearchBackend::load(const std::string& path) {
    auto content = read_file(path);
    if (!content.ok()) return make_error(content.error());
    Json j = Json::parse(*content, nullptr, false);
    if (j.is_discarded()) return make_error("search fixture is not valid JSON: " + path);
    return parse(j);
}

Result<FixtureSearchBackend> FixtureSearchBackend::parse(const Json& j) {
    FixtureSearchBackend backend;
    backend.today_ = j.value("today", std::string());
    if (j.contains("queries")) {
        for (auto it = j["queries"].begin(); it != j["queries"].end(); ++it) {
            std::vector<SearchResult> rows;
            for (const auto& r : it.value()) {
                rows.push_back(SearchResult{r.value("title", std::string()),
                                            r.value("snippet", std::string()),
                                            r.value("url", std::string()),
                                            r.value("date", std::string())});
            }
            backend.queries_[normalized_key(it.key())] = std::move(rows);
        }
    }
    if (j.contains("pages")) {
        for (auto it = j["pages"].begin(); it != j["pages"].end(); ++it) {
            backend.pages_[normalize_url(it.key())] = it.value().get<std::string>();
        }
    }
    return backend;
}

std::vector<SearchResult> FixtureSearchBackend::search(const std::string& query, TimeRange range) {
    auto it = queries_.find(normalized_key(query));
    if (it == queries_.end()) return {};
    if (range == TimeRange::kNotApplicable || today_.empty()) return it->second;
    int64_t today = parse_date_days(today_);
    if (today < 0) return it->second;
    int64_t window = 0;
    switch (range) {
        case TimeRange::kPastDay: window = 1; break;
        case TimeRange::kPastWeek: window = 7; break;
        case TimeRange::kPastMonth: window = 30; break;
        case TimeRange::kPastYear: window = 365; break;
        default: window = 0; break;
    }
    std::vector<SearchResult> out;
    for (const auto& row : it->second) {
        int64_t d = parse_date_days(row.date);
        if (d < 0) continue;  // undated rows fail a recency filter
        if (today - d <= window && d <= today) out.push_back(row);
    }
    return out;
}

Result<std::string> FixtureSearchBackend::fetch(const std::string& url) {
    auto it = pages_.find(normalize_url(url));
    if (it == pages_.end()) return make_error("no fixture page for url: " + url);
    return it->second;
}

}  // namespace nomad
