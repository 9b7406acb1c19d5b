#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nomad/result.hpp"
#include "nomad/text_util.hpp"

namespace nomad {

enum class TimeRange { kNotApplicable, kPastDay, kPastWeek, kPastMonth, kPastYear };

std::string time_range_name(TimeRange r);
std::optional<TimeRange> parse_time_range(const std::string& s);

struct SearchResult {
    std::string title;
    std::string snippet;
    std::string url;
    std::string date;  // YYYY-MM-DD, may be empty
};

class SearchBackend {
public:
    virtual ~SearchBackend() = default;
    virtual std::vector<SearchResult> search(const std::string& query, TimeRange range) = 0;
};

class PageFetcher {
public:
    virtual ~PageFetcher() = default;
    virtual Result<std::string> fetch(const std::string& url) = 0;
};

/// Replays searches and page fetches from a fixture file:
///   { "today": "YYYY-MM-DD",
///     "queries": { "<normalized query>": [ {title, snippet, url, date}, ... ] },
///     "pages":   { "<normalized url>": "page text" } }
/// Unknown queries return empty result lists. Time-range filters drop rows
/// whose date falls outside the window ending at `today`.
class FixtureSearchBackend : public SearchBackend, public PageFetcher {
public:
    static Result<FixtureSearchBackend> load(const std::string& path);
    static Result<FixtureSearchBackend> parse(const Json& j);

    std::vector<SearchResult> search(const std::string& query, TimeRange range) override;
    Result<std::string> fetch(const std::string& url) override;

private:
    std::map<std::string, std::vector<SearchResult>> queries_;
    std::map<std::string, std::string> pages_;
    std::string today_;
};

}  // namespace nomad
