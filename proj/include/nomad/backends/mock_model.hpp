#pragma once

#include <mutex>
#include <regex>
#include <string>
#include <vector>

#include "nomad/backends/model.hpp"
#include "nomad/text_util.hpp"

namespace nomad {

/// One scripted response. An empty role_tag or match field matches anything;
/// repeat == 0 means unlimited uses.
struct MockRule {
    std::string role_tag;
    std::string match;        // substring against the rendered request
    std::string match_regex;  // alternative regex matcher
    std::string response;
    int repeat = 1;
};

struct MockScript {
    std::vector<MockRule> rules;

    static Result<MockScript> parse(const Json& j);
    static Result<MockScript> load(const std::string& path);
};

/// Deterministic model backend driven by a MockScript. The first rule that
/// matches (role tag, then message matcher) and still has uses left fires.
/// No matching rule -> explicit mock-exhausted error. Shared state is
/// mutex-guarded so concurrent callers stay safe.
class ScriptedModelBackend : public ModelBackend {
public:
    explicit ScriptedModelBackend(MockScript script);

    Result<std::string> complete(const ModelRequest& request) override;

    /// Requests seen so far, for assertions on prompt contents.
    std::vector<ModelRequest> request_log() const;

private:
    mutable std::mutex mutex_;
    MockScript script_;
    std::vector<int> uses_;
    std::vector<ModelRequest> log_;
};

}  // namespace nomad
