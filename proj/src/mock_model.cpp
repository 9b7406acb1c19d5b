#include "nomad/backends/mock_model.hpp"

namespace nomad {

Result<MockScript> MockScript::parse(const Json& j) {
    if (!j.is_object() || !j.contains("rules") || !j["rules"].is_array()) {
        return make_error("mock script must be an object with a \"rules\" array");
    }
    MockScript script;
    for (const auto& r : j["rules"]) {
        if (!r.is_object()) return make_error("mock rule must be an object");
        MockRule rule;
        rule.role_tag = r.value("role_tag", std::string());
        rule.match = r.value("match", std::string());
        rule.match_regex = r.value("match_regex", std::string());
        rule.repeat = r.value("repeat", 1);
        if (!rule.role_tag.empty() && !is_registered_role_tag(rule.role_tag)) {
            return make_error("mock rule references unknown role_tag: " + rule.role_tag);
        }
        if (!r.contains("response")) return make_error("mock rule missing \"response\"");
        if (r["response"].is_string()) {
            rule.response = r["response"].get<std::string>();
        } else {
            rule.response = r["response"].dump();
        }
        script.rules.push_back(std::move(rule));
    }
    return script;
}

Result<MockScript> MockScript::load(const std::string& path) {
    auto content = read_file(path);
    if (!content.ok()) return make_error(content.error());
    Json j = Json::parse(*content, nullptr, false);
    if (j.is_discarded()) return make_error("mock script is not valid JSON: " + path);
    return parse(j);
}

ScriptedModelBackend::ScriptedModelBackend(MockScript script) : script_(std::move(script)) {
    uses_.assign(script_.rules.size(), 0);
}

Result<std::string> ScriptedModelBackend::complete(const ModelRequest& request) {
    std::lock_guard<std::mutex> lock(mutex_);
    log_.push_back(request);
    if (!is_registered_role_tag(request.role_tag)) {
        return make_error("unregistered role_tag in model request: " + request.role_tag);
    }
    const std::string haystack = request.rendered();
    for (size_t i = 0; i < script_.rules.size(); ++i) {
        const MockRule& rule = script_.rules[i];
        if (rule.repeat != 0 && uses_[i] >= rule.repeat) continue;
        if (!rule.role_tag.empty() && rule.role_tag != request.role_tag) continue;
        if (!rule.match.empty() && haystack.find(rule.match) == std::string::npos) continue;
        if (!rule.match_regex.empty() &&
            !std::regex_search(haystack, std::regex(rule.match_regex))) {
            continue;
        }
        ++uses_[i];
        return rule.response;
    }
    std::string preview = haystack.substr(0, 160);
    return make_error("mock script exhausted: no rule for role_tag=" + request.role_tag +
                      " message=\"" + preview + "\"");
}

std::vector<ModelRequest> ScriptedModelBackend::request_log() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return log_;
}

}  // namespace nomad
