#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nomad/result.hpp"

namespace nomad {

struct ChatMessage {
    std::string speaker;  // "user" | "assistant"
    std::string text;
};

struct ModelParams {
    double temperature = 0.0;
    int max_output = 4096;
};

/// One completion request. `role_tag` names the pipeline step making the call
/// and must come from the registered set below; scripted backends route on it.
struct ModelRequest {
    std::string role_tag;
    std::string system;
    std::vector<ChatMessage> messages;
    ModelParams params;

    std::string rendered() const;  // system + messages, used by matchers/tests
};

bool is_registered_role_tag(const std::string& tag);
const std::vector<std::string>& registered_role_tags();

class ModelBackend {
public:
    virtual ~ModelBackend() = default;
    virtual Result<std::string> complete(const ModelRequest& request) = 0;
};

/// Transport-level retry wrapper. Pipeline modules handle format retries
/// themselves; this layer only re-issues failed calls.
class RetryingModelBackend : public ModelBackend {
public:
    RetryingModelBackend(std::shared_ptr<ModelBackend> inner, int attempts)
        : inner_(std::move(inner)), attempts_(attempts < 1 ? 1 : attempts) {}

    Result<std::string> complete(const ModelRequest& request) override {
        Result<std::string> last = make_error("no attempt made");
        for (int i = 0; i < attempts_; ++i) {
            last = inner_->complete(request);
            if (last.ok()) return last;
        }
        return last;
    }

private:
    std::shared_ptr<ModelBackend> inner_;
    int attempts_;
};

}  // namespace nomad
