#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "secrefine/types.hpp"

namespace secrefine {

struct CompletionRequest {
    std::string system;
    std::string user;
    std::string model_name;
    std::map<std::string, std::string> sampling;  // passed through verbatim; empty = provider defaults
    // Provenance used by replay providers to find the canned response ("<key>" or "<model>/meta_prompt").
    std::string fixture_key;
};

struct Completion {
    std::string text;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    std::chrono::milliseconds latency{0};
    std::optional<long> memory_bytes;  // only for locally hosted providers
};

// Transient or exhausted provider failure; the orchestrator retries these.
class ProviderError : public Error {
public:
    using Error::Error;
};

class Provider {
public:
    virtual ~Provider() = default;
    virtual Completion complete(const CompletionRequest& request) = 0;
};

// Serves responses from a fixture directory: `<fixture_key>.txt` relative to the root.
class ReplayProvider : public Provider {
public:
    explicit ReplayProvider(std::filesystem::path root);
    Completion complete(const CompletionRequest& request) override;

    static std::filesystem::path fixture_path(const std::filesystem::path& root, const std::string& key);

private:
    std::filesystem::path root_;
};

struct HttpEndpoint {
    std::string base_url;  // e.g. "https://api.openai.com" or "http://127.0.0.1:8000"
    std::string path = "/v1/chat/completions";
    std::string api_key_env;  // name of the environment variable holding the key; never the key itself
    int timeout_seconds = 120;
};

// OpenAI-compatible chat completions endpoint.
class HttpProvider : public Provider {
public:
    explicit HttpProvider(HttpEndpoint endpoint);
    Completion complete(const CompletionRequest& request) override;

private:
    HttpEndpoint endpoint_;
};

// Rough whitespace token count used when a provider does not report usage.
long approximate_tokens(std::string_view text);

}  // namespace secrefine
