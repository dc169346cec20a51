#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <chrono>
#include <cstdlib>

#include <json.hpp>

#include "secrefine/provider.hpp"

namespace secrefine {

using nlohmann::json;

HttpProvider::HttpProvider(HttpEndpoint endpoint) : endpoint_(std::move(endpoint)) {
    if (endpoint_.base_url.empty()) throw Error("http provider requires a base_url");
}

Completion HttpProvider::complete(const CompletionRequest& request) {
    httplib::Client client(endpoint_.base_url);
    client.set_read_timeout(endpoint_.timeout_seconds, 0);
    client.set_write_timeout(endpoint_.timeout_seconds, 0);

    httplib::Headers headers;
    if (!endpoint_.api_key_env.empty()) {
        const char* key = std::getenv(endpoint_.api_key_env.c_str());
        if (!key || !*key) throw ProviderError("environment variable " + endpoint_.api_key_env + " is not set");
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    json body;
    body["model"] = request.model_name;
    body["messages"] = json::array();
    if (!request.system.empty()) body["messages"].push_back({{"role", "system"}, {"content", request.system}});
    body["messages"].push_back({{"role", "user"}, {"content", request.user}});
    for (const auto& [k, v] : request.sampling) {
        // Numeric-looking values go out as numbers so providers accept them.
        auto parsed = json::parse(v, nullptr, false);
        body[k] = parsed.is_discarded() ? json(v) : parsed;
    }

    const auto start = std::chrono::steady_clock::now();
    auto res = client.Post(endpoint_.path, headers, body.dump(), "application/json");
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (!res) throw ProviderError("http request failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw ProviderError("http status " + std::to_string(res->status) + " from " + endpoint_.base_url);

    auto reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded()) throw ProviderError("provider returned malformed JSON");
    Completion c;
    try {
        c.text = reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const std::exception&) {
        throw ProviderError("provider reply lacks choices[0].message.content");
    }
    if (reply.contains("usage")) {
        c.prompt_tokens = reply["usage"].value("prompt_tokens", 0L);
        c.completion_tokens = reply["usage"].value("completion_tokens", 0L);
    } else {
        c.prompt_tokens = approximate_tokens(request.user);
        c.completion_tokens = approximate_tokens(c.text);
    }
    c.latency = elapsed;
    return c;
}

}  // namespace secrefine
