#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <doctest.h>

#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "secrefine/io.hpp"
#include "secrefine/provider.hpp"
#include "support.hpp"

using namespace secrefine;
using nlohmann::json;
using testsupport::TempDir;

TEST_CASE("replay provider serves the fixture named by the key") {
    TempDir dir("replay");
    io::write_file_atomic(dir / "m/raw/python/scenario_1/sample_0.txt", "def f():\n    return 1\n");
    ReplayProvider p(dir.path());
    CompletionRequest req;
    req.user = "write a function";
    req.fixture_key = "m/raw/python/scenario_1/sample_0";
    auto c = p.complete(req);
    CHECK(c.text == "def f():\n    return 1\n");
    CHECK(c.completion_tokens == approximate_tokens(c.text));
    CHECK(ReplayProvider::fixture_path(dir.path(), "a/b") == dir.path() / "a/b.txt");

    req.fixture_key = "m/raw/python/scenario_1/sample_9";
    CHECK_THROWS_AS(p.complete(req), ProviderError);
}

TEST_CASE("approximate token count splits on whitespace") {
    CHECK(approximate_tokens("") == 0);
    CHECK(approximate_tokens("a b\n c\t") == 3);
}

namespace {

// Minimal chat-completions endpoint on an ephemeral local port.
struct LocalServer {
    httplib::Server server;
    int port = 0;
    std::thread thread;
    json last_body;
    std::string last_auth;
    int status = 200;
    std::string reply;

    LocalServer() {
        server.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
            last_body = json::parse(req.body);
            last_auth = req.get_header_value("Authorization");
            res.status = status;
            res.set_content(reply, "application/json");
        });
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }
    ~LocalServer() {
        server.stop();
        thread.join();
    }
    std::string url() const { return "http://127.0.0.1:" + std::to_string(port); }
};

}  // namespace

TEST_CASE("http provider speaks the chat completions shape") {
    LocalServer srv;
    srv.reply = R"J({"choices":[{"message":{"role":"assistant","content":"print(1)"}}],"usage":{"prompt_tokens":11,"completion_tokens":3}})J";
    ::setenv("SECREFINE_TEST_KEY", "sk-test-123", 1);

    HttpProvider p({srv.url(), "/v1/chat/completions", "SECREFINE_TEST_KEY", 5});
    CompletionRequest req;
    req.system = "be careful";
    req.user = "write code";
    req.model_name = "mock-model";
    req.sampling = {{"temperature", "0.2"}, {"stop", "END"}};
    auto c = p.complete(req);

    CHECK(c.text == "print(1)");
    CHECK(c.prompt_tokens == 11);
    CHECK(c.completion_tokens == 3);
    CHECK(srv.last_auth == "Bearer sk-test-123");
    CHECK(srv.last_body["model"] == "mock-model");
    REQUIRE(srv.last_body["messages"].size() == 2);
    CHECK(srv.last_body["messages"][0]["role"] == "system");
    CHECK(srv.last_body["messages"][1]["content"] == "write code");
    CHECK(srv.last_body["temperature"].is_number());
    CHECK(srv.last_body["stop"] == "END");
}

TEST_CASE("http provider failures surface as provider errors") {
    LocalServer srv;
    ::unsetenv("SECREFINE_MISSING_KEY");
    CompletionRequest req;
    req.user = "x";

    SUBCASE("missing credential variable") {
        HttpProvider p({srv.url(), "/v1/chat/completions", "SECREFINE_MISSING_KEY", 5});
        CHECK_THROWS_WITH_AS(p.complete(req), "environment variable SECREFINE_MISSING_KEY is not set", ProviderError);
    }
    SUBCASE("non-200 status") {
        srv.status = 503;
        srv.reply = "{}";
        HttpProvider p({srv.url(), "/v1/chat/completions", "", 5});
        CHECK_THROWS_AS(p.complete(req), ProviderError);
    }
    SUBCASE("reply without content") {
        srv.reply = R"({"choices":[]})";
        HttpProvider p({srv.url(), "/v1/chat/completions", "", 5});
        CHECK_THROWS_AS(p.complete(req), ProviderError);
    }
    SUBCASE("unreachable endpoint") {
        HttpProvider p({"http://127.0.0.1:1", "/v1/chat/completions", "", 1});
        CHECK_THROWS_AS(p.complete(req), ProviderError);
    }
}
