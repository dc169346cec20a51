#include <doctest.h>

#include "secrefine/io.hpp"
#include "secrefine/manifest.hpp"
#include "support.hpp"

using namespace secrefine;
using testsupport::TempDir;

TEST_CASE("missing manifest loads empty") {
    TempDir dir("mf");
    auto m = RunManifest::load(dir / "manifest.json");
    CHECK(m.stages.empty());
    CHECK(m.tool_version == kToolVersion);
}

TEST_CASE("manifest round-trip") {
    TempDir dir("mf");
    RunManifest m;
    m.config_digest = "abc";
    m.input_digests = {{"corpus", "d1"}, {"rules", "d2"}};
    m.stages["analyze"] = {"in", "out", "2025-01-01T00:00:00Z", {{"samples", 3}}};
    m.cells = {{"m/raw/python/scenario_1", "complete"}};
    m.sampling = {{"temperature", "0.2"}};
    m.created_at = m.updated_at = utc_timestamp();
    m.save(dir / "manifest.json");
    auto back = RunManifest::load(dir / "manifest.json");
    CHECK(back.to_json() == m.to_json());
    CHECK(back.stages.at("analyze").details["samples"] == 3);
}

TEST_CASE("corrupt manifest is an error") {
    TempDir dir("mf");
    io::write_file_atomic(dir / "manifest.json", "{ nope");
    CHECK_THROWS_AS(RunManifest::load(dir / "manifest.json"), ManifestError);
}

TEST_CASE("path digests") {
    TempDir dir("mf");
    CHECK(path_digest(dir / "none") == "absent");
    io::write_file_atomic(dir / "a/x.txt", "1");
    auto d1 = path_digest(dir / "a");
    CHECK(path_digest(dir / "a/x.txt") == io::sha256_hex("1"));
    io::write_file_atomic(dir / "a/x.txt", "2");
    CHECK(path_digest(dir / "a") != d1);
    auto ts = utc_timestamp();
    CHECK(ts.size() == 20);
    CHECK(ts.back() == 'Z');
}
