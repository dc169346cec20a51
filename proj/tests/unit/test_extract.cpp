#include <doctest.h>

#include "secrefine/corpus.hpp"
#include "secrefine/extract.hpp"
#include "support.hpp"

using namespace secrefine;

namespace {

ScenarioVariant py_variant() {
    ScenarioVariant v;
    v.scenario_id = 10;
    v.language = Language::python;
    v.source_prefix = "from flask import Flask, request\napp = Flask(__name__)\n\n\"\"\"say hello\"\"\"\n@app.route('/hello')\n";
    v.marker = "#-copilot next line-";
    v.source_suffix = "\n\nif __name__ == '__main__':\n    app.run()\n";
    return v;
}

}  // namespace

TEST_CASE("bare completion is spliced after the marker line") {
    auto v = py_variant();
    auto code = extract_code("def hello():\n    return 'hi'\n", v);
    CHECK(code == v.source_prefix + v.marker + "\ndef hello():\n    return 'hi'\n\nif __name__ == '__main__':\n    app.run()\n");
}

TEST_CASE("full program in one fenced block is taken verbatim") {
    auto v = py_variant();
    std::string full = "from flask import Flask, request\napp = Flask(__name__)\n\n@app.route('/hello')\ndef hello():\n    return 'hi'\n";
    auto code = extract_code("Sure:\n```python\n" + full + "```\nDone.", v);
    CHECK(code == full);
    CHECK(code.find("```") == std::string::npos);
}

TEST_CASE("largest language-matching block wins") {
    auto v = py_variant();
    std::string response =
        "Install it:\n```bash\npip install flask && echo a very long shell line that is not python at all\n```\n"
        "Short:\n```python\nx = 1\n```\n"
        "Full:\n```python\ndef hello():\n    name = request.args.get('n')\n    return name\n```\n";
    auto code = extract_code(response, v);
    CHECK(code.find("def hello():") != std::string::npos);
    CHECK(code.find("pip install") == std::string::npos);
    CHECK(code.find("x = 1") == std::string::npos);
}

TEST_CASE("untagged fence is used when no block matches the language") {
    auto v = py_variant();
    auto code = extract_code("```\ndef hello():\n    return 1\n```", v);
    CHECK(code.find("def hello():") != std::string::npos);
}

TEST_CASE("responses without code are rejected") {
    auto v = py_variant();
    CHECK_THROWS_WITH_AS(extract_code("", v), "no code found", ExtractionError);
    CHECK_THROWS_WITH_AS(extract_code("I cannot help with that", v), "no code found", ExtractionError);
    CHECK_THROWS_WITH_AS(extract_code("```python\n\n```", v), "no code found", ExtractionError);
}

TEST_CASE("fenced_blocks reads info strings") {
    auto blocks = fenced_blocks("```Go {title=x}\npackage main\n```\n~~~\nplain\n~~~\n");
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].info == "go");
    CHECK(blocks[0].body == "package main\n");
    CHECK(blocks[1].info.empty());
}

TEST_CASE("bundled corpus variants splice cleanly") {
    auto corpus = load_corpus(testsupport::data_dir() / "corpus");
    for (const auto& v : corpus.variants()) {
        auto code = extract_code("x = compute(1);\n", v);
        CHECK(code.find("x = compute(1);") != std::string::npos);
        CHECK(marker_count(code) == 1);
    }
}
