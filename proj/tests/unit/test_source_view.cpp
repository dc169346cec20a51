#include <doctest.h>

#include "secrefine/source_view.hpp"

using namespace secrefine;

TEST_CASE("comments are blanked, lines stay aligned") {
    auto v = make_source_view("x = 1  # secret\n# full line\ny = 'a#b'\n", Language::python);
    REQUIRE(v.line_count() == 3);
    CHECK(v.code[0].find("secret") == std::string::npos);
    CHECK(v.code[1].find("full") == std::string::npos);
    CHECK(v.code[2].find("a#b") != std::string::npos);
    CHECK(v.masked[2].find("a#b") == std::string::npos);
}

TEST_CASE("masking keeps interpolations") {
    auto py = make_source_view("q = f\"SELECT {name} FROM t\"\n", Language::python);
    CHECK(py.masked[0].find("{name}") != std::string::npos);
    CHECK(py.masked[0].find("SELECT") == std::string::npos);
    auto js = make_source_view("const q = `SELECT ${id}`;\n", Language::javascript);
    CHECK(js.masked[0].find("${id}") != std::string::npos);
    CHECK(js.masked[0].find("SELECT") == std::string::npos);
}

TEST_CASE("block comments span lines") {
    auto v = make_source_view("a();\n/* one\n two */ b();\n", Language::java);
    REQUIRE(v.line_count() == 3);
    CHECK(v.code[1].find("one") == std::string::npos);
    CHECK(v.code[2].find("two") == std::string::npos);
    CHECK(v.code[2].find("b();") != std::string::npos);
}

TEST_CASE("statements join while brackets are open") {
    auto v = make_source_view("cursor.execute(\n  q,\n  args)\nx = 1\n", Language::python);
    auto st = split_statements(v, Language::python);
    REQUIRE(st.size() >= 2);
    CHECK(st[0].first == 0);
    CHECK(st[0].last == 2);
    CHECK(st[0].line_at(st[0].masked.find("args")) == 2);
}

TEST_CASE("argument helpers") {
    std::string_view t = "f(a(b, c), d) + 1";
    auto args = call_arguments(t, 1);
    CHECK(args == "a(b, c), d");
    CHECK(first_argument(args) == "a(b, c)");
    CHECK(contains_word("x = name + 1", "name"));
    CHECK_FALSE(contains_word("x = obj.name", "name"));
    CHECK_FALSE(contains_word("x = names", "name"));
}
