#include <doctest.h>

#include <json.hpp>

#include "secrefine/rules.hpp"
#include "support.hpp"

using namespace secrefine;
using nlohmann::json;

namespace {

const RulePack& pack() {
    static RulePack p = RulePack::load(testsupport::data_dir() / "rules/builtin_rules.json");
    return p;
}

std::vector<std::pair<int, int>> scan(std::string_view code, Language lang) {
    std::vector<std::pair<int, int>> out;
    for (const auto& f : scan_builtin(pack(), code, lang, "f").findings) out.emplace_back(static_cast<int>(f.cwe.number()), f.start_line);
    return out;
}

using Hits = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("bundled pack loads") {
    CHECK(pack().name() == "builtin");
    CHECK_FALSE(pack().rules().empty());
    for (auto lang : kAllLanguages) CHECK_FALSE(pack().for_language(lang).empty());
}

TEST_CASE("python detectors") {
    CHECK(scan("data = request.get_data()\nobj = pickle.loads(data)\n", Language::python) == Hits{{502, 2}});
    CHECK(scan("uid = request.args['id']\ncursor.execute(\"SELECT * FROM t WHERE id = \" + uid)\n",
               Language::python) == Hits{{89, 2}});
    CHECK(scan("uid = request.args['id']\ncursor.execute(\"SELECT * FROM t WHERE id = %s\", (uid,))\n",
               Language::python)
              .empty());
    CHECK(scan("name = request.form['f']\nopen(name, 'w')\n", Language::python) == Hits{{22, 2}});
    CHECK(scan("name = secure_filename(request.form['f'])\nopen(name, 'w')\n", Language::python).empty());
}

TEST_CASE("comments and strings do not trigger") {
    CHECK(scan("# pickle.loads(request.data)\nx = 'pickle.loads(request.data)'\n", Language::python).empty());
}

TEST_CASE("javascript and go detectors") {
    CHECK(scan("const q = `SELECT * FROM t WHERE id = ${req.query.id}`;\ndb.query(q);\n", Language::javascript)
              .size() == 1);
    CHECK(scan("db.query('SELECT * FROM t WHERE id = ?', [req.query.id]);\n", Language::javascript).empty());
    auto go = scan("func h(w http.ResponseWriter, r *http.Request) {\n\tname := r.URL.Query().Get(\"f\")\n"
                   "\tos.Open(name)\n}\n",
                   Language::go);
    CHECK(go == Hits{{22, 3}});
}

TEST_CASE("rule pack errors are named") {
    auto bad = [](json doc) { return RulePack::parse(doc, "t.json"); };
    CHECK_THROWS_AS(bad(json::object()), RulePackError);
    json base = {{"name", "x"},
                 {"version", "1"},
                 {"rules",
                  {{{"rule_id", "a"}, {"cwe", "CWE-1"}, {"languages", {"python"}}, {"kind", "pattern"},
                    {"pattern", "x"}}}}};
    CHECK_NOTHROW(bad(base));
    auto dup = base;
    dup["rules"].push_back(base["rules"][0]);
    CHECK_THROWS_WITH_AS(bad(dup), doctest::Contains("duplicate rule_id"), RulePackError);
    auto regex = base;
    regex["rules"][0]["pattern"] = "(";
    CHECK_THROWS_WITH_AS(bad(regex), doctest::Contains("invalid pattern"), RulePackError);
    auto kind = base;
    kind["rules"][0]["kind"] = "magic";
    CHECK_THROWS_WITH_AS(bad(kind), doctest::Contains("unknown rule kind 'magic'"), RulePackError);
}
