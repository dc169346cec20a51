// Acceptance checks AC1-AC9. Prints one PASS/FAIL line per criterion; exits non-zero on any failure.
#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "secrefine/config.hpp"
#include "secrefine/io.hpp"
#include "secrefine/outcomes.hpp"
#include "secrefine/pipeline.hpp"
#include "secrefine/report.hpp"
#include "secrefine/rules.hpp"
#include "secrefine/sarif.hpp"
#include "secrefine/severity.hpp"
#include "support.hpp"

#ifndef SECREFINE_CLI
#error "SECREFINE_CLI must point at the secrefine executable"
#endif

using namespace secrefine;
using nlohmann::json;
using testsupport::TempDir;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Collects failure messages for one criterion.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

using Hits = std::set<std::pair<std::uint32_t, int>>;

std::string show(const Hits& h) {
    std::string s = "{";
    for (const auto& [c, l] : h) s += " CWE-" + std::to_string(c) + "@" + std::to_string(l);
    return s + " }";
}

// ---- AC1 ----
void ac1(Check& ck) {
    const auto start = Clock::now();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> mag(0.0, 250.0);
    std::bernoulli_distribution zero(0.1);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        double raw = zero(rng) ? 0.0 : mag(rng);
        double refined = zero(rng) ? 0.0 : mag(rng);
        auto got = improvement_pct(raw, refined);
        if (raw == 0.0) {
            // Conventions: both zero is no change; a new weakness from nothing has no ratio.
            ck.expect(refined == 0.0 ? (got && *got == 0.0) : !got, "zero-denominator convention at pair " +
                                                                         std::to_string(i));
            continue;
        }
        const long double oracle = 100.0L - 100.0L * static_cast<long double>(refined) / raw;
        ck.expect(got && std::fabs(static_cast<long double>(*got) - oracle) <= 1e-9,
                  "pair " + std::to_string(i) + " differs from oracle");
        ++checked;
    }
    for (double x : {0.5, 1.0, 9.8, 123.25, 1e6}) {
        ck.expect(*improvement_pct(x, x) == 0.0, "improvement(x,x) != 0");
        ck.expect(*improvement_pct(x, 0.0) == 100.0, "improvement(x,0) != 100");
        ck.expect(!improvement_pct(0.0, x).has_value(), "improvement(0,>0) defined");
    }
    ck.expect(*improvement_pct(0.0, 0.0) == 0.0, "improvement(0,0) != 0");
    ck.expect(checked > 150, "too few nonzero pairs");
    ck.expect(seconds_since(start) < 1.0, "runtime >= 1 s");
}

// ---- AC2 ----
void ac2(Check& ck) {
    auto build = [](std::vector<double> values, Metric metric) {
        std::vector<ImprovementResult> rs;
        std::size_t i = 0;
        for (auto lang : kAllLanguages) {
            ImprovementResult r;
            r.model_id = "gpt-4.1";
            r.language = lang;
            r.technique = Technique::nep;
            if (metric == Metric::severity) r.severity_pct = values[i];
            else r.count_pct = values[i];
            ++i;
            rs.push_back(r);
        }
        return improvement_table(rs, GroupBy::model, metric, 2);
    };
    auto average_nep = [](const Table& t) -> std::string {
        for (const auto& row : t.rows)
            if (row.size() > 2 && row[1] == "Average") return row[2];
        return "<missing>";
    };
    auto sev = average_nep(build({16, 31, 37, 51}, Metric::severity));
    auto cnt = average_nep(build({2, 21, 32, 39}, Metric::finding_instances));
    ck.expect(sev == "33.75", "severity average rendered " + sev);
    ck.expect(cnt == "23.50", "count average rendered " + cnt);
}

// ---- AC3 ----
void ac3(Check& ck) {
    const auto start = Clock::now();
    const auto data = testsupport::data_dir() / "fixtures";
    auto pack = RulePack::load(testsupport::data_dir() / "rules/builtin_rules.json");

    // (cwe, first line, last line). A cited single line must be where the finding starts; a cited
    // range must equal the finding's span. Last line 0 marks a single-line citation.
    using Spans = std::set<std::tuple<std::uint32_t, int, int>>;
    auto show_spans = [](const Spans& h) {
        std::string s = "{";
        for (const auto& [c, a, b] : h)
            s += " CWE-" + std::to_string(c) + "@" + std::to_string(a) + (b == 0 || a == b ? "" : "-" + std::to_string(b));
        return s + " }";
    };
    struct Case {
        std::string file;
        Language lang;
        std::string sarif;  // empty when no fixture
        Spans want;
    };
    const std::vector<Case> cases{
        {"listing_1.py", Language::python, "", {{327, 6, 0}, {798, 8, 0}, {209, 19, 0}}},
        {"listing_2.js", Language::javascript, "listing_2.sarif", {{798, 8, 0}, {770, 1, 0}, {20, 18, 0}}},
        {"listing_3.java", Language::java, "listing_3.sarif", {{798, 10, 11}, {20, 25, 0}, {209, 33, 0}}},
        {"listing_4.go", Language::go, "", {{22, 17, 0}}},
        {"listing_5.go", Language::go, "listing_5.sarif", {{306, 14, 0}}},
    };
    for (const auto& c : cases) {
        auto code = io::read_file(data / "listings" / c.file);
        std::vector<Finding> external;
        if (!c.sarif.empty()) external = ingest_sarif(io::read_file(data / "sarif" / c.sarif)).findings;
        auto record = analyze_source(c.file, code, c.lang, c.file, pack, external);
        Spans got;
        for (const auto& f : record.findings) got.insert({f.cwe.number(), f.start_line, f.end_line});
        std::size_t matched = 0;
        for (const auto& [cwe, first, last] : c.want)
            matched += std::count_if(got.begin(), got.end(), [&](const auto& g) {
                return std::get<0>(g) == cwe && std::get<1>(g) == first && (last == 0 || std::get<2>(g) == last);
            }) == 1;
        ck.expect(matched == c.want.size() && got.size() == c.want.size(), c.file + ": got " + show_spans(got) + " want " + show_spans(c.want));
    }

    const std::vector<std::pair<std::string, Language>> secure{{"secure_1.py", Language::python},
                                                               {"secure_2.js", Language::javascript},
                                                               {"secure_3.java", Language::java},
                                                               {"secure_4.go", Language::go},
                                                               {"secure_5.go", Language::go}};
    for (const auto& [file, lang] : secure) {
        auto r = scan_builtin(pack, io::read_file(data / "secure" / file), lang, file);
        Hits got;
        for (const auto& f : r.findings) got.insert({f.cwe.number(), f.start_line});
        ck.expect(got.empty(), file + ": false positives " + show(got));
    }
    ck.expect(seconds_since(start) < 2.0, "runtime >= 2 s");
}

// ---- AC4 ----
void ac4(Check& ck) {
    const CweId universe[3] = {CweId(22), CweId(79), CweId(89)};
    auto set_of = [&](int mask) {
        CweSet s;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) s.insert(universe[i]);
        return s;
    };
    // Oracle over bit masks: P = o & r, I = r & ~o.
    auto oracle = [](int o, int r) {
        const int p = o & r, intro = r & ~o;
        if (o == 0) return r == 0 ? OutcomeCategory::no_cwes : OutcomeCategory::fully_removed_and_introduced;
        if (intro) return p ? OutcomeCategory::not_removed_and_introduced
                            : OutcomeCategory::fully_removed_and_introduced;
        if (p == 0) return OutcomeCategory::fully_removed;
        return p == o ? OutcomeCategory::not_removed : OutcomeCategory::partial_fix;
    };
    std::map<OutcomeCategory, int> seen;
    int pairs = 0;
    for (int o = 0; o < 8; ++o)
        for (int r = 0; r < 8; ++r) {
            ++pairs;
            auto got = categorize(set_of(o), set_of(r));
            ++seen[got];
            ck.expect(got == oracle(o, r), "mismatch at orig=" + std::to_string(o) + " refined=" + std::to_string(r));
            // Exclusive: exactly one category's defining predicate holds.
            int matches = 0;
            for (auto c : kAllCategories) matches += c == oracle(o, r);
            ck.expect(matches == 1, "non-exclusive classification");
        }
    ck.expect(pairs == 64, "pair count");
    ck.expect(seen.size() == std::size(kAllCategories), "not every category reachable");
}

// ---- AC5 ----
double chi_square_v(const Contingency2x2& t) {
    const double obs[2][2] = {{double(t.a), double(t.b)}, {double(t.c), double(t.d)}};
    const double n = double(t.n());
    double chi = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double row = obs[i][0] + obs[i][1];
            const double col = obs[0][j] + obs[1][j];
            const double expected = row * col / n;
            chi += (obs[i][j] - expected) * (obs[i][j] - expected) / expected;
        }
    return std::sqrt(chi / n);
}

void ac5(Check& ck) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> cell(0, 60);
    int done = 0;
    while (done < 1000) {
        Contingency2x2 t{cell(rng), cell(rng), cell(rng), cell(rng)};
        if (t.a + t.b == 0 || t.c + t.d == 0 || t.a + t.c == 0 || t.b + t.d == 0) continue;
        const double got = cramers_v(t), want = chi_square_v(t);
        ck.expect(std::fabs(got - want) <= 1e-9, "table " + std::to_string(done) + " differs from chi-square");
        ++done;
    }
    ck.expect(cramers_v({10, 0, 0, 10}) == 1.0, "[[10,0],[0,10]] != 1.0");
    ck.expect(cramers_v({5, 5, 5, 5}) == 0.0, "[[5,5],[5,5]] != 0.0");
    ck.expect(cramers_v({6, 2, 2, 6}) == 0.5, "[[6,2],[2,6]] != 0.5");
}

// ---- AC6 ----
RunConfig demo_config(const fs::path& out) {
    auto c = load_config(testsupport::source_dir() / "configs/replay_demo.json");
    c.output_root = out;
    return c;
}

std::string report_digest(const fs::path& out) { return io::tree_digest(out / "report"); }

void run_quiet(const RunConfig& c, bool resume) {
    std::ostringstream log;
    PipelineOptions opts;
    opts.resume = resume;
    run_pipeline(c, opts, log);
}

void ac6(Check& ck, std::string& detail) {
    const auto start = Clock::now();
    TempDir dir("accept6");

    auto a = demo_config(dir / "a");
    auto b = demo_config(dir / "b");
    const auto t0 = Clock::now();
    run_quiet(a, false);
    const double one_run = seconds_since(t0);
    run_quiet(b, false);
    const auto reference = report_digest(a.output_root);
    ck.expect(fs::exists(a.report_dir() / "index.json"), "report bundle missing");
    ck.expect(reference == report_digest(b.output_root), "two fresh runs differ");
    ck.expect(io::tree_digest(a.samples_dir()) == io::tree_digest(b.samples_dir()), "sample stores differ");

    // Interruption 1: lose a slice of samples, the checkpoints and every later stage, then resume.
    auto store = SampleStore(b.samples_dir());
    auto keys = store.keys();
    int removed = 0;
    for (std::size_t i = 0; i < keys.size(); i += 7) {
        fs::remove(store.code_path(keys[i]));
        fs::remove(store.meta_path(keys[i]));
        ++removed;
    }
    for (const auto& p : io::list_files(b.samples_dir()))
        if (fs::path(p).filename() == ".complete") fs::remove(b.samples_dir() / p);
    for (const auto& d : {b.analysis_dir(), b.scores_dir(), b.outcomes_dir(), b.report_dir()}) fs::remove_all(d);
    fs::remove(b.manifest_path());
    run_quiet(b, true);
    ck.expect(reference == report_digest(b.output_root), "resume after sample loss differs");
    ck.expect(io::tree_digest(a.samples_dir()) == io::tree_digest(b.samples_dir()), "resumed store differs");

    // Interruption 2: kill the CLI mid-run, then resume from whatever it left behind.
    const auto c_out = dir / "c";
    bool killed = false;
    pid_t pid = fork();
    if (pid == 0) {
        int devnull = ::open("/dev/null", O_WRONLY);
        if (devnull >= 0) {
            dup2(devnull, 1);
            dup2(devnull, 2);
        }
        const std::string cfg = (testsupport::source_dir() / "configs/replay_demo.json").string();
        const std::string out = c_out.string();
        execl(SECREFINE_CLI, SECREFINE_CLI, "--config", cfg.c_str(), "--out", out.c_str(), "pipeline",
              static_cast<char*>(nullptr));
        _exit(127);
    }
    const auto kill_after = std::chrono::duration<double>(std::max(0.05, one_run * 0.3));
    std::this_thread::sleep_for(kill_after);
    int status = 0;
    if (waitpid(pid, &status, WNOHANG) == 0) {
        kill(pid, SIGKILL);
        waitpid(pid, &status, 0);
        killed = true;
    }
    const auto partial = SampleStore(c_out / "samples").keys().size();
    auto c = demo_config(c_out);
    run_quiet(c, true);
    ck.expect(reference == report_digest(c_out), "resume after kill differs");

    const double total = seconds_since(start);
    ck.expect(total < 60.0, "runtime >= 60 s");
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << "single run " << one_run << " s; removed " << removed << " samples; "
      << (killed ? "killed" : "child finished before kill") << " with " << partial << "/" << keys.size()
      << " samples stored; total " << total << " s";
    detail = d.str();
}

// ---- AC7 ----
void ac7(Check& ck) {
    auto in = ingest_sarif(io::read_file(testsupport::data_dir() / "fixtures/sarif/seven_results.sarif"));
    Hits got;
    for (const auto& f : in.findings) got.insert({f.cwe.number(), f.start_line});
    const Hits want{{79, 12}, {79, 20}, {22, 8}, {89, 15}, {209, 30}, {327, 5}};
    ck.expect(in.findings.size() == 6, "finding count " + std::to_string(in.findings.size()));
    ck.expect(got == want, "got " + show(got));
    ck.expect(in.unmapped_results == 1, "unmapped " + std::to_string(in.unmapped_results));
}

// ---- AC8 ----
void ac8(Check& ck) {
    auto t = SeverityTable::load(testsupport::data_dir() / "severity/default_table.json");
    ck.expect(t.lookup(CweId(78)) == 9.8, "CWE-78 score");
    ck.expect(t.lookup(CweId(209)) == 5.4, "CWE-209 score");
    for (int cwe : {78, 209})
        ck.expect(t.entry(CweId(cwe)).provenance.starts_with("cited:"),
                  "CWE-" + std::to_string(cwe) + " provenance lacks citation");
    try {
        t.lookup(CweId(99999));
        ck.expect(false, "absent CWE did not raise");
    } catch (const SeverityError& e) {
        ck.expect(std::string(e.what()) == "CWE-99999 is absent from the severity table",
                  std::string("unexpected message: ") + e.what());
    }
}

// ---- AC9 ----
void ac9(Check& ck) {
    const std::vector<double> a{0.0, 10.0}, b{9.8};
    ck.expect(percentile_severity(a) == 7.5, "[0,10] != 7.5");
    ck.expect(percentile_severity(b) == 9.8, "[9.8] != 9.8");
    for (double k : {0.0, 3.3, 7.5, 10.0})
        for (std::size_t n : {1u, 2u, 5u, 17u}) {
            std::vector<double> v(n, k);
            ck.expect(percentile_severity(v) == k, "constant list");
        }
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> score(0.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        std::vector<double> v(1 + rng() % 40);
        for (auto& x : v) x = std::round(score(rng) * 10) / 10;
        const double base = percentile_severity(v);
        for (int s = 0; s < 5; ++s) {
            std::shuffle(v.begin(), v.end(), rng);
            ck.expect(percentile_severity(v) == base, "permutation changed the percentile");
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        std::function<void(Check&, std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "improvement metric oracle", [](Check& c, std::string&) { ac1(c); }},
        {"AC2", "average rendering", [](Check& c, std::string&) { ac2(c); }},
        {"AC3", "detector golden corpus", [](Check& c, std::string&) { ac3(c); }},
        {"AC4", "categorization truth table", [](Check& c, std::string&) { ac4(c); }},
        {"AC5", "Cramer's V", [](Check& c, std::string&) { ac5(c); }},
        {"AC6", "end-to-end determinism and resume", ac6},
        {"AC7", "SARIF ingestion", [](Check& c, std::string&) { ac7(c); }},
        {"AC8", "severity table", [](Check& c, std::string&) { ac8(c); }},
        {"AC9", "percentile severity", [](Check& c, std::string&) { ac9(c); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Check ck;
        std::string detail;
        const auto start = Clock::now();
        try {
            c.run(ck, detail);
        } catch (const std::exception& e) {
            ck.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = ck.failures.empty();
        failed += !ok;
        std::cout << c.id << " " << (ok ? "PASS" : "FAIL") << " " << c.name << " (" << static_cast<long>(
                         std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count())
                  << " ms)";
        if (!detail.empty()) std::cout << " " << detail;
        std::cout << "\n";
        for (const auto& f : ck.failures) std::cout << "    " << f << "\n";
    }
    return failed == 0 ? 0 : 1;
}
