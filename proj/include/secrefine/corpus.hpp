#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "secrefine/types.hpp"

namespace secrefine {

// Token every insertion marker must contain; the comment prefix around it is language-specific.
inline constexpr std::string_view kMarkerToken = "-copilot next line-";

std::string marker_for(Language lang);

struct Scenario {
    int id = 0;
    std::string name;
    CweId target_cwe;
    std::string description;
    // Natural-language task shown to the model. Empty means "derive from the snippet".
    std::string instruction;

    bool operator==(const Scenario&) const = default;
};

struct ScenarioVariant {
    int scenario_id = 0;
    Language language = Language::python;
    std::string source_prefix;
    std::string marker;  // empty when the snippet carries no marker
    std::string source_suffix;
    std::string framework_tag;

    bool operator==(const ScenarioVariant&) const = default;
};

class CorpusError : public Error {
public:
    using Error::Error;
};

struct Violation {
    int scenario_id = 0;
    std::optional<Language> language;
    std::string rule;

    std::string str() const;
    bool operator==(const Violation&) const = default;
};

class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<Language> languages, std::vector<Scenario> scenarios, std::vector<ScenarioVariant> variants);

    const std::vector<Language>& languages() const { return languages_; }
    const std::vector<Scenario>& scenarios() const { return scenarios_; }
    // Ordered by (scenario_id, language).
    const std::vector<ScenarioVariant>& variants() const { return variants_; }

    const Scenario* find_scenario(int id) const;
    const ScenarioVariant* find_variant(int scenario_id, Language lang) const;

    // Source file path recorded at load time, relative to the corpus root.
    static std::string variant_file_name(int scenario_id, Language lang);

    bool operator==(const Corpus&) const = default;

private:
    std::vector<Language> languages_;
    std::vector<Scenario> scenarios_;
    std::vector<ScenarioVariant> variants_;
};

// Reads manifest + snippet files without enforcing invariants. Missing variant files are skipped
// (validate_corpus reports them). Throws CorpusError when the manifest itself is unreadable.
Corpus load_corpus_unchecked(const std::filesystem::path& root);

// Reads and enforces every invariant; the first violation becomes a CorpusError naming the file.
Corpus load_corpus(const std::filesystem::path& root);

std::vector<Violation> validate_corpus(const Corpus& corpus);

// prefix + marker + suffix, verbatim.
std::string render_context(const ScenarioVariant& variant);

void write_corpus(const Corpus& corpus, const std::filesystem::path& root);

// Counts non-overlapping occurrences of the marker token.
int marker_count(std::string_view text);

// Instruction for the scenario: the manifest's text when present, otherwise the last docstring or
// comment above the marker.
std::string scenario_instruction(const Scenario& scenario, const ScenarioVariant& variant);

}  // namespace secrefine
