#pragma once

#include <filesystem>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "secrefine/finding.hpp"
#include "secrefine/types.hpp"

namespace secrefine {

class RulePackError : public Error {
public:
    using Error::Error;
};

enum class RuleKind { pattern, credential_literal, tainted_sink, exception_response };

std::string_view to_string(RuleKind k);

struct DetectorRule {
    std::string rule_id;
    CweId cwe;
    std::set<Language> languages;
    std::string description;
    RuleKind kind = RuleKind::pattern;
    nlohmann::json spec;  // kind-specific fields as loaded

    struct Compiled;
    std::shared_ptr<const Compiled> compiled;
};

class RulePack {
public:
    static RulePack parse(const nlohmann::json& doc, const std::string& origin = "<rules>");
    static RulePack load(const std::filesystem::path& path);

    const std::string& name() const { return name_; }
    const std::string& version() const { return version_; }
    const std::vector<DetectorRule>& rules() const { return rules_; }
    std::vector<const DetectorRule*> for_language(Language lang) const;

private:
    std::string name_;
    std::string version_;
    std::vector<DetectorRule> rules_;
};

struct ScanResult {
    std::vector<Finding> findings;
    std::vector<std::string> warnings;
};

// Runs every rule of `pack` that applies to `lang`. Line numbers are 1-based over `code`.
ScanResult scan_builtin(const RulePack& pack, std::string_view code, Language lang, const std::string& file);

}  // namespace secrefine
