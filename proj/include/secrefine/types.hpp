#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secrefine {

// Base for every error the harness reports to callers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CweId {
public:
    CweId() = default;
    explicit CweId(std::uint32_t number);

    // Accepts "CWE-79", "cwe-079", "79". Throws Error on anything else.
    static CweId parse(std::string_view text);
    static std::optional<CweId> try_parse(std::string_view text);

    std::uint32_t number() const { return number_; }
    std::string str() const { return "CWE-" + std::to_string(number_); }

    auto operator<=>(const CweId&) const = default;

private:
    std::uint32_t number_ = 0;
};

using CweSet = std::set<CweId>;

std::string to_string(const CweSet& set);

enum class Language { python, javascript, java, go };

inline constexpr Language kAllLanguages[] = {Language::python, Language::javascript, Language::java,
                                              Language::go};

std::string_view to_string(Language lang);
Language parse_language(std::string_view text);
std::string_view file_extension(Language lang);
std::string_view line_comment(Language lang);

// raw is the unrefined baseline; the other four are the refinement techniques.
enum class Technique { raw, nep, cot, mp, ft };

inline constexpr Technique kAllTechniques[] = {Technique::raw, Technique::nep, Technique::cot, Technique::mp,
                                                Technique::ft};
inline constexpr Technique kRefinementTechniques[] = {Technique::nep, Technique::cot, Technique::mp,
                                                       Technique::ft};

std::string_view to_string(Technique t);
// Column label used in report tables ("NEP", "CoT", ...).
std::string_view display_name(Technique t);
Technique parse_technique(std::string_view text);

// Provenance of one sample; orders by (model, technique, language, scenario, index).
struct SampleKey {
    std::string model_id;
    Technique technique = Technique::raw;
    Language language = Language::python;
    int scenario_id = 0;
    int sample_index = 0;

    auto operator<=>(const SampleKey&) const = default;

    // "<model>/<technique>/<language>/scenario_<id>"
    std::string cell_path() const;
    // "<model>/<technique>/<language>/scenario_<id>/sample_<index>"
    std::string str() const;
    static SampleKey parse(std::string_view text);
};

// One (model, technique, language, scenario) cell.
struct CellKey {
    std::string model_id;
    Technique technique = Technique::raw;
    Language language = Language::python;
    int scenario_id = 0;

    auto operator<=>(const CellKey&) const = default;

    std::string str() const;
    static CellKey of(const SampleKey& key) {
        return {key.model_id, key.technique, key.language, key.scenario_id};
    }
};

}  // namespace secrefine
