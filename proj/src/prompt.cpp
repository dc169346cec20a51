#include "secrefine/prompt.hpp"

namespace secrefine {

namespace {

std::string fenced(std::string_view code, Language lang) {
    std::string out = "```" + std::string(to_string(lang)) + "\n";
    out += code;
    if (!out.empty() && out.back() != '\n') out += '\n';
    return out + "```";
}

}  // namespace

PromptBundle build_prompt(Technique technique, const Scenario& scenario, const ScenarioVariant& variant,
                          const std::vector<std::string>& negative_examples,
                          const std::optional<std::string>& meta_prompt) {
    PromptBundle b;
    b.technique = technique;
    b.instruction = scenario_instruction(scenario, variant);
    b.scenario_context = fenced(render_context(variant), variant.language);

    switch (technique) {
        case Technique::nep:
            if (negative_examples.empty()) throw PromptError("nep prompt requires at least one negative example");
            b.negative_examples = negative_examples;
            break;
        case Technique::cot:
            b.security_directives = std::string(kChainOfThoughtDirectives);
            break;
        case Technique::mp:
            if (!meta_prompt || meta_prompt->empty()) throw PromptError("mp prompt requires a meta prompt");
            b.meta_prompt = *meta_prompt;
            break;
        case Technique::raw:
        case Technique::ft:
            break;
    }
    return b;
}

std::string PromptBundle::render() const {
    std::string out;
    if (!meta_prompt.empty()) out += meta_prompt + "\n\n";
    out += instruction;
    if (!security_directives.empty()) out += " " + security_directives;
    out += "\n\n" + scenario_context;
    for (const auto& example : negative_examples) {
        out += "\n\n";
        out += kNegativeExampleDirective;
        out += "\n\n" + example;
        if (out.back() != '\n') out += '\n';
    }
    if (out.back() != '\n') out += '\n';
    return out;
}

}  // namespace secrefine
