#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "secrefine/corpus.hpp"

namespace secrefine {

class ExtractionError : public Error {
public:
    using Error::Error;
};

struct FencedBlock {
    std::string info;  // language tag after the opening fence, lowercased
    std::string body;
};

std::vector<FencedBlock> fenced_blocks(std::string_view text);

// Inserts a completion on the line after the variant's marker.
std::string splice_completion(const ScenarioVariant& variant, std::string_view completion);

// Turns a model response into a full source file for the variant. Throws ExtractionError
// ("no code found") when the response carries nothing code-like.
std::string extract_code(std::string_view raw_response, const ScenarioVariant& variant);

}  // namespace secrefine
