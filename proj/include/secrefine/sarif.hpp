#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "secrefine/finding.hpp"

namespace secrefine {

class SarifError : public Error {
public:
    using Error::Error;
};

// Extra rule id -> CWE entries for analyzers whose rules carry no CWE tag.
using CweMapping = std::map<std::string, CweId>;

struct SarifIngest {
    std::vector<Finding> findings;   // deduplicated
    int unmapped_results = 0;        // results with no CWE tag and no mapping entry
    std::vector<std::string> warnings;
    std::map<std::string, std::string> tools;  // driver name -> version
};

// Parses a SARIF 2.1.0 log. Each distinct location of a CWE-mapped result becomes one finding.
// Artifact URIs are normalized (file:// and leading ./ stripped) and, when `uri_prefix` is
// non-empty, bare file names are prefixed with it.
SarifIngest ingest_sarif(std::string_view document, const CweMapping& mapping = {},
                         const std::string& uri_prefix = {});

// CWE carried by a rule tag such as "external/cwe/cwe-079".
std::optional<CweId> cwe_from_tag(std::string_view tag);

}  // namespace secrefine
