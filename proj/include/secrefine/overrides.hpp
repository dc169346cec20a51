#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "secrefine/finding.hpp"

namespace secrefine {

class LedgerError : public Error {
public:
    using Error::Error;
};

enum class OverrideAction { add, suppress };

struct OverrideEntry {
    std::string sample_key;
    OverrideAction action = OverrideAction::suppress;
    Finding finding;
    std::string reviewer;
    std::string note;
    int line = 0;  // 1-based position in the ledger file, 0 when built in memory

    std::string describe() const;
};

// Append-only JSON Lines file, one entry per line.
class OverrideLedger {
public:
    OverrideLedger() = default;
    explicit OverrideLedger(std::vector<OverrideEntry> entries) : entries_(std::move(entries)) {}

    static OverrideLedger load(const std::filesystem::path& path);
    static void append(const std::filesystem::path& path, const OverrideEntry& entry);

    const std::vector<OverrideEntry>& entries() const { return entries_; }
    std::vector<OverrideEntry> for_sample(const std::string& sample_key) const;

private:
    std::vector<OverrideEntry> entries_;
};

// Applies suppress/add judgments against the record's pre-override findings. Idempotent.
// Throws LedgerError naming the entry when a suppress misses or an add duplicates.
AnalysisRecord apply_overrides(const AnalysisRecord& record, const OverrideLedger& ledger);

}  // namespace secrefine
