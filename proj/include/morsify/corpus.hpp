#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morsify/pipeline.hpp"

namespace morsify {

struct CorpusEntry {
    std::string name;
    JobConfig job;
    // Expected m per stratum, nullopt for NOT_APPLICABLE.
    std::vector<std::optional<unsigned>> expected_m;
};

std::vector<CorpusEntry> builtin_corpus();

struct SelftestResult {
    Json json;
    bool passed = false;
};

SelftestResult run_selftest(const RunOptions& options = {});

} // namespace morsify
