#pragma once

#include <cstdint>
#include <string>

#include "ogs/verify.hpp"

namespace ogs {

// Self-contained machine-checkable record: feeding (group, input) with the
// recorded seed back to the named command must reproduce verdict, witness
// and counterexamples byte for byte.
struct Certificate {
    std::string version = "1";
    std::string command;
    Json group;        // GroupSpec or null
    Json input;
    Json verdict;
    Json witness;
    std::string evidence_level = "exact"; // "exact" | "sampled"
    uint64_t seed = 0;
    Json counterexamples = Json::array();
};

struct CommandResult {
    Json verdict;
    Json witness;
    std::string evidence_level = "exact";
    Json counterexamples = Json::array();
    long long runtime_ms = 0;
    int exit_code = 0;
};

// One entry point behind every CLI subcommand and behind certificate
// validation, so both always agree.
CommandResult execute_command(const std::string& command, const Json& group, const Json& input,
                              uint64_t seed, int workers = 1);

Json certificate_to_json(const Certificate&);
Certificate certificate_from_json(const Json&);

Certificate make_certificate(const std::string& command, const Json& group, const Json& input,
                             uint64_t seed, const CommandResult&);

// Recomputes the verdict from the certificate's own data.
bool validate_certificate(const Certificate&);

} // namespace ogs
