#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nhtool {

struct RunConfig {
    std::string command;
    std::vector<std::string> args;  // positional arguments after the subcommand
    int n = 0;                      // 0: command default
    std::string field;              // empty: command default; "Q", "Z" or a prime
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    unsigned threads = 1;
    std::string out;
    std::size_t budget_pairs = 1000000;
    int budget_degree = 60;
};

/// Thrown for unknown commands and malformed input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names();

/// Runs one command. `payload` is read only by commands taking ideals.
/// Fills `report` (schema "1") and returns the exit code: 0 pass, 1 fail, 2 budget exceeded.
int run(const RunConfig& cfg, std::istream& payload, nlohmann::json& report);

/// One-line human summary of a report.
std::string summarize(const nlohmann::json& report);

}  // namespace nhtool
