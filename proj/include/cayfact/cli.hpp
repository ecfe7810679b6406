#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cayfact/group.hpp"

namespace cayfact {

// Exit-code contract shared by every subcommand.
inline constexpr int exit_ok = 0;         // success / true / pass / found
inline constexpr int exit_input_error = 2;
inline constexpr int exit_negative = 3;   // false / fail / refuted
inline constexpr int exit_undecided = 4;
inline constexpr int exit_exhausted = 5;  // oracle budget hit

struct RunConfig {
    std::string group_arg;   // inline JSON or @file
    int k = 0;
    std::string format = "json";  // json | dot | edgelist | text
    std::string out_dir = ".";
    std::uint64_t budget = 10'000'000;
    std::string cert_path;   // verify input
};

// Inline JSON, or the contents of a file when the argument starts with '@'.
Group parse_group_arg(const std::string& arg);

// Each command prints its result to `out`, diagnostics to `err`, and returns
// an exit code per the contract above. No randomness, no environment lookups:
// identical configs produce byte-identical output.
int cmd_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cayfact
