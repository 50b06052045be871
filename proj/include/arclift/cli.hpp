#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arclift::cli {

struct Invocation {
    std::string subcommand;  // prepare, divide, lift, fiber, patho, bizzard
    std::optional<std::string> ring;
    std::optional<std::size_t> precision;  // --N
    std::string output = "text";           // text | json

    std::optional<std::string> series;
    std::optional<std::string> poly;
    std::optional<std::string> by;  // divisor series for Laurent division
    std::optional<std::size_t> power;
    std::optional<std::string> map;
    std::optional<std::string> arc;

    std::string check = "identities";  // identities | sawed | xy
    std::size_t bound = 12;
    std::size_t n = 3;
    std::string c = "3";
    std::int64_t p = 3;
};

struct Outcome {
    int exit_code = 0;
    std::string out;  // result, or the domain error report for exit code 2
    std::string err;  // diagnostics for exit code 1
};

/// Executes one command. Never throws.
Outcome run(const Invocation& inv);

/// Builds an Invocation from argv (without the program name). Throws
/// Error(ParseError) on unknown subcommands or flags; `help` receives the
/// usage text when --help was requested.
Invocation parse_args(const std::vector<std::string>& args, std::string* help = nullptr);

/// parse_args + run, writing to stdout/stderr.
int main(int argc, char** argv);

}  // namespace arclift::cli
