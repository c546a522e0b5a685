#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace girthcut::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kPrecondition = 3,
    kIngestion = 4,
};

struct Environment {
    // Cap on sampler threads; 0 means hardware concurrency.
    unsigned threads = 0;
};

// Reads GIRTHCUT_THREADS. Unset or empty yields 0; anything but a positive
// integer is reported through `error` and yields 0.
Environment environment_from_process(std::string* error = nullptr);

// Parses "3", "3,5,7", "3..9" or combinations such as "3,5..7". Throws
// std::invalid_argument on malformed or empty ranges.
std::vector<int> parse_int_list(const std::string& text);

// Entry point behind the `girthcut` executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

} // namespace girthcut::cli
