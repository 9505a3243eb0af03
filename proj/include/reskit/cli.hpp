#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reskit {

// Full command-line front end, stream-parameterized so tests can drive it
// in-process.  Returns the process exit code:
//   0  computation succeeded (and --expect, when given, matched)
//   1  verification failed or --expect mismatched
//   2  malformed input (bad flags, unreadable file, schema violation)
//   3  violated precondition (well-formed input outside an operation's domain)
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace reskit
