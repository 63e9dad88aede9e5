#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homodec {

// Entry point shared by the binary and the tests: `args` excludes the
// program name. Exit codes: 0 success, 1 a requested check failed, 2 bad
// usage or unreadable/unparsable input, 3 pipeline failure (size guard,
// closure violation, non-weakly-partitive typing, ...).
int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err);

} // namespace homodec
