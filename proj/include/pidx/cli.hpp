#pragma once
// Command-line front end, callable in-process for tests. Subcommands:
// minimal, enumerate, indices, sample, check. Exit codes: 0 success, 2 usage
// or input parsing, 3 violated precondition, 4 size cap, 5 failed property
// check. Results go to `out`, diagnostics to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace pidx {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pidx
