#pragma once

#include <string>
#include <vector>

// Command-line front end.  Subcommands: gen-params, scan, sample, attack,
// experiment.  Exit codes: 0 success, 1 usage or input error, 2 infeasible
// region.

namespace plwe {

int cli_dispatch(const std::vector<std::string>& args);

}  // namespace plwe
