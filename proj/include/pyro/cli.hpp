#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pyro {

/// Entry point behind the `pyro` binary. Subcommands:
///   simulate | delta-scan | fire-stats | bound-check | xi-probe |
///   tree-stats | selftest
/// Exit codes: 0 success, 1 I/O failure, 2 usage/config error.
int cli_dispatch(int argc, const char* const* argv);

/// "a,b,c" lists and "start:stop:step" ranges (stop inclusive up to 1e-9)
std::vector<double> parse_sweep(const std::string& text);
std::vector<std::int64_t> parse_int_sweep(const std::string& text);

}  // namespace pyro
