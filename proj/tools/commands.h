/*******************************************************************************
 * Command-line front end: partition, gen, analyze and profile.
 *
 * @file:   commands.h
 ******************************************************************************/
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmpart::cli {
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

// `args` excludes the program name. The summary line and command output go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
} // namespace lmpart::cli
