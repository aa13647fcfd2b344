#pragma once

/**
 * @file cli.hpp
 * @brief Entry point of the toda-weyl command-line tool, callable in-process.
 *
 * Exit codes: 0 success / verified, 1 usage or input error,
 * 2 property violated or not a member, 3 inconclusive (descent stalled).
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace toda::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toda::cli
