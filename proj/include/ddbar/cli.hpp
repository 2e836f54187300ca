#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddbar {

/*
 * Command dispatch, callable in-process. `args` excludes the program name.
 * Exit status: 0 success, 1 computation error, 2 parse/usage error. Errors
 * go to `err` as `error[CODE]: message`.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ddbar
