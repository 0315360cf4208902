#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridramsey {

// Entry point behind the `gridramsey` binary. args excludes argv[0].
// Exit codes: 0 = success / property holds, 1 = property violated
// (witness printed), 2 = usage or input error, 3 = budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gridramsey
