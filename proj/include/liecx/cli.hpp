#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liecx {

// Exit codes: 0 success / integrable, 1 verified-negative result
// (non-integrable, no known structure), 2 usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecx
