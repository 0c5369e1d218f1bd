#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardylab::cli {

// Exit codes: 0 all pass, 1 any check failed, 2 usage error, 3 only
// hypothesis-not-met / inconclusive outcomes (or no Green's function).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hardylab::cli
