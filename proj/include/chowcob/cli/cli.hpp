#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chowcob::cli {

// args excludes the program name.  0 ok, 2 a verification failed, 1 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowcob::cli
