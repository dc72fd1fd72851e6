#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcl {

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics and usage text to err. Returns 0 on success, 1 when a
/// verification fails or on I/O or convergence failure, 2 on usage or
/// domain errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcl
