#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chirality/cert/certificate.hpp"

namespace chirality::cli {

/// 0 certified, 1 refuted or no obstruction, 2 inconclusive.
int exit_code(Verdict v);

/// Runs one command line (without the program name). Certificates go to
/// `out` as JSON lines, the human summary to `err`. Input errors print an
/// {"error": ...} line and return 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chirality::cli
