#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slgal/linalg.hpp"

namespace slgal::cli {

/// Runs one command. Exit code 0 on success, 1 on a domain error (JSON on `err`), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a", "bi", "a+bi", "a-bi".
Complex parse_complex(const std::string& text);

}  // namespace slgal::cli
