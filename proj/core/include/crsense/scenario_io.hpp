#pragma once

#include <iosfwd>
#include <string>

#include "crsense/scenario.hpp"

namespace crsense {

// Self-describing line-oriented text format, format version 1. Floats are
// rendered with 17 significant digits so load(save(x)) == x bit-exactly.
void save_scenario(const Scenario& scenario, const std::string& path);
void save_scenario(const Scenario& scenario, std::ostream& out);

// Throws std::runtime_error with "<source>:<line>: ..." context on malformed
// input, an unsupported version, or any violated scenario invariant.
Scenario load_scenario(const std::string& path);
Scenario load_scenario(std::istream& in, const std::string& source = "<stream>");

}  // namespace crsense
