#pragma once

#include <sstream>
#include <string>

namespace crsense {

// Small string-building helper for error messages.
template <typename... Args>
std::string strcat_(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace crsense
