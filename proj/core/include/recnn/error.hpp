#pragma once

#include <stdexcept>
#include <string>

namespace recnn {

// Malformed byte streams: bad magic, bad header fields, truncation.
class FormatError : public std::runtime_error {
public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input whose content violates a contract
// (out-of-range label, duplicate manifest id, missing file, ...).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace recnn
