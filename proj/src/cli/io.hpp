#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sdp::cli {

/// Bad flags or flag combinations (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input, or a constraint the data cannot satisfy
/// (exit code 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single numeric column. Blank lines and lines starting with '#' are
/// skipped; `skip_header` drops the first non-comment line.
std::vector<double> read_numeric_column(const std::string& path, bool skip_header);

/// Whitespace-separated tokens when the file contains any whitespace
/// between symbols, otherwise one symbol per character. A trailing newline
/// is ignored.
std::vector<std::string> read_symbols(const std::string& path);

}  // namespace sdp::cli
