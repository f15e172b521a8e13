#include "cli/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

namespace sdp::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

}  // namespace

std::vector<double> read_numeric_column(const std::string& path, bool skip_header) {
  std::ifstream in = open(path);
  std::vector<double> out;
  std::string line;
  bool header_pending = skip_header;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string field = trim(line);
    if (field.empty() || field.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
      throw DataError(path + ":" + std::to_string(lineno) + ": expected one finite number, got '" + field + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> read_symbols(const std::string& path) {
  std::ifstream in = open(path);
  const std::string text = trim(std::string(std::istreambuf_iterator<char>(in), {}));
  std::vector<std::string> out;
  if (text.find_first_of(" \t\r\n") != std::string::npos) {
    std::istringstream tokens(text);
    for (std::string t; tokens >> t;) out.push_back(t);
  } else {
    for (char c : text) out.emplace_back(1, c);
  }
  return out;
}

}  // namespace sdp::cli
