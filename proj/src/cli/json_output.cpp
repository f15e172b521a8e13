#include "cli/json_output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sdp::cli {

Json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json number_json(const Count& c) {
  if (c.fits_u64()) return c.to_u64();
  return c.to_string();
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sdp::cli
