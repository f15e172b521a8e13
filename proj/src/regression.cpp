#include "semiring_dp/regression.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdp {

namespace {

// Beyond this length the prefix-sum variance loses too many digits.
constexpr std::size_t kCenteredThreshold = 10'000;

}  // namespace

TimeSeries::TimeSeries(std::vector<double> samples) : y_(std::move(samples)) {
  if (y_.empty()) throw std::invalid_argument("time series is empty");
  for (std::size_t n = 0; n < y_.size(); ++n) {
    if (!std::isfinite(y_[n])) throw std::invalid_argument("sample " + std::to_string(n + 1) + " is not finite");
  }
}

void SegmentCostModel::validate() const {
  if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("error exponent p must be positive and finite");
  if (!(lambda >= 0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite and non-negative");
}

SegmentFit least_squares_fit(std::span<const double> y, std::size_t i, std::size_t j, SegmentModel model) {
  const double k = static_cast<double>(j - i + 1);
  double mean_y = 0.0;
  for (std::size_t n = i; n <= j; ++n) mean_y += y[n - 1];
  mean_y /= k;
  if (model == SegmentModel::constant || i == j) return {mean_y, 0.0};
  const double mean_x = 0.5 * static_cast<double>(i + j);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t n = i; n <= j; ++n) {
    const double dx = static_cast<double>(n) - mean_x;
    sxx += dx * dx;
    sxy += dx * (y[n - 1] - mean_y);
  }
  const double slope = sxy / sxx;
  return {mean_y - slope * mean_x, slope};
}

SegmentCosts::SegmentCosts(const TimeSeries& ts, SegmentCostModel model)
    : y_(ts.values().begin(), ts.values().end()), model_(model) {
  model_.validate();
  const std::size_t n = y_.size();
  sn_.assign(n + 1, 0.0);
  snn_.assign(n + 1, 0.0);
  sy_.assign(n + 1, 0.0);
  sny_.assign(n + 1, 0.0);
  syy_.assign(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    const double x = static_cast<double>(k);
    const double y = y_[k - 1];
    sn_[k] = sn_[k - 1] + x;
    snn_[k] = snn_[k - 1] + x * x;
    sy_[k] = sy_[k - 1] + y;
    sny_[k] = sny_[k - 1] + x * y;
    syy_[k] = syy_[k - 1] + y * y;
  }
}

void SegmentCosts::check(std::size_t i, std::size_t j) const {
  if (i < 1 || i > j || j > y_.size()) {
    throw std::out_of_range("segment (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1, " +
                            std::to_string(y_.size()) + "]");
  }
}

SegmentFit SegmentCosts::centered_fit(std::size_t i, std::size_t j) const {
  return least_squares_fit(y_, i, j, model_.model);
}

SegmentFit SegmentCosts::fit(std::size_t i, std::size_t j) const {
  check(i, j);
  const std::size_t len = j - i + 1;
  if (len > kCenteredThreshold) return centered_fit(i, j);
  const double k = static_cast<double>(len);
  const double sy = sy_[j] - sy_[i - 1];
  const double mean_y = sy / k;
  if (model_.model == SegmentModel::constant || len == 1) return {mean_y, 0.0};
  const double sn = sn_[j] - sn_[i - 1];
  const double sxx = (snn_[j] - snn_[i - 1]) - sn * sn / k;
  const double sxy = (sny_[j] - sny_[i - 1]) - sn * sy / k;
  const double slope = sxy / sxx;
  return {mean_y - slope * (sn / k), slope};
}

double SegmentCosts::cost(std::size_t i, std::size_t j) const {
  check(i, j);
  const std::size_t len = j - i + 1;
  if (model_.p != 2.0 || len > kCenteredThreshold) return direct_cost(i, j);
  if (len == 1) return 0.0;
  const double k = static_cast<double>(len);
  const double sy = sy_[j] - sy_[i - 1];
  double sse = (syy_[j] - syy_[i - 1]) - sy * sy / k;
  if (model_.model == SegmentModel::linear) {
    const double sn = sn_[j] - sn_[i - 1];
    const double sxx = (snn_[j] - snn_[i - 1]) - sn * sn / k;
    const double sxy = (sny_[j] - sny_[i - 1]) - sn * sy / k;
    sse -= sxy * sxy / sxx;
  }
  return 0.5 * std::max(sse, 0.0);
}

double SegmentCosts::direct_cost(std::size_t i, std::size_t j) const {
  check(i, j);
  const SegmentFit f = centered_fit(i, j);
  double total = 0.0;
  for (std::size_t n = i; n <= j; ++n) total += std::pow(std::fabs(y_[n - 1] - f.at(n)), model_.p);
  return total / model_.p;
}

void SegmentConstraint::validate(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("cannot segment an empty series");
  switch (kind) {
    case Kind::none: return;
    case Kind::count_range:
      if (lo < 1 || lo > hi) {
        throw std::invalid_argument("segment count range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    "] is empty");
      }
      if (lo > n) {
        throw std::invalid_argument("cannot split " + std::to_string(n) + " samples into " + std::to_string(lo) +
                                    " or more segments");
      }
      return;
    case Kind::min_length:
      if (lo < 1 || lo > n) {
        throw std::invalid_argument("minimum segment length " + std::to_string(lo) + " outside [1, " +
                                    std::to_string(n) + "]");
      }
      return;
  }
}

std::string SegmentConstraint::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::none: os << "none"; break;
    case Kind::count_range:
      if (lo == hi) os << "count == " << lo;
      else os << "count in [" << lo << ", " << hi << "]";
      break;
    case Kind::min_length: os << "min length " << (exact ? "== " : ">= ") << lo; break;
  }
  return os.str();
}

bool is_cover(const std::vector<Segment>& segments, std::size_t n) {
  std::size_t next = 1;
  for (const Segment& s : segments) {
    if (s.first != next || s.last < s.first) return false;
    next = s.last + 1;
  }
  return next == n + 1 && !segments.empty();
}

}  // namespace sdp
