#pragma once

// Segmented least-squares regression: per-interval fit costs e(i, j) wired
// into the segmentation recurrences.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiring_dp/algorithms.hpp"
#include "semiring_dp/labels.hpp"
#include "semiring_dp/semiring.hpp"
#include "semiring_dp/viterbi.hpp"

namespace sdp {

/// Samples y_1..y_N; all finite, N ≥ 1.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> samples);
  std::size_t size() const { return y_.size(); }
  double operator()(std::size_t n) const { return y_[n - 1]; }  // 1-based
  std::span<const double> values() const { return y_; }

 private:
  std::vector<double> y_;
};

enum class SegmentModel { constant, linear };

struct SegmentCostModel {
  SegmentModel model = SegmentModel::constant;
  double p = 2.0;       // error exponent, > 0
  double lambda = 0.0;  // per-segment penalty, ≥ 0
  void validate() const;
};

/// Fitted model on a segment: y ≈ intercept + slope * n (slope 0 for the
/// constant model). n is the 1-based sample index.
struct SegmentFit {
  double intercept = 0.0;
  double slope = 0.0;
  double at(std::size_t n) const { return intercept + slope * static_cast<double>(n); }
};

/// Fit costs e(i, j) = (1/p) Σ |y_n - f(n)|^p with least-squares parameters.
/// For p = 2 each query is O(1) from prefix sums of (1, n, n², y, n y, y²);
/// other exponents sum residuals directly.
class SegmentCosts {
 public:
  SegmentCosts(const TimeSeries& ts, SegmentCostModel model);

  std::size_t size() const { return y_.size(); }
  const SegmentCostModel& model() const { return model_; }
  SegmentFit fit(std::size_t i, std::size_t j) const;
  double cost(std::size_t i, std::size_t j) const;
  /// Reference cost by direct summation, independent of the prefix sums.
  double direct_cost(std::size_t i, std::size_t j) const;

 private:
  void check(std::size_t i, std::size_t j) const;
  SegmentFit centered_fit(std::size_t i, std::size_t j) const;

  std::vector<double> y_;
  SegmentCostModel model_;
  // Prefix sums over samples 1..k at index k.
  std::vector<double> sn_, snn_, sy_, sny_, syy_;
};

/// Direct least-squares fit of y over [i, j], computed about interval means.
SegmentFit least_squares_fit(std::span<const double> y, std::size_t i, std::size_t j, SegmentModel model);

/// Segment weight map w(i, j) = e(i, j) + λ.
inline auto regularized_weights(const SegmentCosts& costs) {
  return [&costs](const Segment& seg) { return costs.cost(seg.first, seg.last) + costs.model().lambda; };
}

/// Which segmentations are admissible.
struct SegmentConstraint {
  enum class Kind { none, count_range, min_length };
  Kind kind = Kind::none;
  std::size_t lo = 0;  // count_range: [lo, hi]; min_length: shortest segment must be ≥ lo (or == lo when exact)
  std::size_t hi = 0;
  bool exact = false;  // min_length only

  static SegmentConstraint unconstrained() { return {}; }
  static SegmentConstraint count(std::size_t l) { return {Kind::count_range, l, l, true}; }
  static SegmentConstraint count_range(std::size_t lo, std::size_t hi) { return {Kind::count_range, lo, hi, false}; }
  static SegmentConstraint min_length(std::size_t l, bool exact = false) { return {Kind::min_length, l, l, exact}; }

  /// Throws std::invalid_argument if infeasible for a series of length n.
  void validate(std::size_t n) const;
  std::string describe() const;
};

struct SegmentationResult {
  double cost = 0.0;
  std::vector<Segment> segments;
};

/// Optimal segmentation under a selection semiring over doubles (min-plus by
/// default), with the witness carried by the unambiguous tupled semiring.
template <SelectionSemiring S = MinPlus, class W>
SegmentationResult segment_series(std::size_t n, const W& weight, const SegmentConstraint& constraint,
                                  const S& base = S{}) {
  constraint.validate(n);
  const auto s = viterbi_simple_semiring<Segment>(base);
  const auto w = traced_weight(s, weight);
  typename decltype(s)::value_type best;
  switch (constraint.kind) {
    case SegmentConstraint::Kind::none: best = segment_opt(s, n, w); break;
    case SegmentConstraint::Kind::count_range: best = segment_fixed_count(s, n, constraint.lo, std::min(constraint.hi, n), w);
      break;
    case SegmentConstraint::Kind::min_length:
      best = segment_min_length(s, n,
                                constraint.exact ? Acceptance::exactly(static_cast<long>(constraint.lo))
                                                 : Acceptance::at_least(static_cast<long>(constraint.lo)),
                                w);
      break;
  }
  return {best.score, std::move(best.witness)};
}

template <SelectionSemiring S = MinPlus>
SegmentationResult segment_series(const SegmentCosts& costs, const SegmentConstraint& constraint,
                                  const S& base = S{}) {
  return segment_series(costs.size(), regularized_weights(costs), constraint, base);
}

/// True when `segments` are contiguous, in order, and cover [1, n].
bool is_cover(const std::vector<Segment>& segments, std::size_t n);

}  // namespace sdp
