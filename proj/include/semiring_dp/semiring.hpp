#pragma once

// Semiring abstraction and the numerical semiring catalog.
//
// A semiring is described by a small value object exposing
//   value_type, zero(), one(), add(a, b), mul(a, b), eq(a, b)
// Every recurrence in this library is a template over that description, so
// the same code counts, optimizes, marginalizes or enumerates depending on
// which semiring object is passed in.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <ostream>
#include <string_view>
#include <tuple>

#include "semiring_dp/count.hpp"

namespace sdp {

template <class S>
concept Semiring = requires(const S& s, const typename S::value_type& a,
                            const typename S::value_type& b) {
  typename S::value_type;
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.add(a, b) } -> std::convertible_to<typename S::value_type>;
  { s.mul(a, b) } -> std::convertible_to<typename S::value_type>;
  { s.eq(a, b) } -> std::convertible_to<bool>;
};

/// A semiring whose add picks one operand under a total order.
/// `prefers(a, b)` is true when add(a, b) returns a.
template <class S>
concept SelectionSemiring = Semiring<S> && requires(const S& s, const typename S::value_type& a) {
  { s.prefers(a, a) } -> std::convertible_to<bool>;
};

template <Semiring S>
using value_t = typename S::value_type;

/// Relative tolerance used for floating carriers.
inline constexpr double kRelTol = 1e-9;
/// Absolute floor near zero.
inline constexpr double kAbsTol = 1e-12;

inline bool approx_equal(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
  if (a == b) return true;  // covers matching infinities
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= std::max(abs, rel * scale);
}

/// (N, +, x, 0, 1) over a checked 128-bit counter.
struct Counting {
  using value_type = Count;
  static constexpr std::string_view name = "count";
  Count zero() const { return Count{0}; }
  Count one() const { return Count{1}; }
  Count add(Count a, Count b) const { return a + b; }
  Count mul(Count a, Count b) const { return a * b; }
  bool eq(Count a, Count b) const { return a == b; }
};

inline Counting counting_semiring() { return {}; }

/// (B, or, and, F, T).
struct Boolean {
  using value_type = bool;
  static constexpr std::string_view name = "bool";
  bool zero() const { return false; }
  bool one() const { return true; }
  bool add(bool a, bool b) const { return a || b; }
  bool mul(bool a, bool b) const { return a && b; }
  bool eq(bool a, bool b) const { return a == b; }
  bool prefers(bool a, bool b) const { return a || !b; }
};

/// (R, +, x, 0, 1): likelihoods and probabilities.
struct Real {
  using value_type = double;
  static constexpr std::string_view name = "prob";
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double add(double a, double b) const { return a + b; }
  double mul(double a, double b) const { return a * b; }
  bool eq(double a, double b) const { return approx_equal(a, b); }
};

/// Tropical (R u {inf}, min, +, inf, 0).
struct MinPlus {
  using value_type = double;
  static constexpr std::string_view name = "minplus";
  double zero() const { return std::numeric_limits<double>::infinity(); }
  double one() const { return 0.0; }
  double add(double a, double b) const { return std::min(a, b); }
  double mul(double a, double b) const { return a + b; }
  bool eq(double a, double b) const { return approx_equal(a, b); }
  bool prefers(double a, double b) const { return a <= b; }
};

/// (R u {-inf}, max, +, -inf, 0).
struct MaxPlus {
  using value_type = double;
  static constexpr std::string_view name = "maxplus";
  double zero() const { return -std::numeric_limits<double>::infinity(); }
  double one() const { return 0.0; }
  double add(double a, double b) const { return std::max(a, b); }
  double mul(double a, double b) const { return a + b; }
  bool eq(double a, double b) const { return approx_equal(a, b); }
  bool prefers(double a, double b) const { return a >= b; }
};

/// (R+, max, x, 0, 1): most probable configuration.
struct MaxTimes {
  using value_type = double;
  static constexpr std::string_view name = "maxtimes";
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double add(double a, double b) const { return std::max(a, b); }
  double mul(double a, double b) const { return a * b; }
  bool eq(double a, double b) const { return approx_equal(a, b); }
  bool prefers(double a, double b) const { return a >= b; }
};

/// Differentiable minimum: add is -ln(e^-x + e^-y), identity +inf.
struct Softmax {
  using value_type = double;
  static constexpr std::string_view name = "softmax";
  double zero() const { return std::numeric_limits<double>::infinity(); }
  double one() const { return 0.0; }
  double add(double a, double b) const {
    if (std::isinf(a) && a > 0) return b;
    if (std::isinf(b) && b > 0) return a;
    // min(x, y) - ln(1 + e^-|x-y|) avoids underflow for large arguments.
    return std::min(a, b) - std::log1p(std::exp(-std::fabs(a - b)));
  }
  double mul(double a, double b) const { return a + b; }
  bool eq(double a, double b) const { return approx_equal(a, b); }
};

/// Fuzzy / bottleneck ([0,1], max, min, 0, 1).
struct Bottleneck {
  using value_type = double;
  static constexpr std::string_view name = "bottleneck";
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double add(double a, double b) const { return std::max(a, b); }
  double mul(double a, double b) const { return std::min(a, b); }
  bool eq(double a, double b) const { return approx_equal(a, b); }
  bool prefers(double a, double b) const { return a >= b; }
};

/// Pair (value x, weight p) of the expectation semiring.
struct ExpectationValue {
  double value = 0.0;
  double weight = 0.0;
  friend bool operator==(const ExpectationValue&, const ExpectationValue&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ExpectationValue& e) {
    return os << '(' << e.value << ", " << e.weight << ')';
  }
};

/// Expectation semiring on (x, p):
///   (x, p) + (y, q) = (x + y, p + q)
///   (x, p) * (y, q) = (p y + q x, p q)
/// The multiplicative identity forced by these operations is (0, 1).
/// `tabulated_one()` returns the (1, 0) pair found in common semiring tables,
/// which is not an identity for this product; it is kept for comparison.
struct Expectation {
  using value_type = ExpectationValue;
  static constexpr std::string_view name = "expectation";
  ExpectationValue zero() const { return {0.0, 0.0}; }
  ExpectationValue one() const { return {0.0, 1.0}; }
  static ExpectationValue tabulated_one() { return {1.0, 0.0}; }
  ExpectationValue add(const ExpectationValue& a, const ExpectationValue& b) const {
    return {a.value + b.value, a.weight + b.weight};
  }
  ExpectationValue mul(const ExpectationValue& a, const ExpectationValue& b) const {
    return {a.weight * b.value + b.weight * a.value, a.weight * b.weight};
  }
  bool eq(const ExpectationValue& a, const ExpectationValue& b) const {
    return approx_equal(a.value, b.value) && approx_equal(a.weight, b.weight);
  }
};

/// The numerical catalog, in a fixed order.
using StandardSemirings =
    std::tuple<Counting, Boolean, Real, MinPlus, MaxPlus, MaxTimes, Softmax, Bottleneck, Expectation>;

inline StandardSemirings standard_semirings() { return {}; }

/// ⊕-fold of a range of semiring values.
template <Semiring S, class Range>
value_t<S> sum(const S& s, const Range& values) {
  value_t<S> acc = s.zero();
  for (const auto& v : values) acc = s.add(acc, v);
  return acc;
}

/// ⊗-fold of a range of semiring values, left to right.
template <Semiring S, class Range>
value_t<S> product(const S& s, const Range& values) {
  value_t<S> acc = s.one();
  for (const auto& v : values) acc = s.mul(acc, v);
  return acc;
}

}  // namespace sdp
