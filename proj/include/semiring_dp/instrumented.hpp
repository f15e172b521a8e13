#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "semiring_dp/semiring.hpp"

namespace sdp {

struct OpCounts {
  std::uint64_t add = 0;
  std::uint64_t mul = 0;
  std::uint64_t total() const { return add + mul; }
};

/// Counts add/mul calls made through it. Copies share one counter, so a
/// semiring passed by value into a recurrence still reports back. Not
/// thread-safe; give each invocation its own instance.
template <Semiring S>
class Instrumented {
 public:
  using base_type = S;
  using value_type = value_t<S>;

  Instrumented() : counts_(std::make_shared<OpCounts>()) {}
  explicit Instrumented(S base) : base_(std::move(base)), counts_(std::make_shared<OpCounts>()) {}

  value_type zero() const { return base_.zero(); }
  value_type one() const { return base_.one(); }
  value_type add(const value_type& a, const value_type& b) const {
    ++counts_->add;
    return base_.add(a, b);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    ++counts_->mul;
    return base_.mul(a, b);
  }
  bool eq(const value_type& a, const value_type& b) const { return base_.eq(a, b); }

  bool prefers(const value_type& a, const value_type& b) const
    requires SelectionSemiring<S>
  {
    return base_.prefers(a, b);
  }

  const S& base() const { return base_; }
  const OpCounts& counts() const { return *counts_; }
  void reset() const { *counts_ = {}; }

 private:
  S base_{};
  std::shared_ptr<OpCounts> counts_;
};

}  // namespace sdp
