#include "semiring_dp/constraint.hpp"

#include <algorithm>
#include <cstdlib>

namespace sdp {

Acceptance Acceptance::none() {
  return {[](long) { return false; }, "none"};
}

Acceptance Acceptance::exactly(long value) {
  return {[value](long m) { return m == value; }, "m == " + std::to_string(value)};
}

Acceptance Acceptance::range(long lo, long hi) {
  return {[lo, hi](long m) { return lo <= m && m <= hi; },
          std::to_string(lo) + " <= m <= " + std::to_string(hi)};
}

Acceptance Acceptance::at_most(long hi) {
  return {[hi](long m) { return m <= hi; }, "m <= " + std::to_string(hi)};
}

Acceptance Acceptance::at_least(long lo) {
  return {[lo](long m) { return m >= lo; }, "m >= " + std::to_string(lo)};
}

Acceptance Acceptance::not_equal(long value) {
  return {[value](long m) { return m != value; }, "m != " + std::to_string(value)};
}

ConstraintAlgebra::ConstraintAlgebra(Definition def) : def_(std::move(def)) {
  if (def_.values.empty()) throw std::invalid_argument("constraint algebra " + def_.name + " has an empty carrier");
  if (!def_.combine) throw std::invalid_argument("constraint algebra " + def_.name + " has no combine operator");
  if (def_.identity && *def_.identity >= def_.values.size()) {
    throw std::invalid_argument("identity of " + def_.name + " lies outside its carrier");
  }
}

std::optional<ConstraintAlgebra::Index> ConstraintAlgebra::index_of(long value) const {
  auto it = std::find(def_.values.begin(), def_.values.end(), value);
  if (it == def_.values.end()) return std::nullopt;
  return static_cast<Index>(it - def_.values.begin());
}

std::optional<ConstraintAlgebra::Index> ConstraintAlgebra::solve_right_operand(Index a, Index m) const {
  if (!def_.solve_right_operand) throw std::invalid_argument("algebra " + def_.name + " has no inverses");
  return def_.solve_right_operand(a, m);
}

std::optional<ConstraintAlgebra::Index> ConstraintAlgebra::solve_left_operand(Index m, Index v) const {
  if (!def_.solve_left_operand) throw std::invalid_argument("algebra " + def_.name + " has no inverses");
  return def_.solve_left_operand(m, v);
}

ConstraintAlgebra ConstraintAlgebra::with_acceptance(Acceptance accept) const {
  Definition def = def_;
  def.accept = std::move(accept);
  return ConstraintAlgebra(std::move(def));
}

namespace {

using Index = ConstraintAlgebra::Index;

void require_positive(long cap, const char* what) {
  if (cap < 1) throw std::invalid_argument(std::string(what) + " cap must be positive");
}

std::vector<long> iota_values(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

ConstraintAlgebra subset_size_algebra(long cap, Acceptance accept) {
  if (cap < 0) throw std::invalid_argument("subset size cap must be non-negative");
  const Index n = static_cast<Index>(cap) + 1;
  ConstraintAlgebra::Definition def;
  def.name = "subset-size(" + std::to_string(cap) + ")";
  def.kind = AlgebraKind::subset_size;
  def.values = iota_values(0, cap);
  def.combine = [n](Index a, Index b) -> std::optional<Index> {
    if (a + b < n) return a + b;
    return std::nullopt;
  };
  def.identity = 0;
  def.solve_right_operand = [](Index a, Index m) -> std::optional<Index> {
    if (m >= a) return m - a;
    return std::nullopt;
  };
  def.solve_left_operand = [](Index m, Index v) -> std::optional<Index> {
    if (m >= v) return m - v;
    return std::nullopt;
  };
  def.accept = std::move(accept);
  return ConstraintAlgebra(std::move(def));
}

ConstraintAlgebra min_count_algebra(long cap, Acceptance accept) {
  require_positive(cap, "minimum count");
  ConstraintAlgebra::Definition def;
  def.name = "min-count(" + std::to_string(cap) + ")";
  def.kind = AlgebraKind::min_count;
  def.values = iota_values(1, cap);  // index i holds value i + 1
  def.combine = [](Index a, Index b) -> std::optional<Index> { return std::min(a, b); };
  def.identity = static_cast<Index>(cap - 1);
  def.accept = std::move(accept);
  return ConstraintAlgebra(std::move(def));
}

ConstraintAlgebra max_count_algebra(long cap, Acceptance accept) {
  if (cap < 0) throw std::invalid_argument("maximum count cap must be non-negative");
  ConstraintAlgebra::Definition def;
  def.name = "max-count(" + std::to_string(cap) + ")";
  def.kind = AlgebraKind::max_count;
  def.values = iota_values(0, cap);
  def.combine = [](Index a, Index b) -> std::optional<Index> { return std::max(a, b); };
  def.identity = 0;
  def.accept = std::move(accept);
  return ConstraintAlgebra(std::move(def));
}

ConstraintAlgebra abs_difference_algebra(long cap, Acceptance accept) {
  require_positive(cap, "absolute difference");
  ConstraintAlgebra::Definition def;
  def.name = "abs-difference(" + std::to_string(cap) + ")";
  def.kind = AlgebraKind::abs_difference;
  def.values = iota_values(0, cap);
  def.combine = [](Index a, Index b) -> std::optional<Index> { return a > b ? a - b : b - a; };
  def.identity = 0;
  def.associative = false;
  def.accept = std::move(accept);
  return ConstraintAlgebra(std::move(def));
}

ConstraintAlgebra existence_algebra(Acceptance accept) {
  ConstraintAlgebra::Definition def;
  def.name = "existence";
  def.kind = AlgebraKind::existence;
  def.values = {0, 1};
  def.combine = [](Index a, Index b) -> std::optional<Index> { return (a == 1 || b == 1) ? 1 : 0; };
  def.identity = 0;
  def.accept = std::move(accept);
  return ConstraintAlgebra(std::move(def));
}

ConstraintAlgebra for_all_algebra(Acceptance accept) {
  ConstraintAlgebra::Definition def;
  def.name = "for-all";
  def.kind = AlgebraKind::for_all;
  def.values = {0, 1};
  def.combine = [](Index a, Index b) -> std::optional<Index> { return (a == 1 && b == 1) ? 1 : 0; };
  def.identity = 1;
  def.accept = std::move(accept);
  return ConstraintAlgebra(std::move(def));
}

ConstraintAlgebra ordering_algebra(std::vector<double> values,
                                   std::function<bool(double, double)> relation) {
  const Index n = values.size();
  ConstraintAlgebra::Definition def;
  def.name = "ordering(" + std::to_string(n) + ")";
  def.kind = AlgebraKind::ordering;
  def.values = iota_values(1, static_cast<long>(n));
  def.values.push_back(-1);  // annihilator z
  def.combine = [n, values = std::move(values), relation = std::move(relation)](
                    Index a, Index b) -> std::optional<Index> {
    if (a < n && b < n && a < b && relation(values[a], values[b])) return b;
    return n;
  };
  def.associative = false;
  def.accept = Acceptance::not_equal(-1);
  return ConstraintAlgebra(std::move(def));
}

}  // namespace sdp
