#pragma once

// Constraint algebras and the lifted semiring S[M].
//
// A constraint algebra is a finite carrier M with a combine operator (and
// usually an identity). Lifting a semiring S over M gives dense vectors of
// S values indexed by M; the lifted product is a convolution under combine.
// Running an existing recurrence in S[M] and projecting onto the accepted
// carrier values evaluates the recurrence over constrained solutions only.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semiring_dp/semiring.hpp"

namespace sdp {

/// Predicate over carrier values.
class Acceptance {
 public:
  using Predicate = std::function<bool(long)>;

  Acceptance() : pred_([](long) { return true; }), text_("all") {}
  Acceptance(Predicate pred, std::string text) : pred_(std::move(pred)), text_(std::move(text)) {}

  static Acceptance all() { return {}; }
  static Acceptance none();
  static Acceptance exactly(long value);
  static Acceptance range(long lo, long hi);
  static Acceptance at_most(long hi);
  static Acceptance at_least(long lo);
  static Acceptance not_equal(long value);

  bool operator()(long value) const { return pred_(value); }
  const std::string& describe() const { return text_; }

 private:
  Predicate pred_;
  std::string text_;
};

enum class AlgebraKind {
  subset_size,
  min_count,
  max_count,
  abs_difference,
  existence,
  for_all,
  ordering,
  custom,
};

/// Finite constraint algebra (M, combine, identity) with an acceptance
/// predicate. Carrier elements are addressed by dense indices 0..size()-1;
/// `value(i)` gives the element each index stands for.
class ConstraintAlgebra {
 public:
  using Index = std::size_t;
  /// Returns nullopt when the result falls outside the carrier.
  using Combine = std::function<std::optional<Index>(Index, Index)>;
  /// Partial solver for one operand of combine given the other and the result.
  using Solve = std::function<std::optional<Index>(Index, Index)>;

  struct Definition {
    std::string name;
    AlgebraKind kind = AlgebraKind::custom;
    std::vector<long> values;
    Combine combine;
    std::optional<Index> identity;
    /// (a, m) -> b with combine(a, b) = m.
    Solve solve_right_operand;
    /// (m, v) -> a with combine(a, v) = m, i.e. m combined with v's inverse.
    Solve solve_left_operand;
    bool associative = true;
    Acceptance accept;
  };

  explicit ConstraintAlgebra(Definition def);

  const std::string& name() const { return def_.name; }
  AlgebraKind kind() const { return def_.kind; }
  std::size_t size() const { return def_.values.size(); }
  long value(Index i) const { return def_.values.at(i); }
  const std::vector<long>& values() const { return def_.values; }
  std::optional<Index> index_of(long value) const;

  std::optional<Index> combine(Index a, Index b) const { return def_.combine(a, b); }
  const std::optional<Index>& identity() const { return def_.identity; }
  bool has_identity() const { return def_.identity.has_value(); }
  bool is_associative() const { return def_.associative; }
  bool is_group_like() const {
    return static_cast<bool>(def_.solve_right_operand) && static_cast<bool>(def_.solve_left_operand);
  }

  /// b such that combine(a, b) == m.
  std::optional<Index> solve_right_operand(Index a, Index m) const;
  /// a such that combine(a, v) == m.
  std::optional<Index> solve_left_operand(Index m, Index v) const;

  bool accepts(Index i) const { return def_.accept(value(i)); }
  const Acceptance& acceptance() const { return def_.accept; }
  ConstraintAlgebra with_acceptance(Acceptance accept) const;

 private:
  Definition def_;
};

// Appendix-style catalog of constraint algebras.

/// (N, +, 0) truncated to {0..cap}: subset size, segment counts, event counts.
ConstraintAlgebra subset_size_algebra(long cap, Acceptance accept = {});
/// ({1..cap}, min, cap): minimum over mapped values.
ConstraintAlgebra min_count_algebra(long cap, Acceptance accept = {});
/// ({0..cap}, max, 0): maximum over mapped values.
ConstraintAlgebra max_count_algebra(long cap, Acceptance accept = {});
/// ({0..cap}, |x - y|, 0). Not associative; only left folds are meaningful.
ConstraintAlgebra abs_difference_algebra(long cap, Acceptance accept = {});
/// (B, or, F) with F=0, T=1.
ConstraintAlgebra existence_algebra(Acceptance accept = {});
/// (B, and, T) with F=0, T=1.
ConstraintAlgebra for_all_algebra(Acceptance accept = {});

/// Sequential-value ordering over positions 1..N of `values`: i ⪯ j = j when
/// i < j and relation(u_i, u_j), otherwise the annihilator z. Index N is z
/// (value -1). No identity and only left-associative, so it cannot build a
/// lifted semiring; it is consumed by filter folds and the ordered
/// sub-sequence recurrence. Accepts everything but z.
ConstraintAlgebra ordering_algebra(std::vector<double> values,
                                   std::function<bool(double, double)> relation);

/// Dense vector of semiring values indexed by carrier position.
template <class V>
struct LiftedVector {
  std::vector<V> entries;

  std::size_t size() const { return entries.size(); }
  // vector<bool> hands out proxies, so use the container's reference types.
  typename std::vector<V>::reference operator[](std::size_t i) { return entries[i]; }
  typename std::vector<V>::const_reference operator[](std::size_t i) const { return entries[i]; }

  friend bool operator==(const LiftedVector&, const LiftedVector&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LiftedVector& x) {
    os << '[';
    for (std::size_t i = 0; i < x.entries.size(); ++i) os << (i ? ", " : "") << x.entries[i];
    return os << ']';
  }
};

namespace detail {

template <Semiring S>
LiftedVector<value_t<S>> zero_vector(const S& base, std::size_t n) {
  return {std::vector<value_t<S>>(n, base.zero())};
}

template <class V>
void check_length(const LiftedVector<V>& x, const ConstraintAlgebra& alg) {
  if (x.size() != alg.size()) {
    throw std::invalid_argument("lifted vector length " + std::to_string(x.size()) +
                                " does not match carrier size " + std::to_string(alg.size()) +
                                " of algebra " + alg.name());
  }
}

inline void require_group(const ConstraintAlgebra& alg) {
  if (!alg.is_group_like()) {
    throw std::invalid_argument("algebra " + alg.name() + " has no inverses");
  }
}

}  // namespace detail

/// General lifted product: (x ⊗ y)_m = ⊕_{a ⊙ b = m} x_a ⊗ y_b.
/// At most |M|^2 base multiplications; combine results outside M are dropped.
template <Semiring S>
LiftedVector<value_t<S>> mul_general(const S& base, const ConstraintAlgebra& alg,
                                     const LiftedVector<value_t<S>>& x,
                                     const LiftedVector<value_t<S>>& y) {
  detail::check_length(x, alg);
  detail::check_length(y, alg);
  auto z = detail::zero_vector(base, alg.size());
  for (std::size_t a = 0; a < alg.size(); ++a) {
    for (std::size_t b = 0; b < alg.size(); ++b) {
      if (auto m = alg.combine(a, b)) z[*m] = base.add(z[*m], base.mul(x[a], y[b]));
    }
  }
  return z;
}

/// Lifted product using inverses: (x ⊗ y)_m = ⊕_a x_a ⊗ y_{a^-1 ⊙ m}.
/// Terms whose solved index leaves the carrier contribute zero.
template <Semiring S>
LiftedVector<value_t<S>> mul_group(const S& base, const ConstraintAlgebra& alg,
                                   const LiftedVector<value_t<S>>& x,
                                   const LiftedVector<value_t<S>>& y) {
  detail::require_group(alg);
  detail::check_length(x, alg);
  detail::check_length(y, alg);
  auto z = detail::zero_vector(base, alg.size());
  for (std::size_t m = 0; m < alg.size(); ++m) {
    for (std::size_t a = 0; a < alg.size(); ++a) {
      if (auto b = alg.solve_right_operand(a, m)) z[m] = base.add(z[m], base.mul(x[a], y[*b]));
    }
  }
  return z;
}

/// Lifted edge value: w at index v, base zero elsewhere.
template <Semiring S>
LiftedVector<value_t<S>> lift_edge(const S& base, const ConstraintAlgebra& alg,
                                   const value_t<S>& weight, std::size_t v) {
  if (v >= alg.size()) {
    throw std::out_of_range("constraint index " + std::to_string(v) + " outside carrier of " +
                            alg.name());
  }
  auto z = detail::zero_vector(base, alg.size());
  z[v] = weight;
  return z;
}

/// ⊕ of entries whose carrier value is accepted.
template <Semiring S>
value_t<S> project(const S& base, const ConstraintAlgebra& alg, const LiftedVector<value_t<S>>& x) {
  detail::check_length(x, alg);
  value_t<S> acc = base.zero();
  for (std::size_t m = 0; m < alg.size(); ++m) {
    if (alg.accepts(m)) acc = base.add(acc, x[m]);
  }
  return acc;
}

/// c ⊗ lift_edge(w, v) without building the edge vector: one pass over the
/// carrier, z[m ⊙ v] ⊕= c_m ⊗ w.
template <Semiring S>
LiftedVector<value_t<S>> mul_by_lifted_edge_general(const S& base, const ConstraintAlgebra& alg,
                                                    const LiftedVector<value_t<S>>& c,
                                                    const value_t<S>& weight, std::size_t v) {
  detail::check_length(c, alg);
  auto z = detail::zero_vector(base, alg.size());
  for (std::size_t m = 0; m < alg.size(); ++m) {
    if (auto r = alg.combine(m, v)) z[*r] = base.add(z[*r], base.mul(c[m], weight));
  }
  return z;
}

/// c ⊗ lift_edge(w, v) for group-like algebras: entry m is c_{m ⊙ v^-1} ⊗ w,
/// or zero when that index leaves the carrier.
template <Semiring S>
LiftedVector<value_t<S>> mul_by_lifted_edge_group(const S& base, const ConstraintAlgebra& alg,
                                                  const LiftedVector<value_t<S>>& c,
                                                  const value_t<S>& weight, std::size_t v) {
  detail::require_group(alg);
  detail::check_length(c, alg);
  auto z = detail::zero_vector(base, alg.size());
  for (std::size_t m = 0; m < alg.size(); ++m) {
    if (auto a = alg.solve_left_operand(m, v)) z[m] = base.mul(c[*a], weight);
  }
  return z;
}

/// c ⊗ lift_edge(w, v) using the per-algebra closed form. Every catalog
/// algebra runs in O(|M|); custom algebras fall back to the general loop.
template <Semiring S>
LiftedVector<value_t<S>> mul_by_lifted_edge_closed_form(const S& base, const ConstraintAlgebra& alg,
                                                        const LiftedVector<value_t<S>>& c,
                                                        const value_t<S>& weight, std::size_t v) {
  detail::check_length(c, alg);
  const std::size_t n = alg.size();
  auto z = detail::zero_vector(base, n);
  switch (alg.kind()) {
    case AlgebraKind::subset_size:
      return mul_by_lifted_edge_group(base, alg, c, weight, v);
    case AlgebraKind::min_count: {
      // min(m', v) = m: {m} below v, {m..max} at v, nothing above.
      for (std::size_t m = 0; m < v; ++m) z[m] = base.mul(c[m], weight);
      value_t<S> tail = base.zero();
      for (std::size_t m = v; m < n; ++m) tail = base.add(tail, c[m]);
      z[v] = base.mul(tail, weight);
      return z;
    }
    case AlgebraKind::max_count: {
      // max(m', v) = m: {m} above v, {0..m} at v, nothing below.
      value_t<S> head = base.zero();
      for (std::size_t m = 0; m <= v; ++m) head = base.add(head, c[m]);
      z[v] = base.mul(head, weight);
      for (std::size_t m = v + 1; m < n; ++m) z[m] = base.mul(c[m], weight);
      return z;
    }
    case AlgebraKind::abs_difference: {
      // |m' - v| = m: m' = v + m, or m' = v - m when m > 0.
      for (std::size_t m = 0; m < n; ++m) {
        value_t<S> acc = base.zero();
        if (v + m < n) acc = base.add(acc, c[v + m]);
        if (m > 0 && m <= v) acc = base.add(acc, c[v - m]);
        z[m] = base.mul(acc, weight);
      }
      return z;
    }
    case AlgebraKind::existence: {
      if (v == 0) {
        for (std::size_t m = 0; m < n; ++m) z[m] = base.mul(c[m], weight);
      } else {
        z[1] = base.mul(base.add(c[0], c[1]), weight);
      }
      return z;
    }
    case AlgebraKind::for_all: {
      if (v == 1) {
        for (std::size_t m = 0; m < n; ++m) z[m] = base.mul(c[m], weight);
      } else {
        z[0] = base.mul(base.add(c[0], c[1]), weight);
      }
      return z;
    }
    case AlgebraKind::ordering: {
      // Everything lands on v (chain extended) or on the annihilator.
      const std::size_t annihilator = n - 1;
      value_t<S> chained = base.zero();
      value_t<S> broken = base.zero();
      for (std::size_t m = 0; m < n; ++m) {
        if (alg.combine(m, v) == std::optional<std::size_t>(v) && v != annihilator) {
          chained = base.add(chained, c[m]);
        } else {
          broken = base.add(broken, c[m]);
        }
      }
      if (v != annihilator) z[v] = base.mul(chained, weight);
      z[annihilator] = base.add(z[annihilator], base.mul(broken, weight));
      return z;
    }
    case AlgebraKind::custom:
      break;
  }
  return mul_by_lifted_edge_general(base, alg, c, weight, v);
}

/// The lifted semiring S[M]: elementwise add, convolution product, zero
/// vector, and the unit vector at the algebra identity as one.
template <Semiring S>
class LiftedSemiring {
 public:
  using base_type = S;
  using value_type = LiftedVector<value_t<S>>;

  LiftedSemiring(S base, ConstraintAlgebra alg)
      : base_(std::move(base)), alg_(std::make_shared<const ConstraintAlgebra>(std::move(alg))) {
    if (!alg_->has_identity()) {
      throw std::invalid_argument("cannot lift over " + alg_->name() + ": algebra has no identity");
    }
  }

  value_type zero() const { return detail::zero_vector(base_, alg_->size()); }
  value_type one() const { return lift_edge(base_, *alg_, base_.one(), *alg_->identity()); }
  value_type add(const value_type& x, const value_type& y) const {
    detail::check_length(x, *alg_);
    detail::check_length(y, *alg_);
    value_type z = x;
    for (std::size_t m = 0; m < z.size(); ++m) z[m] = base_.add(x[m], y[m]);
    return z;
  }
  value_type mul(const value_type& x, const value_type& y) const {
    return mul_general(base_, *alg_, x, y);
  }
  bool eq(const value_type& x, const value_type& y) const {
    if (x.size() != y.size()) return false;
    for (std::size_t m = 0; m < x.size(); ++m) {
      if (!base_.eq(x[m], y[m])) return false;
    }
    return true;
  }

  const S& base() const { return base_; }
  const ConstraintAlgebra& algebra() const { return *alg_; }

 private:
  S base_;
  std::shared_ptr<const ConstraintAlgebra> alg_;
};

template <Semiring S>
LiftedSemiring<S> lifted_semiring(S base, ConstraintAlgebra alg) {
  return LiftedSemiring<S>(std::move(base), std::move(alg));
}

/// Lifted edge map w_M(e) = lift_edge(w(e), v(e)) for use with any recurrence.
template <Semiring S, class W, class V>
auto lifted_weight(const LiftedSemiring<S>& lifted, W weight, V constraint_map) {
  return [&lifted, weight = std::move(weight), constraint_map = std::move(constraint_map)](const auto& label) {
    return lift_edge(lifted.base(), lifted.algebra(), weight(label), constraint_map(label));
  };
}

}  // namespace sdp
