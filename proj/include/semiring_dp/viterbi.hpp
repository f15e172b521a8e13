#pragma once

// Tupled selection semirings: carry an optimal score together with the
// decision labels that achieve it, so no backtracking pass is needed.

#include <ostream>
#include <utility>
#include <vector>

#include "semiring_dp/path_set.hpp"
#include "semiring_dp/semiring.hpp"

namespace sdp {

/// Score with a single witness sequence.
template <class V, class Label>
struct Traced {
  V score;
  std::vector<Label> witness;
  friend bool operator==(const Traced&, const Traced&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Traced& t) {
    os << '(' << t.score << ", [";
    for (std::size_t i = 0; i < t.witness.size(); ++i) os << (i ? "," : "") << t.witness[i];
    return os << "])";
  }
};

/// Score with every co-optimal witness sequence.
template <class V, class Label>
struct TracedSet {
  V score;
  PathSet<Label> witnesses;
  friend bool operator==(const TracedSet&, const TracedSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const TracedSet& t) {
    return os << '(' << t.score << ", " << t.witnesses << ')';
  }
};

/// Ambiguous tupling: ties merge witness sets, products add scores and
/// cross-join witnesses. Identities (zero, {}) and (one, {[]}).
template <SelectionSemiring Base, class Label>
class ViterbiSemiring {
 public:
  using base_type = Base;
  using label_type = Label;
  using value_type = TracedSet<value_t<Base>, Label>;

  ViterbiSemiring() = default;
  explicit ViterbiSemiring(Base base) : base_(std::move(base)) {}

  value_type zero() const { return {base_.zero(), {}}; }
  value_type one() const { return {base_.one(), PathSet<Label>::unit()}; }

  value_type add(const value_type& a, const value_type& b) const {
    const bool a_wins = base_.prefers(a.score, b.score);
    const bool b_wins = base_.prefers(b.score, a.score);
    if (a_wins && b_wins) return {a.score, unite(a.witnesses, b.witnesses)};
    return a_wins ? a : b;
  }

  value_type mul(const value_type& a, const value_type& b) const {
    value_type out{base_.mul(a.score, b.score), cross_join(a.witnesses, b.witnesses)};
    if (base_.eq(out.score, base_.zero())) out.witnesses = {};
    return out;
  }

  bool eq(const value_type& a, const value_type& b) const {
    return base_.eq(a.score, b.score) && a.witnesses == b.witnesses;
  }

  /// (score, {[label]}).
  value_type lift(const value_t<Base>& score, const Label& label) const {
    return {score, PathSet<Label>::singleton(label)};
  }

  const Base& base() const { return base_; }

 private:
  Base base_{};
};

/// Unambiguous tupling: add keeps the left operand unless the right one is
/// strictly better; mul adds scores and concatenates witnesses. A zero score
/// carries an empty witness.
template <SelectionSemiring Base, class Label>
class ViterbiSimpleSemiring {
 public:
  using base_type = Base;
  using label_type = Label;
  using value_type = Traced<value_t<Base>, Label>;

  ViterbiSimpleSemiring() = default;
  explicit ViterbiSimpleSemiring(Base base) : base_(std::move(base)) {}

  value_type zero() const { return {base_.zero(), {}}; }
  value_type one() const { return {base_.one(), {}}; }

  value_type add(const value_type& a, const value_type& b) const {
    return base_.prefers(a.score, b.score) ? a : b;
  }

  value_type mul(const value_type& a, const value_type& b) const {
    value_type out{base_.mul(a.score, b.score), {}};
    if (base_.eq(out.score, base_.zero())) return out;
    out.witness.reserve(a.witness.size() + b.witness.size());
    out.witness.insert(out.witness.end(), a.witness.begin(), a.witness.end());
    out.witness.insert(out.witness.end(), b.witness.begin(), b.witness.end());
    return out;
  }

  bool eq(const value_type& a, const value_type& b) const {
    return base_.eq(a.score, b.score) && a.witness == b.witness;
  }

  value_type lift(const value_t<Base>& score, const Label& label) const { return {score, {label}}; }

  const Base& base() const { return base_; }

 private:
  Base base_{};
};

template <class Label, SelectionSemiring Base>
ViterbiSemiring<Base, Label> viterbi_semiring(Base base) {
  return ViterbiSemiring<Base, Label>(std::move(base));
}

template <class Label, SelectionSemiring Base>
ViterbiSimpleSemiring<Base, Label> viterbi_simple_semiring(Base base) {
  return ViterbiSimpleSemiring<Base, Label>(std::move(base));
}

/// Wraps a plain weight map w: label -> score into the tupled weight
/// label -> (w(label), [label]).
template <class Tupled, class W>
auto traced_weight(const Tupled& semiring, W weight) {
  return [&semiring, weight = std::move(weight)](const typename Tupled::label_type& label) {
    return semiring.lift(weight(label), label);
  };
}

}  // namespace sdp
