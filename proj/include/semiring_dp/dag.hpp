#pragma once

#include <cstddef>
#include <vector>

#include "semiring_dp/labels.hpp"
#include "semiring_dp/semiring.hpp"

namespace sdp {

/// DAG over nodes 1..N listed in topological order: node 1 is the only
/// source and every parent of v is smaller than v.
class Dag {
 public:
  /// `parents[v - 1]` lists the parents of node v. Throws
  /// std::invalid_argument when the ordering or source invariants fail.
  explicit Dag(std::vector<std::vector<std::size_t>> parents);

  std::size_t node_count() const { return parents_.size(); }
  const std::vector<std::size_t>& parents(std::size_t v) const { return parents_.at(v - 1); }

 private:
  std::vector<std::vector<std::size_t>> parents_;
};

/// f_1 = one, f_v = ⊕_{p ∈ parents(v)} f_p ⊗ w(p, v); returns f_N.
template <Semiring S, class W>
value_t<S> dag_bellman(const S& s, const Dag& dag, const W& weight) {
  std::vector<value_t<S>> f;
  f.reserve(dag.node_count());
  f.push_back(s.one());
  for (std::size_t v = 2; v <= dag.node_count(); ++v) {
    value_t<S> acc = s.zero();
    for (std::size_t p : dag.parents(v)) acc = s.add(acc, s.mul(f[p - 1], weight(Edge{p, v})));
    f.push_back(std::move(acc));
  }
  return f.back();
}

}  // namespace sdp
