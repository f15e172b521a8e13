#include "semiring_dp/dag.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sdp {

Dag::Dag(std::vector<std::vector<std::size_t>> parents) : parents_(std::move(parents)) {
  if (parents_.empty()) throw std::invalid_argument("DAG needs at least one node");
  if (!parents_.front().empty()) throw std::invalid_argument("node 1 must be the source and have no parents");
  for (std::size_t v = 2; v <= parents_.size(); ++v) {
    auto ps = parents_[v - 1];
    if (ps.empty()) {
      throw std::invalid_argument("node " + std::to_string(v) + " has no parents; node 1 must be the unique source");
    }
    for (std::size_t p : ps) {
      if (p < 1 || p >= v) {
        throw std::invalid_argument("edge " + std::to_string(p) + "->" + std::to_string(v) +
                                    " violates topological order (parents must precede children)");
      }
    }
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) {
      throw std::invalid_argument("node " + std::to_string(v) + " lists a parent twice");
    }
  }
}

}  // namespace sdp
