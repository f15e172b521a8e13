#pragma once

// Generate-filter-evaluate reference: fold a constraint along each generated
// path, keep the accepted ones, then evaluate them homomorphically.

#include <optional>

#include "semiring_dp/constraint.hpp"
#include "semiring_dp/path_set.hpp"

namespace sdp {

/// Left fold h_l = h_{l-1} ⊙ v(e_l) from the identity. Algebras without an
/// identity start from the first label and yield nullopt for the empty path.
/// A combine step leaving the carrier also yields nullopt.
template <class Label, class V>
std::optional<ConstraintAlgebra::Index> constraint_fold(const ConstraintAlgebra& alg,
                                                        const V& constraint_map,
                                                        const Path<Label>& path) {
  std::optional<ConstraintAlgebra::Index> h = alg.identity();
  std::size_t start = 0;
  if (!h) {
    if (path.empty()) return std::nullopt;
    h = constraint_map(path.front());
    start = 1;
  }
  for (std::size_t l = start; l < path.size(); ++l) {
    h = alg.combine(*h, constraint_map(path[l]));
    if (!h) return std::nullopt;
  }
  return h;
}

/// φ: keeps the paths whose folded constraint value is accepted.
template <class Label, class V>
PathSet<Label> filter_paths(const ConstraintAlgebra& alg, const V& constraint_map,
                            const PathSet<Label>& paths) {
  PathSet<Label> kept;
  for (const auto& path : paths) {
    auto h = constraint_fold<Label>(alg, constraint_map, path);
    if (h && alg.accepts(*h)) kept.insert(path);
  }
  return kept;
}

/// g · φ applied to an already generated path set.
template <Semiring S, class Label, class W, class V>
value_t<S> filtered_eval(const S& s, const W& weight, const ConstraintAlgebra& alg,
                         const V& constraint_map, const PathSet<Label>& paths) {
  return hom_eval(s, weight, filter_paths(alg, constraint_map, paths));
}

}  // namespace sdp
