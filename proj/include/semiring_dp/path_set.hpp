#pragma once

// The generator (formal language) semiring: finite sets of finite label
// sequences under union and cross-join. Evaluating a polymorphic recurrence
// here enumerates every solution it encodes, which makes it an exhaustive,
// exponential-cost reference for the efficient recurrences.

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semiring_dp/semiring.hpp"

namespace sdp {

template <class Label>
using Path = std::vector<Label>;

/// Storage cap for generated path sets.
struct Budget {
  std::size_t max_labels = 1'000'000;
  std::size_t max_paths = std::numeric_limits<std::size_t>::max();

  static Budget unlimited() {
    return {std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::size_t>::max()};
  }
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonically ordered set of label sequences (no duplicates).
template <class Label>
class PathSet {
 public:
  using path_type = Path<Label>;
  using container = std::set<path_type>;
  using const_iterator = typename container::const_iterator;

  PathSet() = default;
  PathSet(std::initializer_list<path_type> paths) {
    for (const auto& p : paths) insert(p);
  }

  /// {[]}: the set holding only the empty sequence.
  static PathSet unit() { return PathSet{path_type{}}; }
  /// {[label]}.
  static PathSet singleton(Label label) { return PathSet{path_type{std::move(label)}}; }

  bool insert(path_type p) {
    const std::size_t len = p.size();
    const bool added = paths_.insert(std::move(p)).second;
    if (added) labels_ += len;
    return added;
  }

  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }
  /// Total number of labels stored across all sequences.
  std::size_t label_count() const { return labels_; }
  bool contains(const path_type& p) const { return paths_.count(p) != 0; }

  const_iterator begin() const { return paths_.begin(); }
  const_iterator end() const { return paths_.end(); }

  friend bool operator==(const PathSet& a, const PathSet& b) { return a.paths_ == b.paths_; }

  friend std::ostream& operator<<(std::ostream& os, const PathSet& ps) {
    os << '{';
    bool first_path = true;
    for (const auto& p : ps.paths_) {
      if (!first_path) os << ", ";
      first_path = false;
      os << '[';
      for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
      os << ']';
    }
    return os << '}';
  }

 private:
  container paths_;
  std::size_t labels_ = 0;
};

namespace detail {

inline void check_budget(std::size_t paths, std::size_t labels, const Budget& budget) {
  if (labels > budget.max_labels || paths > budget.max_paths) {
    std::ostringstream msg;
    msg << "path set budget exceeded (" << paths << " paths, " << labels << " labels; cap "
        << budget.max_paths << " paths, " << budget.max_labels << " labels)";
    throw BudgetExceeded(msg.str());
  }
}

}  // namespace detail

template <class Label>
PathSet<Label> unite(const PathSet<Label>& x, const PathSet<Label>& y,
                     const Budget& budget = Budget::unlimited()) {
  const PathSet<Label>& big = x.size() >= y.size() ? x : y;
  const PathSet<Label>& small = x.size() >= y.size() ? y : x;
  PathSet<Label> out = big;
  for (const auto& p : small) {
    out.insert(p);
    detail::check_budget(out.size(), out.label_count(), budget);
  }
  return out;
}

/// Concatenates every sequence of x with every sequence of y.
template <class Label>
PathSet<Label> cross_join(const PathSet<Label>& x, const PathSet<Label>& y,
                          const Budget& budget = Budget::unlimited()) {
  PathSet<Label> out;
  for (const auto& a : x) {
    for (const auto& b : y) {
      Path<Label> joined;
      joined.reserve(a.size() + b.size());
      joined.insert(joined.end(), a.begin(), a.end());
      joined.insert(joined.end(), b.begin(), b.end());
      out.insert(std::move(joined));
      detail::check_budget(out.size(), out.label_count(), budget);
    }
  }
  return out;
}

/// ({[E]}, union, cross-join, {}, {[]}).
template <class Label>
class GeneratorSemiring {
 public:
  using value_type = PathSet<Label>;
  static constexpr std::string_view name = "generator";

  GeneratorSemiring() = default;
  explicit GeneratorSemiring(Budget budget) : budget_(budget) {}

  value_type zero() const { return {}; }
  value_type one() const { return value_type::unit(); }
  value_type add(const value_type& a, const value_type& b) const { return unite(a, b, budget_); }
  value_type mul(const value_type& a, const value_type& b) const { return cross_join(a, b, budget_); }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }

  const Budget& budget() const { return budget_; }

 private:
  Budget budget_{};
};

/// Edge-path map w'(e) = {[e]}.
struct SingletonPaths {
  template <class Label>
  PathSet<Label> operator()(const Label& label) const {
    return PathSet<Label>::singleton(label);
  }
};

template <class Label>
GeneratorSemiring<Label> generator_semiring(Budget budget = {}) {
  return GeneratorSemiring<Label>(budget);
}

/// Explicit label -> value table; lookups of unknown labels throw
/// std::out_of_range naming the label.
template <class Label, class Value>
class WeightMap {
 public:
  WeightMap() = default;
  WeightMap(std::initializer_list<std::pair<const Label, Value>> init) : table_(init) {}

  void set(const Label& label, Value v) { table_[label] = std::move(v); }

  const Value& operator()(const Label& label) const {
    auto it = table_.find(label);
    if (it == table_.end()) {
      std::ostringstream msg;
      msg << "no weight for label " << label;
      throw std::out_of_range(msg.str());
    }
    return it->second;
  }

 private:
  std::map<Label, Value> table_;
};

/// The semiring homomorphism g_{S,w}: ⊕ over paths of the ⊗-fold of mapped
/// labels. The empty path contributes one; the empty set yields zero.
template <Semiring S, class Label, class W>
value_t<S> hom_eval(const S& s, const W& weight, const PathSet<Label>& paths) {
  value_t<S> total = s.zero();
  for (const auto& path : paths) {
    value_t<S> term = s.one();
    for (const auto& label : path) term = s.mul(term, weight(label));
    total = s.add(total, term);
  }
  return total;
}

}  // namespace sdp
