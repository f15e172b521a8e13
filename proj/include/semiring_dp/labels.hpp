#pragma once

// Decision labels attached to the edges of each recurrence. They are what
// the generator semiring enumerates and what tupled semirings return as
// witnesses. All indices are 1-based.

#include <compare>
#include <cstddef>
#include <ostream>

namespace sdp {

/// DAG edge (parent, child).
struct Edge {
  std::size_t parent = 0;
  std::size_t child = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << '(' << e.parent << "->" << e.child << ')';
  }
};

/// Segment covering samples first..last inclusive.
struct Segment {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t length() const { return last - first + 1; }
  friend auto operator<=>(const Segment&, const Segment&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Segment& s) {
    return os << '(' << s.first << ',' << s.last << ')';
  }
};

enum class StepKind { match, deletion, insertion };

/// Alignment step entering cell (i, j). A match consumes both positions, a
/// deletion consumes position i of the first sequence, an insertion
/// position j of the second.
struct Step {
  StepKind kind = StepKind::match;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t misalignment() const { return i > j ? i - j : j - i; }
  friend auto operator<=>(const Step&, const Step&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Step& s) {
    const char tag = s.kind == StepKind::match ? 'M' : (s.kind == StepKind::deletion ? 'D' : 'I');
    return os << tag << '(' << s.i << ',' << s.j << ')';
  }
};

/// Occurrence (occurs = true) or non-occurrence of event `index`.
struct Event {
  bool occurs = false;
  std::size_t index = 0;
  friend auto operator<=>(const Event&, const Event&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Event& e) {
    return os << '(' << (e.occurs ? 1 : 0) << ',' << e.index << ')';
  }
};

}  // namespace sdp
