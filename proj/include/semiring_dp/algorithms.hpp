#pragma once

// Semiring-polymorphic recurrences. Each takes a semiring description and a
// weight map from decision labels (see labels.hpp) to semiring values, so
// the same code counts, optimizes, sums probabilities, or (with the
// generator semiring) enumerates every solution it factors.
//
// Public indices are 1-based; tables are stored 0-based.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiring_dp/constraint.hpp"
#include "semiring_dp/count.hpp"
#include "semiring_dp/dag.hpp"
#include "semiring_dp/labels.hpp"
#include "semiring_dp/semiring.hpp"
#include "semiring_dp/viterbi.hpp"

namespace sdp {

// ---------------------------------------------------------------------------
// Sub-sequences and combinations

/// All 2^N sub-sequences: f_n = f_{n-1} ⊗ (one ⊕ w(n)).
template <Semiring S, class W>
value_t<S> subsequences(const S& s, std::size_t n, const W& weight) {
  value_t<S> f = s.one();
  for (std::size_t k = 1; k <= n; ++k) f = s.mul(f, s.add(s.one(), weight(k)));
  return f;
}

/// The 2^N - 1 non-empty sub-sequences: f_n = f_{n-1} ⊕ (f_{n-1} ⊗ w(n)) ⊕ w(n).
template <Semiring S, class W>
value_t<S> nonempty_subsequences(const S& s, std::size_t n, const W& weight) {
  value_t<S> f = s.zero();
  for (std::size_t k = 1; k <= n; ++k) {
    const value_t<S> wk = weight(k);
    f = s.add(s.add(f, s.mul(f, wk)), wk);
  }
  return f;
}

/// Length-M sub-sequences in O(N M): f_{n,m} = f_{n-1,m} ⊕ f_{n-1,m-1} ⊗ w(n).
/// Returns zero when M > N.
template <Semiring S, class W>
value_t<S> combinations(const S& s, std::size_t n, std::size_t m, const W& weight) {
  if (m > n) return s.zero();
  std::vector<value_t<S>> f(m + 1, s.zero());
  f[0] = s.one();
  for (std::size_t k = 1; k <= n; ++k) {
    const value_t<S> wk = weight(k);
    for (std::size_t c = m; c >= 1; --c) f[c] = s.add(f[c], s.mul(f[c - 1], wk));
  }
  return f[m];
}

// ---------------------------------------------------------------------------
// Segmentation

/// f_0 = one, f_j = ⊕_{i ≤ j} f_{i-1} ⊗ w(i, j); returns f_N.
template <Semiring S, class W>
value_t<S> segment_opt(const S& s, std::size_t n, const W& weight) {
  std::vector<value_t<S>> f;
  f.reserve(n + 1);
  f.push_back(s.one());
  for (std::size_t j = 1; j <= n; ++j) {
    value_t<S> acc = s.zero();
    for (std::size_t i = 1; i <= j; ++i) acc = s.add(acc, s.mul(f[i - 1], weight(Segment{i, j})));
    f.push_back(std::move(acc));
  }
  return f[n];
}

/// Segment-count lifting with the group shift: f_{j,m} = ⊕_i f_{i-1,m-1} ⊗ w(i,j)
/// for m in 0..cap. Returns the row f_{N, ·}.
template <Semiring S, class W>
std::vector<value_t<S>> segment_count_row(const S& s, std::size_t n, std::size_t cap, const W& weight) {
  std::vector<std::vector<value_t<S>>> f(n + 1, std::vector<value_t<S>>(cap + 1, s.zero()));
  f[0][0] = s.one();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      const value_t<S> w = weight(Segment{i, j});
      for (std::size_t m = 1; m <= cap; ++m) f[j][m] = s.add(f[j][m], s.mul(f[i - 1][m - 1], w));
    }
  }
  return f[n];
}

/// Segmentations with a segment count in [lo, hi], in O(N^2 hi).
template <Semiring S, class W>
value_t<S> segment_fixed_count(const S& s, std::size_t n, std::size_t lo, std::size_t hi, const W& weight) {
  if (lo < 1 || lo > hi || hi > n) {
    throw std::invalid_argument("segment count range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                "] is empty or outside [1, " + std::to_string(n) + "]");
  }
  const auto row = segment_count_row(s, n, hi, weight);
  value_t<S> acc = s.zero();
  for (std::size_t m = lo; m <= hi; ++m) acc = s.add(acc, row[m]);
  return acc;
}

/// Minimum-segment-length lifting over ({1..N}, min, N). Returns the row
/// f_{N, ·} where entry k holds the segmentations whose shortest segment
/// has length k + 1. O(N^3).
template <Semiring S, class W>
std::vector<value_t<S>> segment_min_length_row(const S& s, std::size_t n, const W& weight) {
  if (n == 0) return {};
  std::vector<std::vector<value_t<S>>> f(n + 1, std::vector<value_t<S>>(n, s.zero()));
  std::vector<std::vector<value_t<S>>> tail(n + 1);  // tail[r][k] = ⊕_{k' ≥ k} f[r][k']
  f[0][n - 1] = s.one();
  auto close_row = [&](std::size_t r) {
    tail[r].assign(n, s.zero());
    value_t<S> acc = s.zero();
    for (std::size_t k = n; k-- > 0;) {
      acc = s.add(acc, f[r][k]);
      tail[r][k] = acc;
    }
  };
  close_row(0);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      const std::size_t d = j - i;  // index of length j - i + 1
      const value_t<S> w = weight(Segment{i, j});
      for (std::size_t k = 0; k < d; ++k) f[j][k] = s.add(f[j][k], s.mul(f[i - 1][k], w));
      f[j][d] = s.add(f[j][d], s.mul(tail[i - 1][d], w));
    }
    close_row(j);
  }
  return f[n];
}

/// Segmentations whose minimum segment length is accepted by `accept`
/// (a predicate over lengths 1..N).
template <Semiring S, class W>
value_t<S> segment_min_length(const S& s, std::size_t n, const Acceptance& accept, const W& weight) {
  const auto row = segment_min_length_row(s, n, weight);
  value_t<S> acc = s.zero();
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (accept(static_cast<long>(k + 1))) acc = s.add(acc, row[k]);
  }
  return acc;
}

/// Segmentations whose minimum segment length is exactly L.
template <Semiring S, class W>
value_t<S> segment_min_length(const S& s, std::size_t n, std::size_t min_length, const W& weight) {
  if (min_length < 1 || min_length > n) {
    throw std::invalid_argument("minimum segment length " + std::to_string(min_length) + " outside [1, " +
                                std::to_string(n) + "]");
  }
  return segment_min_length(s, n, Acceptance::exactly(static_cast<long>(min_length)), weight);
}

// ---------------------------------------------------------------------------
// Sequence alignment

/// Maps a cost table cost(i, j) (with cost(i, 0) deletion and cost(0, j)
/// insertion) onto alignment step labels.
template <class Cost>
auto alignment_weight(Cost cost) {
  return [cost = std::move(cost)](const Step& step) {
    switch (step.kind) {
      case StepKind::match: return cost(step.i, step.j);
      case StepKind::deletion: return cost(step.i, std::size_t{0});
      case StepKind::insertion: break;
    }
    return cost(std::size_t{0}, step.j);
  };
}

/// Needleman-Wunsch over any semiring, O(N M) with two rolling rows.
template <Semiring S, class W>
value_t<S> nw_align(const S& s, std::size_t n, std::size_t m, const W& weight) {
  std::vector<value_t<S>> prev(m + 1, s.zero()), cur(m + 1, s.zero());
  prev[0] = s.one();
  for (std::size_t j = 1; j <= m; ++j) prev[j] = s.mul(prev[j - 1], weight(Step{StepKind::insertion, 0, j}));
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = s.mul(prev[0], weight(Step{StepKind::deletion, i, 0}));
    for (std::size_t j = 1; j <= m; ++j) {
      value_t<S> acc = s.mul(prev[j - 1], weight(Step{StepKind::match, i, j}));
      acc = s.add(acc, s.mul(prev[j], weight(Step{StepKind::deletion, i, j})));
      acc = s.add(acc, s.mul(cur[j - 1], weight(Step{StepKind::insertion, i, j})));
      cur[j] = std::move(acc);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

/// Delannoy numbers D(n, m) from their own recurrence (independent of nw_align).
Count delannoy(std::size_t n, std::size_t m);

namespace detail {

// acc[k] ⊕= c[k - d] ⊗ w for k ≥ d: the shift product for (N, +, 0).
template <Semiring S>
void accumulate_shifted(const S& s, std::vector<value_t<S>>& acc, const std::vector<value_t<S>>& c,
                        std::size_t d, const value_t<S>& w) {
  for (std::size_t k = d; k < acc.size(); ++k) acc[k] = s.add(acc[k], s.mul(c[k - d], w));
}

// acc ⊕= c ⊗_max lift(w, d) for the ({0..N'}, max, 0) algebra.
template <Semiring S>
void accumulate_max(const S& s, std::vector<value_t<S>>& acc, const std::vector<value_t<S>>& c, std::size_t d,
                    const value_t<S>& w) {
  if (d >= acc.size()) return;
  value_t<S> head = s.zero();
  for (std::size_t k = 0; k <= d; ++k) head = s.add(head, c[k]);
  acc[d] = s.add(acc[d], s.mul(head, w));
  for (std::size_t k = d + 1; k < acc.size(); ++k) acc[k] = s.add(acc[k], s.mul(c[k], w));
}

// Shared lifted alignment driver; `step` folds one predecessor vector into
// the accumulator for misalignment d.
template <Semiring S, class W, class StepFn>
std::vector<value_t<S>> lifted_alignment(const S& s, std::size_t n, std::size_t m, std::size_t width,
                                         const W& weight, StepFn step) {
  using Row = std::vector<std::vector<value_t<S>>>;
  const std::vector<value_t<S>> zeros(width, s.zero());
  Row prev(m + 1, zeros), cur(m + 1, zeros);
  prev[0][0] = s.one();
  for (std::size_t j = 1; j <= m; ++j) step(prev[j], prev[j - 1], j, weight(Step{StepKind::insertion, 0, j}));
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = zeros;
    step(cur[0], prev[0], i, weight(Step{StepKind::deletion, i, 0}));
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t d = i > j ? i - j : j - i;
      cur[j] = zeros;
      step(cur[j], prev[j - 1], d, weight(Step{StepKind::match, i, j}));
      step(cur[j], prev[j], d, weight(Step{StepKind::deletion, i, j}));
      step(cur[j], cur[j - 1], d, weight(Step{StepKind::insertion, i, j}));
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace detail

/// Alignments whose summed misalignment Σ|i - j| over visited cells is
/// accepted. Sums above `cap` are truncated, so `accept` should only accept
/// values ≤ cap. O(N M cap).
template <Semiring S, class W>
value_t<S> nw_align_sum_constrained(const S& s, std::size_t n, std::size_t m, std::size_t cap,
                                    const Acceptance& accept, const W& weight) {
  auto step = [&s](std::vector<value_t<S>>& acc, const std::vector<value_t<S>>& c, std::size_t d,
                   const value_t<S>& w) { detail::accumulate_shifted(s, acc, c, d, w); };
  const auto last = detail::lifted_alignment(s, n, m, cap + 1, weight, step);
  value_t<S> out = s.zero();
  for (std::size_t k = 0; k <= cap; ++k) {
    if (accept(static_cast<long>(k))) out = s.add(out, last[k]);
  }
  return out;
}

/// Alignments with Σ|i - j| ≤ max_sum.
template <Semiring S, class W>
value_t<S> nw_align_sum_constrained(const S& s, std::size_t n, std::size_t m, std::size_t max_sum,
                                    const W& weight) {
  return nw_align_sum_constrained(s, n, m, max_sum, Acceptance::at_most(static_cast<long>(max_sum)), weight);
}

/// Alignments whose largest misalignment max|i - j| is accepted, over the
/// carrier {0..max(N, M)}. O(N M max(N, M)).
template <Semiring S, class W>
value_t<S> nw_align_max_constrained(const S& s, std::size_t n, std::size_t m, const Acceptance& accept,
                                    const W& weight) {
  const std::size_t width = std::max(n, m) + 1;
  auto step = [&s](std::vector<value_t<S>>& acc, const std::vector<value_t<S>>& c, std::size_t d,
                   const value_t<S>& w) { detail::accumulate_max(s, acc, c, d, w); };
  const auto last = detail::lifted_alignment(s, n, m, width, weight, step);
  value_t<S> out = s.zero();
  for (std::size_t k = 0; k < width; ++k) {
    if (accept(static_cast<long>(k))) out = s.add(out, last[k]);
  }
  return out;
}

/// Alignments with max|i - j| ≤ max_misalignment.
template <Semiring S, class W>
value_t<S> nw_align_max_constrained(const S& s, std::size_t n, std::size_t m, std::size_t max_misalignment,
                                    const W& weight) {
  if (max_misalignment > std::max(n, m)) {
    throw std::invalid_argument("maximum misalignment " + std::to_string(max_misalignment) + " exceeds max(N, M) = " +
                                std::to_string(std::max(n, m)));
  }
  return nw_align_max_constrained(s, n, m, Acceptance::at_most(static_cast<long>(max_misalignment)), weight);
}

// ---------------------------------------------------------------------------
// Discrete event combinations

/// Every occurrence pattern: f_n = f_{n-1} ⊗ (w((0,n)) ⊕ w((1,n))).
template <Semiring S, class W>
value_t<S> event_sequences(const S& s, std::size_t n, const W& weight) {
  value_t<S> f = s.one();
  for (std::size_t k = 1; k <= n; ++k) f = s.mul(f, s.add(weight(Event{false, k}), weight(Event{true, k})));
  return f;
}

/// Row f_{N, 0..max_count} of the occurrence-count recursion
/// f_{n,m} = f_{n-1,m} ⊗ w((0,n)) ⊕ f_{n-1,m-1} ⊗ w((1,n)).
template <Semiring S, class W>
std::vector<value_t<S>> events_row(const S& s, std::size_t n, std::size_t max_count, const W& weight) {
  std::vector<value_t<S>> f(max_count + 1, s.zero());
  f[0] = s.one();
  for (std::size_t k = 1; k <= n; ++k) {
    const value_t<S> absent = weight(Event{false, k});
    const value_t<S> present = weight(Event{true, k});
    for (std::size_t c = max_count; c >= 1; --c) f[c] = s.add(s.mul(f[c], absent), s.mul(f[c - 1], present));
    f[0] = s.mul(f[0], absent);
  }
  return f;
}

/// Exactly M of N events occur. Zero when M > N.
template <Semiring S, class W>
value_t<S> events_m_of_n(const S& s, std::size_t n, std::size_t m, const W& weight) {
  if (m > n) return s.zero();
  return events_row(s, n, m, weight)[m];
}

// ---------------------------------------------------------------------------
// Ordered sub-sequences

enum class ChainRelation { less, less_equal, subset };

/// Binary relation between consecutive chain values. `subset` reads the
/// values as non-negative integer bit masks ordered by inclusion.
std::function<bool(double, double)> chain_relation(ChainRelation r);

/// Non-empty sub-sequences whose consecutive values satisfy `relation`,
/// O(N^2): f_n = w(n) ⊕ (⊕_{m < n, R(u_m, u_n)} f_m) ⊗ w(n), projected by ⊕.
template <Semiring S, class W, class R>
value_t<S> ordered_subsequences(const S& s, std::span<const double> values, const R& relation,
                                const W& weight) {
  const std::size_t n = values.size();
  std::vector<value_t<S>> f;
  f.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const value_t<S> wk = weight(k);
    value_t<S> pred = s.zero();
    for (std::size_t p = 1; p < k; ++p) {
      if (relation(values[p - 1], values[k - 1])) pred = s.add(pred, f[p - 1]);
    }
    f.push_back(s.add(wk, s.mul(pred, wk)));
  }
  return sum(s, f);
}

struct LisResult {
  std::size_t length = 0;
  std::vector<std::size_t> witness;  // 1-based positions, increasing
};

/// Longest strictly increasing sub-sequence via the ordered recurrence in
/// the tupled max-plus semiring with unit weights.
LisResult lis(std::span<const double> values);

}  // namespace sdp
