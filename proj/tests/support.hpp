#pragma once

// Shared by the unit tests and the acceptance runner: random generators,
// the semiring law checker and brute-force enumerators that do not go
// through any recurrence in the library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "semiring_dp/algorithms.hpp"
#include "semiring_dp/labels.hpp"
#include "semiring_dp/semiring.hpp"
#include "semiring_dp/viterbi.hpp"

namespace sdp::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Draws mix identities and annihilators in with ordinary values so the
// identity and annihilation laws see them on both sides.
inline Count random_value(const Counting&, Rng& rng) {
  return Count{static_cast<std::uint64_t>(pick(rng, 0, 1000))};
}
inline bool random_value(const Boolean&, Rng& rng) { return coin(rng); }
inline double random_value(const Real&, Rng& rng) { return coin(rng, 0.1) ? 0.0 : uniform(rng, 0.0, 3.0); }
inline double random_value(const MinPlus&, Rng& rng) {
  return coin(rng, 0.1) ? std::numeric_limits<double>::infinity() : uniform(rng, -10.0, 10.0);
}
inline double random_value(const MaxPlus&, Rng& rng) {
  return coin(rng, 0.1) ? -std::numeric_limits<double>::infinity() : uniform(rng, -10.0, 10.0);
}
inline double random_value(const MaxTimes&, Rng& rng) { return coin(rng, 0.1) ? 0.0 : uniform(rng, 0.0, 3.0); }
inline double random_value(const Softmax&, Rng& rng) {
  return coin(rng, 0.1) ? std::numeric_limits<double>::infinity() : uniform(rng, -5.0, 5.0);
}
inline double random_value(const Bottleneck&, Rng& rng) {
  const double r = uniform(rng, 0.0, 1.0);
  return r < 0.05 ? 0.0 : (r < 0.1 ? 1.0 : r);
}
inline ExpectationValue random_value(const Expectation&, Rng& rng) {
  return {uniform(rng, -3.0, 3.0), uniform(rng, 0.0, 2.0)};
}

struct LawReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the semiring axioms on `trials` random triples.
template <Semiring S, class Gen>
LawReport check_semiring_laws(const S& s, Gen gen, Rng& rng, std::size_t trials,
                              bool commutative_add = true) {
  LawReport report;
  auto expect = [&](bool holds, const char* law, const auto& a, const auto& b, const auto& c) {
    ++report.checks;
    if (!holds && report.failures.size() < 5) {
      std::ostringstream os;
      os << law << " fails for a=" << a << " b=" << b << " c=" << c;
      report.failures.push_back(os.str());
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = gen(rng), b = gen(rng), c = gen(rng);
    expect(s.eq(s.add(s.add(a, b), c), s.add(a, s.add(b, c))), "add associativity", a, b, c);
    if (commutative_add) expect(s.eq(s.add(a, b), s.add(b, a)), "add commutativity", a, b, c);
    expect(s.eq(s.add(a, s.zero()), a) && s.eq(s.add(s.zero(), a), a), "additive identity", a, b, c);
    expect(s.eq(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c))), "mul associativity", a, b, c);
    expect(s.eq(s.mul(a, s.one()), a) && s.eq(s.mul(s.one(), a), a), "multiplicative identity", a, b, c);
    expect(s.eq(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c))), "left distributivity", a, b, c);
    expect(s.eq(s.mul(s.add(a, b), c), s.add(s.mul(a, c), s.mul(b, c))), "right distributivity", a, b, c);
    expect(s.eq(s.mul(a, s.zero()), s.zero()) && s.eq(s.mul(s.zero(), a), s.zero()), "annihilation", a, b, c);
  }
  return report;
}

template <Semiring S>
LawReport check_catalog_semiring(const S& s, Rng& rng, std::size_t trials) {
  return check_semiring_laws(s, [&s](Rng& r) { return random_value(s, r); }, rng, trials);
}

// ---------------------------------------------------------------------------
// Brute-force enumerators

/// Every segmentation of 1..n, from bitmasks of cut positions.
inline std::vector<std::vector<Segment>> all_segmentations(std::size_t n) {
  std::vector<std::vector<Segment>> out;
  if (n == 0) return out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<Segment> segs;
    std::size_t first = 1;
    for (std::size_t k = 1; k < n; ++k) {
      if (mask >> (k - 1) & 1u) {
        segs.push_back({first, k});
        first = k + 1;
      }
    }
    segs.push_back({first, n});
    out.push_back(std::move(segs));
  }
  return out;
}

/// Every monotone lattice path from (0,0) to (n,m) with unit steps
/// right, down and diagonal.
inline std::vector<std::vector<Step>> all_alignments(std::size_t n, std::size_t m) {
  std::vector<std::vector<Step>> out;
  std::vector<Step> path;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    if (i == n && j == m) {
      out.push_back(path);
      return;
    }
    if (i < n && j < m) {
      path.push_back({StepKind::match, i + 1, j + 1});
      walk(i + 1, j + 1);
      path.pop_back();
    }
    if (i < n) {
      path.push_back({StepKind::deletion, i + 1, j});
      walk(i + 1, j);
      path.pop_back();
    }
    if (j < m) {
      path.push_back({StepKind::insertion, i, j + 1});
      walk(i, j + 1);
      path.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

/// Every subset of 1..n as an increasing index list, in bitmask order.
inline std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1u) s.push_back(k + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Paths 1 = v_0 -> ... -> v_k = n through a parent list.
inline std::vector<std::vector<Edge>> all_dag_paths(const std::vector<std::vector<std::size_t>>& parents) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> rev;
  std::function<void(std::size_t)> back = [&](std::size_t v) {
    if (v == 1) {
      out.emplace_back(rev.rbegin(), rev.rend());
      return;
    }
    for (std::size_t p : parents[v - 1]) {
      rev.push_back({p, v});
      back(p);
      rev.pop_back();
    }
  };
  back(parents.size());
  return out;
}

/// Random DAG in topological order with node 1 as the only source.
inline std::vector<std::vector<std::size_t>> random_dag(Rng& rng, std::size_t n) {
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t v = 2; v <= n; ++v) {
    for (std::size_t p = 1; p < v; ++p) {
      if (coin(rng, 0.5)) parents[v - 1].push_back(p);
    }
    if (parents[v - 1].empty()) parents[v - 1].push_back(pick(rng, 1, v - 1));
  }
  return parents;
}

inline Count binomial(std::size_t n, std::size_t k) {
  if (k > n) return Count{0};
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Count{r};
}

/// ⊗-fold of a weight map along a label sequence.
template <Semiring S, class W, class Labels>
value_t<S> path_weight(const S& s, const W& w, const Labels& labels) {
  value_t<S> acc = s.one();
  for (const auto& l : labels) acc = s.mul(acc, w(l));
  return acc;
}

}  // namespace sdp::testing
