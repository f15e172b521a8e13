#include "semiring_dp/algorithms.hpp"

#include <cmath>
#include <cstdint>

namespace sdp {

Count delannoy(std::size_t n, std::size_t m) {
  // D(i, j) = D(i-1, j) + D(i, j-1) + D(i-1, j-1), D = 1 on both axes.
  std::vector<Count> prev(m + 1, Count{1}), cur(m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = Count{1};
    for (std::size_t j = 1; j <= m; ++j) cur[j] = prev[j] + cur[j - 1] + prev[j - 1];
    std::swap(prev, cur);
  }
  return prev[m];
}

std::function<bool(double, double)> chain_relation(ChainRelation r) {
  switch (r) {
    case ChainRelation::less: return [](double a, double b) { return a < b; };
    case ChainRelation::less_equal: return [](double a, double b) { return a <= b; };
    case ChainRelation::subset: break;
  }
  return [](double a, double b) {
    const auto x = static_cast<std::uint64_t>(a);
    const auto y = static_cast<std::uint64_t>(b);
    return (x & y) == x;
  };
}

LisResult lis(std::span<const double> values) {
  const auto s = viterbi_simple_semiring<std::size_t>(MaxPlus{});
  const auto w = [&s](std::size_t n) { return s.lift(1.0, n); };
  const auto best = ordered_subsequences(s, values, std::less<double>{}, w);
  if (values.empty()) return {};
  return {static_cast<std::size_t>(std::llround(best.score)), best.witness};
}

}  // namespace sdp
