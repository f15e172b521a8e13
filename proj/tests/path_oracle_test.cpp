#include <gtest/gtest.h>

#include "semiring_dp/oracle.hpp"
#include "semiring_dp/path_set.hpp"
#include "support.hpp"

namespace sdp {
namespace {

using testing::Rng;
using Paths = PathSet<std::size_t>;

Paths random_paths(Rng& rng) {
  Paths out;
  const std::size_t count = testing::pick(rng, 0, 3);
  for (std::size_t k = 0; k < count; ++k) {
    Path<std::size_t> p(testing::pick(rng, 0, 2));
    for (auto& l : p) l = testing::pick(rng, 1, 3);
    out.insert(std::move(p));
  }
  return out;
}

TEST(PathSet, UnitAndSingleton) {
  EXPECT_EQ(Paths::unit().size(), 1u);
  EXPECT_TRUE(Paths::unit().contains({}));
  EXPECT_TRUE(Paths::singleton(4).contains({4}));
  EXPECT_EQ(Paths{}.size(), 0u);
}

TEST(PathSet, CrossJoinConcatenates) {
  const Paths x{{1}, {2}}, y{{3}, {}};
  const Paths expected{{1, 3}, {1}, {2, 3}, {2}};
  EXPECT_EQ(cross_join(x, y), expected);
  EXPECT_EQ(unite(x, y), (Paths{{1}, {2}, {3}, {}}));
}

TEST(PathSet, DuplicatesCollapse) {
  Paths x;
  EXPECT_TRUE(x.insert({1, 2}));
  EXPECT_FALSE(x.insert({1, 2}));
  EXPECT_EQ(x.label_count(), 2u);
}

TEST(GeneratorSemiring, SatisfiesLaws) {
  Rng rng(3);
  const auto g = generator_semiring<std::size_t>(Budget::unlimited());
  const auto report = testing::check_semiring_laws(g, random_paths, rng, 300);
  for (const auto& f : report.failures) ADD_FAILURE() << f;
}

TEST(GeneratorSemiring, BudgetExceededThrows) {
  const auto g = generator_semiring<std::size_t>(Budget{1'000'000, 3});
  const Paths x{{1}, {2}};
  EXPECT_THROW(g.mul(x, x), BudgetExceeded);
  EXPECT_NO_THROW(g.add(x, Paths{{3}}));
  const auto tight = generator_semiring<std::size_t>(Budget{2, 100});
  EXPECT_THROW(tight.mul(Paths{{1, 2}}, Paths{{3}}), BudgetExceeded);
}

TEST(HomEval, IsAHomomorphism) {
  Rng rng(5);
  const std::vector<double> weights{0.0, 1.5, -2.0, 0.25};
  const auto w = [&](std::size_t l) { return weights[l]; };
  const MaxPlus s;
  for (int t = 0; t < 300; ++t) {
    const Paths x = random_paths(rng), y = random_paths(rng);
    EXPECT_TRUE(s.eq(hom_eval(s, w, unite(x, y)), s.add(hom_eval(s, w, x), hom_eval(s, w, y))));
    EXPECT_TRUE(s.eq(hom_eval(s, w, cross_join(x, y)), s.mul(hom_eval(s, w, x), hom_eval(s, w, y))));
  }
  EXPECT_EQ(hom_eval(s, w, Paths{}), s.zero());
  EXPECT_EQ(hom_eval(s, w, Paths::unit()), s.one());
}

TEST(HomEval, CountsPaths) {
  const Paths x{{1, 2}, {3}, {}};
  EXPECT_EQ(hom_eval(Counting{}, [](std::size_t) { return Count{1}; }, x), Count{3});
}

TEST(WeightMap, MissingLabelNamesIt) {
  const WeightMap<std::size_t, double> w{{1, 0.5}};
  EXPECT_EQ(w(1), 0.5);
  try {
    w(9);
    FAIL() << "expected out_of_range";
  } catch (const std::out_of_range& e) {
    EXPECT_NE(std::string(e.what()).find("9"), std::string::npos);
  }
}

TEST(Filter, SubsetSizeKeepsExactLength) {
  const auto alg = subset_size_algebra(5, Acceptance::exactly(2));
  const auto one = [](std::size_t) { return std::size_t{1}; };
  const Paths x{{1}, {1, 2}, {2, 3}, {1, 2, 3}, {}};
  EXPECT_EQ(filter_paths(alg, one, x), (Paths{{1, 2}, {2, 3}}));
  EXPECT_EQ(filtered_eval(Counting{}, [](std::size_t) { return Count{1}; }, alg, one, x), Count{2});
}

TEST(Filter, FoldLeavesCarrierWhenTruncated) {
  const auto alg = subset_size_algebra(1);
  const auto one = [](std::size_t) { return std::size_t{1}; };
  EXPECT_EQ(constraint_fold<std::size_t>(alg, one, {1}), std::optional<std::size_t>(1));
  EXPECT_EQ(constraint_fold<std::size_t>(alg, one, {1, 2}), std::nullopt);
}

TEST(Filter, OrderingNeedsNonEmptyChain) {
  const auto alg = ordering_algebra({3.0, 1.0, 2.0}, std::less<double>{});
  const auto idx = [](std::size_t k) { return k - 1; };
  EXPECT_EQ(constraint_fold<std::size_t>(alg, idx, {}), std::nullopt);
  const Paths x{{1}, {2, 3}, {1, 3}, {1, 2}};
  EXPECT_EQ(filter_paths(alg, idx, x), (Paths{{1}, {2, 3}}));
}

}  // namespace
}  // namespace sdp
