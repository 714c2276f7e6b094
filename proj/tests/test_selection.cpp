#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "l0path/error.hpp"
#include "l0path/selection.hpp"
#include "oracles.hpp"

namespace l0path {
namespace {

using testing::dense_scan;
using testing::LossPattern;
using testing::random_losses;
using testing::unit_complexities;

const std::vector<double> kLinear{4, 3, 2, 1, 0};
const std::vector<double> kSqrt{4, 5 - std::sqrt(2.0), 5 - std::sqrt(3.0), 3,
                                5 - std::sqrt(5.0)};

TEST(CrossoverPenalty, Examples) {
  EXPECT_EQ(crossover_penalty(4, 1, 0, 5), 1.0);
  EXPECT_NEAR(crossover_penalty(4, 1, 5 - std::sqrt(2.0), 2), std::sqrt(2.0) - 1, 1e-15);
  for (const double d : {0.25, 3.0, 1024.0}) {
    EXPECT_EQ(crossover_penalty(10.0, 7, 10.0 - d, 8), d);
  }
  EXPECT_NEAR(crossover_penalty(10.0, 7, 10.0 - 1e-6, 8), 1e-6, 1e-15);
}

TEST(CrossoverPenalty, RejectsParallelOrInvertedLines) {
  EXPECT_THROW(crossover_penalty(4, 2, 0, 2), Error);
  EXPECT_THROW(crossover_penalty(4, 3, 0, 2), Error);
  try {
    crossover_penalty(4, 3, 0, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateCrossing);
  }
}

TEST(ExactPath, LinearLossesSelectEndpointsOnly) {
  const auto r = exact_path(validate_losses(kLinear));
  EXPECT_EQ(r.path.models, (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(r.path.breakpoints, (std::vector<double>{kInfinity, 1.0, 0.0}));
  EXPECT_EQ(r.stats.per_step, (std::vector<std::size_t>{1, 2, 2, 2}));
  EXPECT_EQ(r.stats.total, 7u);

  // Independent check against the dense-scan oracle.
  const auto scanned = dense_scan(kLinear, unit_complexities(5), 10.0);
  EXPECT_EQ(scanned.models, r.path.models);
  ASSERT_EQ(scanned.breakpoints.size(), 1u);
  EXPECT_NEAR(scanned.breakpoints[0], 1.0, 1e-12);
}

TEST(ExactPath, SqrtLossesSelectEveryModel) {
  const auto r = exact_path(validate_losses(kSqrt));
  EXPECT_EQ(r.path.models, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  const std::vector<double> expected{std::sqrt(2.0) - 1, std::sqrt(3.0) - std::sqrt(2.0),
                                     2 - std::sqrt(3.0), std::sqrt(5.0) - 2};
  ASSERT_EQ(r.path.breakpoints.size(), 6u);
  EXPECT_EQ(r.path.breakpoints.front(), kInfinity);
  EXPECT_EQ(r.path.breakpoints.back(), 0.0);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(r.path.breakpoints[i + 1], expected[i], 1e-14);
  }
  EXPECT_EQ(r.stats.total, 4u);

  const auto scanned = dense_scan(kSqrt, unit_complexities(5), 10.0);
  EXPECT_EQ(scanned.models, r.path.models);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(scanned.breakpoints[i], r.path.breakpoints[i + 1], 1e-12);
  }
}

TEST(ExactPath, SingleModel) {
  const std::vector<double> raw{42.0};
  const auto r = exact_path(validate_losses(raw));
  EXPECT_EQ(r.path.models, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.path.breakpoints, (std::vector<double>{kInfinity, 0.0}));
  EXPECT_TRUE(r.stats.per_step.empty());
  EXPECT_EQ(r.stats.total, 0u);
}

// Both branches of the third step: a small L_3 removes model 2, a large one
// keeps it.
TEST(ExactPath, ThirdStepRemovesOrKeepsModelTwo) {
  const std::vector<double> small{10, 6, 0};  // c(3,2) = 6 >= c(2,1) = 4
  const auto removed = exact_path(validate_losses(small));
  EXPECT_EQ(removed.path.models, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(removed.path.breakpoints, (std::vector<double>{kInfinity, 5.0, 0.0}));
  EXPECT_EQ(removed.stats.per_step, (std::vector<std::size_t>{1, 2}));

  const std::vector<double> large{10, 6, 5};  // c(3,2) = 1 < 4
  const auto kept = exact_path(validate_losses(large));
  EXPECT_EQ(kept.path.models, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(kept.path.breakpoints, (std::vector<double>{kInfinity, 4.0, 1.0, 0.0}));
  EXPECT_EQ(kept.stats.per_step, (std::vector<std::size_t>{1, 1}));
}

// A candidate equal to the stored breakpoint removes it.
TEST(ExactPath, EqualCandidateRemovesBreakpoint) {
  const std::vector<double> collinear{10, 8, 6};
  const auto r = exact_path(validate_losses(collinear));
  EXPECT_EQ(r.path.models, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(r.stats.total, 3u);
}

TEST(EvaluateSelection, Examples) {
  const auto seq = validate_losses(kLinear);
  EXPECT_EQ(evaluate_selection(seq, 0.0), 5u);
  EXPECT_EQ(evaluate_selection(seq, 10.0), 1u);
  EXPECT_EQ(evaluate_selection(seq, 1.0), 1u);
}

TEST(EvaluateSelection, RejectsBadPenalty) {
  const auto seq = validate_losses(kLinear);
  try {
    evaluate_selection(seq, -0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativePenalty);
  }
  EXPECT_THROW(evaluate_selection(seq, std::nan("")), Error);
  EXPECT_THROW(evaluate_selection(seq, kInfinity), Error);
}

TEST(QueryPath, Examples) {
  const SelectionPath path{{1, 5}, {kInfinity, 1.0, 0.0}};
  EXPECT_EQ(query_path(path, 0.5), 5u);
  EXPECT_EQ(query_path(path, 1.0), 1u);
  EXPECT_EQ(query_path(path, 1000.0), 1u);
  EXPECT_EQ(query_path(path, 0.0), 5u);
  EXPECT_THROW(query_path(path, -1.0), Error);
}

TEST(QueryPath, TiesAtEveryBreakpointMatchDirectScan) {
  // Integer data, so the costs at each breakpoint tie exactly.
  const std::vector<double> losses{20, 12, 6, 2, 0};
  const auto seq = validate_losses(losses);
  const auto path = exact_path(seq).path;
  for (std::size_t j = 1; j + 1 < path.breakpoints.size(); ++j) {
    const double b = path.breakpoints[j];
    EXPECT_EQ(query_path(path, b), path.models[j - 1]);
    EXPECT_EQ(query_path(path, b), evaluate_selection(seq, b));
  }
}

class RandomInstances : public ::testing::TestWithParam<LossPattern> {};

TEST_P(RandomInstances, MatchesDirectScanEverywhere) {
  std::mt19937_64 rng(1234 + static_cast<int>(GetParam()));
  std::uniform_int_distribution<std::size_t> size(1, 200);
  for (int trial = 0; trial < 50; ++trial) {
    const auto losses = random_losses(rng, size(rng), GetParam());
    const auto seq = validate_losses(losses);
    const auto path = exact_path(seq).path;
    const double top = path.size() > 1 ? path.breakpoints[1] : 1.0;
    for (int q = 0; q < 1000; ++q) {
      const double lambda = 2.0 * top * (q + 0.5) / 1000.0;
      ASSERT_EQ(query_path(path, lambda), evaluate_selection(seq, lambda))
          << "trial " << trial << " lambda " << lambda;
    }
  }
}

TEST_P(RandomInstances, StructureAndIterationCounts) {
  std::mt19937_64 rng(99 + static_cast<int>(GetParam()));
  std::uniform_int_distribution<std::size_t> size(1, 1000);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const auto r = exact_path(validate_losses(random_losses(rng, n, GetParam())));
    const auto& p = r.path;
    ASSERT_GE(p.size(), 1u);
    ASSERT_LE(p.size(), n);
    EXPECT_EQ(p.models.front(), 1u);
    EXPECT_EQ(p.models.back(), n);
    EXPECT_EQ(p.breakpoints.front(), kInfinity);
    EXPECT_EQ(p.breakpoints.back(), 0.0);
    ASSERT_EQ(p.breakpoints.size(), p.size() + 1);
    for (std::size_t j = 1; j < p.size(); ++j) {
      EXPECT_LT(p.models[j - 1], p.models[j]);
    }
    for (std::size_t j = 1; j < p.breakpoints.size(); ++j) {
      EXPECT_GT(p.breakpoints[j - 1], p.breakpoints[j]);
    }

    ASSERT_EQ(r.stats.per_step.size(), n - 1);
    std::size_t sum = 0;
    for (const auto w : r.stats.per_step) {
      EXPECT_GE(w, 1u);
      sum += w;
    }
    EXPECT_EQ(sum, r.stats.total);
    if (n >= 2) {
      EXPECT_GE(r.stats.total, n - 1);
      EXPECT_LE(r.stats.total, 2 * n - 3);
      EXPECT_GE(p.size(), 2u);
    }
    EXPECT_EQ(r.stats.total + p.size(), 2 * n - 1);
  }
}

TEST_P(RandomInstances, UnitComplexitiesMatchImplicitOnes) {
  std::mt19937_64 rng(5 + static_cast<int>(GetParam()));
  for (int trial = 0; trial < 50; ++trial) {
    const auto losses = random_losses(rng, 1 + trial * 7, GetParam());
    const auto r = unit_complexities(losses.size());
    const auto implicit = exact_path(validate_losses(losses));
    const auto explicit_r = exact_path(validate_losses(losses, std::span<const double>(r)));
    EXPECT_EQ(implicit.path, explicit_r.path);
    EXPECT_EQ(implicit.stats, explicit_r.stats);
  }
}

TEST_P(RandomInstances, AffineTransformsOfLosses) {
  std::mt19937_64 rng(17 + static_cast<int>(GetParam()));
  for (int trial = 0; trial < 50; ++trial) {
    const auto losses = random_losses(rng, 2 + trial * 5, GetParam());
    const auto base = exact_path(validate_losses(losses)).path;

    // Powers of two keep every operation exact.
    for (const double a : {0.25, 8.0}) {
      auto scaled = losses;
      for (auto& x : scaled) x *= a;
      const auto s = exact_path(validate_losses(scaled)).path;
      EXPECT_EQ(s.models, base.models);
      for (std::size_t j = 1; j + 1 < base.breakpoints.size(); ++j) {
        EXPECT_EQ(s.breakpoints[j], a * base.breakpoints[j]);
      }
    }
    // A general factor agrees up to rounding.
    auto scaled = losses;
    for (auto& x : scaled) x *= 3.7;
    const auto s = exact_path(validate_losses(scaled)).path;
    for (std::size_t j = 1; j + 1 < std::min(s.breakpoints.size(), base.breakpoints.size()); ++j) {
      if (s.models == base.models) {
        EXPECT_NEAR(s.breakpoints[j], 3.7 * base.breakpoints[j],
                    1e-9 * 3.7 * base.breakpoints[j]);
      }
    }

    auto shifted = losses;
    for (auto& x : shifted) x += 1024.0;
    const auto t = exact_path(validate_losses(shifted)).path;
    EXPECT_EQ(t.models, base.models);
    EXPECT_EQ(t.breakpoints.front(), kInfinity);
    for (std::size_t j = 1; j < base.breakpoints.size(); ++j) {
      EXPECT_NEAR(t.breakpoints[j], base.breakpoints[j],
                  1e-9 * std::max(1.0, base.breakpoints[j]));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Patterns, RandomInstances,
                         ::testing::Values(LossPattern::RandomDrops, LossPattern::Convex,
                                           LossPattern::NoisyConvex, LossPattern::FewSteps));

TEST(ExactPath, GeneralComplexitiesMatchDirectScan) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial * 3;
    const auto losses = random_losses(rng, n, testing::random_pattern(rng));
    const auto r = testing::random_complexities(rng, n);
    const auto seq = validate_losses(losses, std::span<const double>(r));
    const auto result = exact_path(seq);
    EXPECT_EQ(result.stats.total + result.path.size(), 2 * n - 1);
    const double top = result.path.size() > 1 ? result.path.breakpoints[1] : 1.0;
    for (int q = 0; q < 500; ++q) {
      const double lambda = 2.0 * top * (q + 0.5) / 500.0;
      ASSERT_EQ(query_path(result.path, lambda), evaluate_selection(seq, lambda));
      ASSERT_EQ(evaluate_selection(seq, lambda), testing::naive_argmin(losses, r, lambda))
          << "trial " << trial << " q " << q;
    }
  }
}

TEST(FilterNarrowIntervals, DisabledByDefault) {
  const auto path = exact_path(validate_losses(kSqrt)).path;
  EXPECT_EQ(filter_narrow_intervals(path, 0.0), path);
}

TEST(FilterNarrowIntervals, MergesNarrowInteriorIntervals) {
  // Model 2 lives on (3.999, 4) and model 3 on (1, 3.999).
  const SelectionPath path{{1, 2, 3, 4}, {kInfinity, 4.0, 3.999, 1.0, 0.0}};
  const auto filtered = filter_narrow_intervals(path, 0.01);
  EXPECT_EQ(filtered.models, (std::vector<std::size_t>{1, 3, 4}));
  ASSERT_EQ(filtered.breakpoints.size(), 4u);
  EXPECT_DOUBLE_EQ(filtered.breakpoints[1], 3.9995);
  EXPECT_EQ(filtered.breakpoints[2], 1.0);

  // The last model is never dropped.
  const SelectionPath tail{{1, 2}, {kInfinity, 1e-6, 0.0}};
  EXPECT_EQ(filter_narrow_intervals(tail, 1.0), tail);
}

}  // namespace
}  // namespace l0path
