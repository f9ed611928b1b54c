// Copyright 2026 The fermap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <numeric>

#include "fermap/verify.hpp"
#include "oracles.hpp"

namespace {

TEST(Verify, DefaultSuitePasses) {
  const auto res = fermap::run_suite({});
  EXPECT_EQ(res.overall(), "pass");
  for (const auto& c : res.checks) EXPECT_TRUE(c.passed()) << c.name << ": " << c.detail;
  EXPECT_EQ(res.checks.size(), 12u);
}

TEST(Verify, SymbolicOnlySubset) {
  fermap::SuiteOptions opt;
  opt.symbolic_only = true;
  const auto res = fermap::run_suite(opt);
  EXPECT_EQ(res.overall(), "pass");
  EXPECT_EQ(res.checks.size(), 7u);
  EXPECT_EQ(res.checks[6].measured, 9.0);
}

TEST(Verify, SmallCapSkipsDenseChecks) {
  fermap::SuiteOptions opt;
  opt.dense_cap = 3;
  const auto res = fermap::run_suite(opt);
  EXPECT_EQ(res.overall(), "partial");
  std::size_t skipped = 0;
  for (const auto& c : res.checks) skipped += c.status == fermap::CheckStatus::skipped;
  EXPECT_EQ(skipped, 5u);
  EXPECT_EQ(res.to_json()["overall"], "partial");
}

TEST(Verify, OverallReportsFailure) {
  fermap::VerificationSuiteResult res;
  res.checks.push_back({"a", fermap::CheckStatus::pass, 0.0, 0.0, 0.0, ""});
  res.checks.push_back({"b", fermap::CheckStatus::skipped, 0.0, 0.0, 0.0, ""});
  EXPECT_EQ(res.overall(), "partial");
  res.checks.push_back({"c", fermap::CheckStatus::fail, 1.0, 0.0, 0.0, "boom"});
  EXPECT_EQ(res.overall(), "fail");
  const auto j = res.to_json();
  EXPECT_FALSE(j["checks"][0].contains("seconds"));
  EXPECT_TRUE(res.to_json(true)["checks"][0].contains("seconds"));
}

TEST(Verify, RandomSegmentsAreCompositions) {
  std::mt19937_64 rng(42);
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto s = fermap::random_segments(n, rng);
    EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::size_t{0}), n);
    for (auto x : s) EXPECT_GE(x, 1u);
  }
  std::mt19937_64 a(7), b(7);
  EXPECT_EQ(fermap::random_segments(30, a), fermap::random_segments(30, b));
  const auto r = fermap::check_random_forests(100, 12, 5);
  EXPECT_TRUE(r.passed()) << r.detail;
  EXPECT_EQ(r.measured, 100.0);
}

TEST(Verify, LsfsSectorAndPenalty) {
  const auto sector = fermap::lsfs_sector_match(2, 2, 1.0, 0.3);
  EXPECT_TRUE(sector.passed()) << sector.detail;
  EXPECT_EQ(sector.measured, 8.0);
  EXPECT_LE(sector.max_residual, 1e-9);
  for (double delta : {10.0, 100.0}) {
    const auto p = fermap::penalty_gap_check(2, 2, 1.0, 0.3, delta);
    EXPECT_TRUE(p.passed()) << p.detail;
    EXPECT_NEAR(p.measured, delta, 1e-6);
  }
  const auto p3 = fermap::penalty_gap_check(2, 3, 0.8, -0.2, 10.0);
  EXPECT_TRUE(p3.passed()) << p3.detail;
}

TEST(Verify, PenaltyShiftAgainstDirectMatrix) {
  const fermap::EdgeLayout layout(2, 2);
  const double delta = 10.0;
  const auto h0 = fermap::to_dense(fermap::lsfs_single_spin(layout, 1.0, 0.3));
  const auto h1 = fermap::to_dense(fermap::lsfs_single_spin(layout, 1.0, 0.3, delta));
  const oracle::Mat c = fermap::to_dense(fermap::stabilizers(layout)[0]);
  // C = +1 states sit at -delta/2, C = -1 states at +delta/2
  EXPECT_LT((h1 - h0 + 0.5 * delta * c).norm(), 1e-12);
  const auto ev = oracle::eigvals(c);
  EXPECT_NEAR(ev.minCoeff(), -1.0, 1e-12);
  EXPECT_NEAR(ev.maxCoeff(), 1.0, 1e-12);
  EXPECT_LT((h0 * c - c * h0).norm(), 1e-12);
}

TEST(Verify, CrossEncodingSpectra) {
  const auto model = fermap::hubbard(fermap::Lattice::rectangle(2, 2), 1.0, 4.0);
  const auto r = fermap::spectra_match(model, fermap::EncodingSpec::bravyi_kitaev(8),
                                       fermap::EncodingSpec::segmented({3, 5}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.measured, 256.0);
  const auto skipped = fermap::spectra_match(model, fermap::EncodingSpec::jordan_wigner(8),
                                             fermap::EncodingSpec::bravyi_kitaev(8), 4);
  EXPECT_EQ(skipped.status, fermap::CheckStatus::skipped);
}

}  // namespace
