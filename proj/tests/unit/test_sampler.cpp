#include "multischur/kernel.hpp"
#include "multischur/multicritical.hpp"
#include "multischur/sampler.hpp"

#include <doctest.h>

#include <cmath>

using namespace multischur;

TEST_CASE("tiny theta gives empty partitions") {
  const auto batch = sample(o_params(1, Rational(1, 1000000)), 200, 1);
  for (const Partition& p : batch.partitions) CHECK(p.empty());
  const auto cdf = empirical_edge_cdf(batch, EdgeStatistic::lambda1);
  CHECK(cdf.at(0) == 1.0);
}

TEST_CASE("determinism across thread counts") {
  const auto params = o_params(1, 3);
  SamplerOptions one;
  SamplerOptions four;
  four.threads = 4;
  const auto a = sample(params, 300, 42, one);
  const auto b = sample(params, 300, 42, four);
  CHECK(a.partitions == b.partitions);
  CHECK(sample(params, 300, 43, one).partitions != a.partitions);
}

TEST_CASE("empirical cdf is consistent by construction") {
  const auto params = o_params(1, 4);
  const auto batch = sample(params, 1000, 7);
  const auto cdf = empirical_edge_cdf(batch, EdgeStatistic::lambda1);
  for (double s : {-2.0, -0.5, 0.0, 1.0}) {
    const auto sc = cdf.scaling();
    const int l = static_cast<int>(std::floor(sc.center + s * sc.scale));
    long below = 0;
    for (const Partition& p : batch.partitions) below += p.first() <= l;
    CHECK(cdf(s) == doctest::Approx(static_cast<double>(below) / 1000));
  }
}

TEST_CASE("first part cdf within binomial bands") {
  const auto params = o_params(1, 6);
  const auto batch = sample(params, 4000, 2024);
  CHECK(batch.accepted());
  const auto cdf = empirical_edge_cdf(batch, EdgeStatistic::lambda1);
  const DiscreteKernel kernel(params.spec());
  for (int l = 8; l <= 16; ++l) {
    const double p = gap_probability(kernel, l);
    const double sigma = std::sqrt(p * (1 - p) / 4000);
    CHECK(std::abs(cdf.at(l) - p) <= 3 * sigma + 1e-12);
  }
}

TEST_CASE("explicit window and spec") {
  const Specialization s(std::vector<double>{1.2});
  const auto batch = sample(s, SampleWindow{-8, 8}, 500, 5);
  CHECK(batch.partitions.size() == 500);
  for (const Partition& p : batch.partitions) {
    CHECK(p.first() <= 9);
    CHECK(p.length() <= 9);
  }
}
