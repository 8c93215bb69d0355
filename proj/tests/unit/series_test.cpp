#include "mta/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

namespace mta {
namespace {

TEST(ZNormalize, ThreePoints) {
  const auto norm = z_normalize(TimeSeries({1, 2, 3}));
  ASSERT_EQ(norm.size(), 3u);
  EXPECT_NEAR(norm.values[0], -1.224744871391589, 1e-12);
  EXPECT_DOUBLE_EQ(norm.values[1], 0.0);
  EXPECT_NEAR(norm.values[2], 1.224744871391589, 1e-12);
  EXPECT_DOUBLE_EQ(norm.mean_used, 2.0);
  EXPECT_NEAR(norm.std_used, std::sqrt(2.0 / 3.0), 1e-15);
}

TEST(ZNormalize, ConstantSeriesMapsToZeros) {
  const auto norm = z_normalize(TimeSeries({5, 5, 5, 5}));
  EXPECT_EQ(norm.values, std::vector<double>(4, 0.0));
  EXPECT_EQ(norm.std_used, 0.0);
}

TEST(ZNormalize, SinglePoint) {
  const auto norm = z_normalize(TimeSeries({7}));
  EXPECT_EQ(norm.values, std::vector<double>{0.0});
  EXPECT_EQ(norm.std_used, 0.0);
}

TEST(TimeSeries, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(TimeSeries({}), MtaError);
  try {
    TimeSeries series(std::vector<double>{});
    FAIL();
  } catch (const MtaError& e) {
    EXPECT_STREQ(e.what(), "empty input");
  }
  EXPECT_THROW(TimeSeries({1.0, NAN}), MtaError);
  EXPECT_THROW(TimeSeries({INFINITY}), MtaError);
}

TEST(TimeSeries, Tail) {
  const TimeSeries series({1, 2, 3, 4, 5});
  const auto last = series.tail(2);
  ASSERT_EQ(last.size(), 2u);
  EXPECT_EQ(last[0], 4);
  EXPECT_EQ(series.tail(10).size(), 5u);
}

TEST(ZNormalize, PropertiesOnRandomSeries) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 400)(rng);
    std::vector<double> v(m);
    for (auto& x : v) x = std::uniform_int_distribution<int>(0, 20)(rng);
    v[0] = 0;
    v[1] = 21;  // non-constant
    const TimeSeries series(v);
    const auto norm = z_normalize(series);

    double mean = 0, sq = 0;
    for (double x : norm.values) mean += x;
    mean /= static_cast<double>(m);
    for (double x : norm.values) sq += (x - mean) * (x - mean);
    EXPECT_NEAR(mean, 0.0, 1e-9);
    EXPECT_NEAR(std::sqrt(sq / static_cast<double>(m)), 1.0, 1e-9);

    // Idempotent.
    const auto twice = z_normalize(TimeSeries(norm.values));
    for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(twice.values[i], norm.values[i], 1e-9);

    // Equality structure preserved exactly.
    for (std::size_t i = 0; i + 1 < m; ++i) {
      EXPECT_EQ(v[i] == v[i + 1], norm.values[i] == norm.values[i + 1]);
    }
  }
}

TEST(EuclideanDistance, Examples) {
  EXPECT_EQ(euclidean_distance(std::vector<double>{1, 2}, std::vector<double>{1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(euclidean_distance(std::vector<double>{0, 0}, std::vector<double>{3, 4}), 5.0);
  EXPECT_NEAR(euclidean_distance(std::vector<double>{1, 1, 1}, std::vector<double>{2, 2, 2}), 1.732051, 1e-6);
}

TEST(EuclideanDistance, DimensionMismatch) {
  try {
    euclidean_distance(std::vector<double>{1}, std::vector<double>{1, 2});
    FAIL();
  } catch (const MtaError& e) {
    EXPECT_STREQ(e.what(), "dimension mismatch");
  }
}

TEST(EuclideanDistance, MetricPropertiesAndThresholdAgreement) {
  std::mt19937 rng(11);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    std::vector<double> x(n), y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = gauss(rng);
      y[i] = gauss(rng);
      z[i] = gauss(rng);
    }
    const double xy = euclidean_distance(x, y), yz = euclidean_distance(y, z), xz = euclidean_distance(x, z);
    EXPECT_LE(xz, xy + yz + 1e-9);
    EXPECT_EQ(xy, euclidean_distance(y, x));
    EXPECT_GE(xy, 0.0);

    const double r = std::uniform_real_distribution<double>(0.0, 8.0)(rng);
    EXPECT_EQ(within_distance(x, y, r), xy <= r);
  }
}

TEST(SeriesFile, ParsesCommentsBlanksAndDecimals) {
  std::istringstream in("# header\n3\n\n  4.5 \n# more\n-2\n");
  const auto series = read_series(in);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[0], 3);
  EXPECT_EQ(series[1], 4.5);
  EXPECT_EQ(series[2], -2);
}

TEST(SeriesFile, RejectsGarbageWithLineNumber) {
  std::istringstream in("1\n2\nthree\n");
  try {
    read_series(in);
    FAIL();
  } catch (const MtaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream empty("# nothing\n\n");
  EXPECT_THROW(read_series(empty), MtaError);
}

TEST(SeriesFile, WriteIntegersWithoutDecimals) {
  std::ostringstream out;
  const std::vector<double> v{3, 5, 0.25};
  write_series(out, v);
  EXPECT_EQ(out.str(), "3\n5\n0.25\n");
}

}  // namespace
}  // namespace mta
