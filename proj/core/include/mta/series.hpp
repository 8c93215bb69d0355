#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mta/error.hpp"

namespace mta {

/// Univariate, time-ordered series of finite observations (length >= 1).
///
/// Construction validates the invariants; an instance is always usable as
/// input to normalization and discovery.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> values, std::string label = {});

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::string& label() const { return label_; }

  /// Keeps the last `n` observations (all of them if n >= size()).
  TimeSeries tail(std::size_t n) const;

 private:
  std::vector<double> values_;
  std::string label_;
};

struct NormalizedSeries {
  std::vector<double> values;
  double mean_used = 0.0;
  double std_used = 0.0;  // population standard deviation; 0 for constant input

  std::size_t size() const { return values.size(); }
};

/// Global z-normalization, (t - mean) / std with the population std.
/// A constant series maps to all zeros with std_used = 0.
NormalizedSeries z_normalize(const TimeSeries& series);

double euclidean_distance(std::span<const double> x, std::span<const double> y);

/// Equivalent to euclidean_distance(x, y) <= r, but stops accumulating as
/// soon as the squared sum exceeds r^2.
bool within_distance(std::span<const double> x, std::span<const double> y, double r);

// Series text format: one number per line, '#' comments and blank lines ignored.
TimeSeries read_series(std::istream& in, std::string label = {});
TimeSeries load_series_file(const std::filesystem::path& path);
void write_series(std::ostream& out, std::span<const double> values);

}  // namespace mta
