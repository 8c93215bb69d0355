#include "mta/series.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mta {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) throw MtaError("empty input");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw MtaError("non-finite value at index " + std::to_string(i));
    }
  }
}

TimeSeries TimeSeries::tail(std::size_t n) const {
  if (n >= values_.size()) return *this;
  return TimeSeries(std::vector<double>(values_.end() - static_cast<std::ptrdiff_t>(n), values_.end()),
                    label_);
}

NormalizedSeries z_normalize(const TimeSeries& series) {
  const auto values = series.values();
  const double m = static_cast<double>(values.size());

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / m;

  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  const double stddev = std::sqrt(sq / m);

  NormalizedSeries out;
  out.mean_used = mean;
  out.values.assign(values.size(), 0.0);
  // A series whose spread is zero (or vanishes against the mean in floating
  // point) is treated as constant.
  bool constant = true;
  for (double v : values) {
    if (v != values.front()) {
      constant = false;
      break;
    }
  }
  if (constant || stddev == 0.0) {
    out.std_used = 0.0;
    return out;
  }
  out.std_used = stddev;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.values[i] = (values[i] - mean) / stddev;
  }
  return out;
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw MtaError("dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

bool within_distance(std::span<const double> x, std::span<const double> y, double r) {
  if (x.size() != y.size()) throw MtaError("dimension mismatch");
  const double limit = r * r;
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
    if (acc > limit) return std::sqrt(acc) <= r;
  }
  return std::sqrt(acc) <= r;
}

TimeSeries read_series(std::istream& in, std::string label) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream parse{std::string(t)};
    double v = 0.0;
    parse >> v;
    std::string rest;
    if (parse.fail() || (parse >> rest)) {
      throw MtaError("line " + std::to_string(line_no) + ": not a number: '" + std::string(t) + "'");
    }
    values.push_back(v);
  }
  return TimeSeries(std::move(values), std::move(label));
}

TimeSeries load_series_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MtaError("cannot open series file: " + path.string());
  try {
    return read_series(in, path.filename().string());
  } catch (const MtaError& e) {
    throw MtaError(path.string() + ": " + e.what());
  }
}

void write_series(std::ostream& out, std::span<const double> values) {
  std::ostringstream buf;
  buf.precision(17);
  for (double v : values) {
    if (v == std::trunc(v) && std::fabs(v) < 1e15) {
      buf << static_cast<long long>(v) << '\n';
    } else {
      buf << v << '\n';
    }
  }
  out << buf.str();
}

}  // namespace mta
