#include "mta/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace mta::oracle {

namespace {

// Starts of length-L subsequences bucketed by exact equality, groups of >= 2 only.
std::vector<std::vector<std::size_t>> equal_subsequence_groups(std::span<const double> values, std::size_t length) {
  std::vector<std::size_t> starts(values.size() - length + 1);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  const auto window = [&](std::size_t i) { return values.subspan(i, length); };
  const auto less = [&](std::size_t a, std::size_t b) {
    const auto wa = window(a), wb = window(b);
    return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
  };
  std::stable_sort(starts.begin(), starts.end(), less);

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t lo = 0; lo < starts.size();) {
    std::size_t hi = lo + 1;
    while (hi < starts.size() && std::ranges::equal(window(starts[lo]), window(starts[hi]))) ++hi;
    if (hi - lo >= 2) {
      groups.emplace_back(starts.begin() + static_cast<std::ptrdiff_t>(lo),
                          starts.begin() + static_cast<std::ptrdiff_t>(hi));
      std::sort(groups.back().begin(), groups.back().end());
    }
    lo = hi;
  }
  return groups;
}

}  // namespace

MotifSet brute_force_exact_motifs(const TimeSeries& series, std::size_t granularity, std::size_t min_separation) {
  if (granularity == 0) throw MtaError("granularity must be >= 1");
  if (series.size() < granularity) throw MtaError("series shorter than symbol length");

  std::vector<MemoryMotif> found;
  for (std::size_t length = granularity; length <= series.size(); length += granularity) {
    const auto groups = equal_subsequence_groups(series.values(), length);
    // A repeat of length L + s contains a repeat of length L, so the first
    // empty length ends the search.
    if (groups.empty()) break;
    for (const auto& group : groups) {
      std::vector<std::size_t> kept;
      for (std::size_t start : group) {
        if (kept.empty() || start - kept.back() >= min_separation) kept.push_back(start);
      }
      if (kept.size() >= 2) found.push_back(MemoryMotif{{}, length, std::move(kept)});
    }
  }
  return streamline(std::move(found));
}

void label_motifs(MotifSet& motifs, const TimeSeries& series, const SaxConfig& config) {
  const SymbolMatrix symbols = build_symbol_matrix(z_normalize(series), config);
  const std::size_t s = config.symbol_length;
  for (auto& motif : motifs.motifs) {
    motif.text.clear();
    const std::size_t first = motif.occurrences.front();
    for (std::size_t k = 0; k * s + s <= motif.point_length; ++k) motif.text.push_back(symbols.symbols[first + k * s]);
  }
}

std::vector<PairDistance> brute_force_threshold_pairs(const TimeSeries& series, std::size_t window, double r) {
  if (window == 0 || window > series.size()) throw MtaError("window must be in 1..m");
  const NormalizedSeries norm = z_normalize(series);
  const std::span<const double> values(norm.values);
  const std::size_t count = series.size() - window + 1;

  std::vector<PairDistance> out;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double d = euclidean_distance(values.subspan(i, window), values.subspan(j, window));
      if (d <= r) out.push_back(PairDistance{i, j, d});
    }
  }
  return out;
}

}  // namespace mta::oracle
