#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "mta/series.hpp"

namespace mta::testing {

/// Two copies of 1..20 separated by 20 unrelated values (m = 60); the only
/// repeat is the block itself, at starts 0 and 40.
inline TimeSeries two_block_fixture() {
  std::vector<double> v;
  for (int i = 1; i <= 20; ++i) v.push_back(i);
  for (int i = 101; i <= 120; ++i) v.push_back(i);
  for (int i = 1; i <= 20; ++i) v.push_back(i);
  return TimeSeries(std::move(v), "two-block");
}

struct PlantedMotif {
  std::size_t length;
  std::vector<std::size_t> starts;
};

/// 1,000 points of non-repeating filler with three planted motifs of 60, 40
/// and 40 points. Every planted value and every filler value is distinct, so
/// the planted copies are the only repeats.
inline const std::vector<PlantedMotif>& planted_layout() {
  static const std::vector<PlantedMotif> layout{
      {60, {100, 600}},
      {40, {250, 700, 880}},
      {40, {400, 520}},
  };
  return layout;
}

inline TimeSeries planted_fixture() {
  std::mt19937 rng(20071115);
  constexpr std::size_t m = 1000;

  // Filler: a shuffled set of distinct half-integers.
  std::vector<double> filler(m);
  std::iota(filler.begin(), filler.end(), 0.0);
  for (auto& f : filler) f += 0.5;
  std::shuffle(filler.begin(), filler.end(), rng);
  std::vector<double> values = filler;

  // Motif content: distinct integers on the same scale as the filler.
  std::vector<double> pool(m);
  std::iota(pool.begin(), pool.end(), 0.0);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t next = 0;
  for (const auto& motif : planted_layout()) {
    std::vector<double> body(pool.begin() + static_cast<std::ptrdiff_t>(next),
                             pool.begin() + static_cast<std::ptrdiff_t>(next + motif.length));
    next += motif.length;
    for (std::size_t start : motif.starts) std::copy(body.begin(), body.end(), values.begin() + static_cast<std::ptrdiff_t>(start));
  }
  return TimeSeries(std::move(values), "planted");
}

struct RandomInstance {
  TimeSeries series;
  std::size_t symbol_length;
  int alphabet;
};

/// m in [s, 300], values drawn from at most 8 distinct integers,
/// s in {2, 4}, a in {4, 10}.
inline RandomInstance random_instance(std::mt19937& rng) {
  const std::size_t s = std::uniform_int_distribution<int>(0, 1)(rng) ? 4 : 2;
  const int a = std::uniform_int_distribution<int>(0, 1)(rng) ? 10 : 4;
  const std::size_t m = std::uniform_int_distribution<std::size_t>(s, 300)(rng);
  const int distinct = std::uniform_int_distribution<int>(1, 8)(rng);

  std::vector<double> alphabet(static_cast<std::size_t>(distinct));
  for (auto& x : alphabet) x = std::uniform_int_distribution<int>(0, 400)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<double> values(m);
  for (auto& v : values) v = alphabet[pick(rng)];
  return {TimeSeries(std::move(values), "random"), s, a};
}

}  // namespace mta::testing
