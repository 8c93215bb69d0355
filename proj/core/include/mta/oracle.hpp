#pragma once

#include <cstddef>
#include <vector>

#include "mta/motif.hpp"
#include "mta/sax.hpp"
#include "mta/series.hpp"

// Exhaustive reference motif finders for validating the tracker engine on
// small inputs. Nothing here uses the symbol matrix or the tracker loop.
namespace mta::oracle {

/// Every group of >= 2 starts whose raw subsequences of length L are exactly
/// equal, for L = s, 2s, 3s, ... . Within a group, starts closer than
/// `min_separation` to the previously kept start are dropped. The result is
/// streamlined and canonically ordered; motif texts are left empty.
MotifSet brute_force_exact_motifs(const TimeSeries& series, std::size_t granularity,
                                  std::size_t min_separation = 1);

/// Fills each motif's text with the SAX word at its first occurrence:
/// one symbol per s points, s = config.symbol_length.
void label_motifs(MotifSet& motifs, const TimeSeries& series, const SaxConfig& config);

struct PairDistance {
  std::size_t first = 0;
  std::size_t second = 0;
  double distance = 0.0;

  bool operator==(const PairDistance&) const = default;
};

/// All start pairs i < j whose normalized windows are within distance r.
/// Quadratic; intended for series of a few thousand points.
std::vector<PairDistance> brute_force_threshold_pairs(const TimeSeries& series, std::size_t window, double r);

}  // namespace mta::oracle
