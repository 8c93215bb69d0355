#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mta/sax.hpp"

namespace mta {

/// A confirmed motif: its symbol string, the number of series points it
/// covers and the sorted start index of every occurrence.
struct MemoryMotif {
  SymbolString text;
  std::size_t point_length = 0;
  std::vector<std::size_t> occurrences;

  bool operator==(const MemoryMotif&) const = default;
};

/// Motifs in canonical order: descending point_length, then ascending first
/// occurrence.
struct MotifSet {
  std::vector<MemoryMotif> motifs;

  std::size_t size() const { return motifs.size(); }
  bool empty() const { return motifs.empty(); }
  bool operator==(const MotifSet&) const = default;
};

bool canonical_less(const MemoryMotif& lhs, const MemoryMotif& rhs);

/// True when every occurrence interval [o, o + inner.point_length) lies inside
/// some occurrence interval of `outer`.
bool encapsulated_by(const MemoryMotif& inner, const MemoryMotif& outer);

/// Collapses duplicates, drops every motif encapsulated by a longer-or-equal
/// retained motif, and returns the rest in canonical order.
MotifSet streamline(std::vector<MemoryMotif> pool);

/// Sum of point_length * occurrence count over motifs with
/// point_length >= min_length.
std::uint64_t quality_measure(const MotifSet& motifs, std::size_t min_length);

/// Number of motifs with point_length >= min_length.
std::size_t count_at_least(const MotifSet& motifs, std::size_t min_length);

/// True when some motif in `set` with point_length >= motif.point_length
/// encapsulates `motif`.
bool covered_by(const MemoryMotif& motif, const MotifSet& set);

}  // namespace mta
