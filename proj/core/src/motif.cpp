#include "mta/motif.hpp"

#include <algorithm>

namespace mta {

bool canonical_less(const MemoryMotif& lhs, const MemoryMotif& rhs) {
  if (lhs.point_length != rhs.point_length) return lhs.point_length > rhs.point_length;
  if (lhs.occurrences != rhs.occurrences) return lhs.occurrences < rhs.occurrences;
  return lhs.text < rhs.text;
}

bool encapsulated_by(const MemoryMotif& inner, const MemoryMotif& outer) {
  if (inner.point_length > outer.point_length) return false;
  for (std::size_t o : inner.occurrences) {
    const bool inside = std::any_of(outer.occurrences.begin(), outer.occurrences.end(), [&](std::size_t p) {
      return p <= o && o + inner.point_length <= p + outer.point_length;
    });
    if (!inside) return false;
  }
  return true;
}

MotifSet streamline(std::vector<MemoryMotif> pool) {
  for (auto& motif : pool) std::sort(motif.occurrences.begin(), motif.occurrences.end());
  std::sort(pool.begin(), pool.end(), canonical_less);
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // Canonical order visits longer motifs first, so every candidate
  // encapsulator of pool[i] has already been decided. Encapsulation is
  // transitive, so checking retained motifs only is enough.
  MotifSet out;
  for (auto& motif : pool) {
    const bool absorbed = std::any_of(out.motifs.begin(), out.motifs.end(),
                                      [&](const MemoryMotif& kept) { return encapsulated_by(motif, kept); });
    if (!absorbed) out.motifs.push_back(std::move(motif));
  }
  return out;
}

std::uint64_t quality_measure(const MotifSet& motifs, std::size_t min_length) {
  std::uint64_t total = 0;
  for (const auto& m : motifs.motifs) {
    if (m.point_length >= min_length) total += static_cast<std::uint64_t>(m.point_length) * m.occurrences.size();
  }
  return total;
}

std::size_t count_at_least(const MotifSet& motifs, std::size_t min_length) {
  return static_cast<std::size_t>(std::count_if(motifs.motifs.begin(), motifs.motifs.end(),
                                                [&](const MemoryMotif& m) { return m.point_length >= min_length; }));
}

bool covered_by(const MemoryMotif& motif, const MotifSet& set) {
  return std::any_of(set.motifs.begin(), set.motifs.end(),
                     [&](const MemoryMotif& other) { return encapsulated_by(motif, other); });
}

}  // namespace mta
