#pragma once

#include <cstddef>
#include <vector>

#include "mta/motif.hpp"
#include "mta/sax.hpp"
#include "mta/series.hpp"

namespace mta {

struct MtaConfig {
  SaxConfig sax;
  double match_threshold = 0.0;  // r, in normalized units
  bool tme_enabled = false;

  void validate() const;
};

/// Generation-g word: the symbols S[start], S[start+s], ..., S[start+(g-1)s].
struct Word {
  SymbolString text;
  std::size_t start = 0;
  std::size_t generation = 0;
};

/// Words presented to the trackers in one generation, ascending by start.
struct CandidateMatrix {
  std::vector<Word> words;
  std::size_t generation = 0;
};

struct Tracker {
  SymbolString text;
  std::size_t match_count = 0;

  bool operator==(const Tracker&) const = default;
};

/// Trackers kept sorted by text; texts are unique within a population.
using TrackerPopulation = std::vector<Tracker>;

/// Generation-1 survivors; the only symbols used to extend trackers.
struct MutationTemplate {
  std::vector<Symbol> symbols;
};

TrackerPopulation init_trackers(int alphabet_size);

/// Builds the generation-g candidate matrix from S. With trivial-match
/// elimination a word is dropped when its text equals the last retained
/// word's text, but never more than s times in a row. Returns an empty
/// matrix when no word of g * s points fits in the series.
CandidateMatrix build_candidate_matrix(const SymbolMatrix& symbols, std::size_t generation, bool tme_enabled);

TrackerPopulation match_trackers(TrackerPopulation population, const CandidateMatrix& candidates);

TrackerPopulation eliminate_unmatched(TrackerPopulation population);

struct Confirmation {
  std::vector<MemoryMotif> motifs;  // found this generation
  TrackerPopulation trackers;       // match_count = accepted pairs
};

/// Checks every pair of equal-text words against the normalized series. Pairs
/// within distance r are linked; each connected group of linked words becomes
/// one memory motif.
Confirmation confirm_motifs(const TrackerPopulation& survivors, const CandidateMatrix& candidates,
                            const NormalizedSeries& norm, double match_threshold, std::size_t symbol_length);

TrackerPopulation eliminate_unconfirmed(TrackerPopulation population);

TrackerPopulation proliferate_and_mutate(const TrackerPopulation& survivors, const MutationTemplate& mutation);

/// Per-generation bookkeeping, filled by run_mta when requested.
struct GenerationStats {
  std::size_t generation = 0;
  std::size_t candidates = 0;
  std::size_t matched = 0;
  std::size_t confirmed = 0;
  std::size_t motifs = 0;
};

MotifSet run_mta(const TimeSeries& series, const MtaConfig& config,
                 std::vector<GenerationStats>* stats = nullptr);

}  // namespace mta
