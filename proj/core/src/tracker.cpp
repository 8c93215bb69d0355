#include "mta/tracker.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mta {

void MtaConfig::validate() const {
  sax.validate();
  if (!(match_threshold >= 0.0)) throw MtaError("match threshold must be >= 0");
}

TrackerPopulation init_trackers(int alphabet_size) {
  if (alphabet_size < kMinAlphabet) throw MtaError("alphabet too small");
  TrackerPopulation out;
  out.reserve(static_cast<std::size_t>(alphabet_size));
  for (int k = 0; k < alphabet_size; ++k) out.push_back(Tracker{{static_cast<Symbol>(k)}, 0});
  return out;
}

CandidateMatrix build_candidate_matrix(const SymbolMatrix& symbols, std::size_t generation, bool tme_enabled) {
  CandidateMatrix out;
  out.generation = generation;
  const std::size_t s = symbols.config.symbol_length;
  const std::size_t m = symbols.series_length;
  if (generation == 0 || generation * s > m) return out;

  const std::size_t last_start = m - generation * s;
  std::size_t eliminated = 0;
  for (std::size_t i = 0; i <= last_start; ++i) {
    Word word{SymbolString(generation), i, generation};
    for (std::size_t k = 0; k < generation; ++k) word.text[k] = symbols.symbols[i + k * s];

    if (tme_enabled && !out.words.empty() && word.text == out.words.back().text && eliminated < s) {
      ++eliminated;
      continue;
    }
    eliminated = 0;
    out.words.push_back(std::move(word));
  }
  return out;
}

TrackerPopulation match_trackers(TrackerPopulation population, const CandidateMatrix& candidates) {
  std::map<SymbolString, std::size_t> counts;
  for (const auto& w : candidates.words) ++counts[w.text];
  for (auto& t : population) {
    if (t.text.size() != candidates.generation) throw MtaError("generation skew");
    const auto it = counts.find(t.text);
    t.match_count = it == counts.end() ? 0 : it->second;
  }
  return population;
}

TrackerPopulation eliminate_unmatched(TrackerPopulation population) {
  std::erase_if(population, [](const Tracker& t) { return t.match_count < 2; });
  for (auto& t : population) t.match_count = 0;
  return population;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Confirmation confirm_motifs(const TrackerPopulation& survivors, const CandidateMatrix& candidates,
                            const NormalizedSeries& norm, double match_threshold, std::size_t symbol_length) {
  Confirmation out;
  out.trackers = survivors;
  const std::size_t length = candidates.generation * symbol_length;
  const std::span<const double> values(norm.values);

  std::map<SymbolString, std::vector<std::size_t>> starts_by_text;
  for (const auto& w : candidates.words) starts_by_text[w.text].push_back(w.start);

  for (auto& tracker : out.trackers) {
    tracker.match_count = 0;
    const auto it = starts_by_text.find(tracker.text);
    if (it == starts_by_text.end()) continue;
    const auto& starts = it->second;

    DisjointSets groups(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
      for (std::size_t j = i + 1; j < starts.size(); ++j) {
        // Already linked: another accepted pair cannot change the grouping.
        if (groups.find(i) == groups.find(j)) continue;
        if (within_distance(values.subspan(starts[i], length), values.subspan(starts[j], length),
                            match_threshold)) {
          groups.unite(i, j);
          ++tracker.match_count;
        }
      }
    }
    if (tracker.match_count == 0) continue;

    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < starts.size(); ++i) members[groups.find(i)].push_back(starts[i]);
    for (auto& [root, occurrences] : members) {
      if (occurrences.size() < 2) continue;
      out.motifs.push_back(MemoryMotif{tracker.text, length, std::move(occurrences)});
    }
  }
  return out;
}

TrackerPopulation eliminate_unconfirmed(TrackerPopulation population) {
  std::erase_if(population, [](const Tracker& t) { return t.match_count == 0; });
  for (auto& t : population) t.match_count = 0;
  return population;
}

TrackerPopulation proliferate_and_mutate(const TrackerPopulation& survivors, const MutationTemplate& mutation) {
  if (survivors.empty()) return {};
  if (mutation.symbols.empty()) throw MtaError("template empty");
  TrackerPopulation out;
  out.reserve(survivors.size() * mutation.symbols.size());
  for (const auto& parent : survivors) {
    for (Symbol sym : mutation.symbols) {
      Tracker clone{parent.text, 0};
      clone.text.push_back(sym);
      out.push_back(std::move(clone));
    }
  }
  return out;
}

MotifSet run_mta(const TimeSeries& series, const MtaConfig& config, std::vector<GenerationStats>* stats) {
  config.validate();
  const std::size_t s = config.sax.symbol_length;
  if (series.size() < s) throw MtaError("series shorter than symbol length");

  const NormalizedSeries norm = z_normalize(series);
  const SymbolMatrix symbols = build_symbol_matrix(norm, config.sax);

  TrackerPopulation population = init_trackers(config.sax.alphabet_size);
  MutationTemplate mutation;
  std::vector<MemoryMotif> pool;

  for (std::size_t g = 1; !population.empty(); ++g) {
    const CandidateMatrix candidates = build_candidate_matrix(symbols, g, config.tme_enabled);
    if (candidates.words.empty()) break;

    GenerationStats gen{g, candidates.words.size(), 0, 0, 0};
    population = eliminate_unmatched(match_trackers(std::move(population), candidates));
    gen.matched = population.size();
    if (!population.empty()) {
      Confirmation confirmed = confirm_motifs(population, candidates, norm, config.match_threshold, s);
      population = eliminate_unconfirmed(std::move(confirmed.trackers));
      gen.confirmed = population.size();
      gen.motifs = confirmed.motifs.size();
      std::move(confirmed.motifs.begin(), confirmed.motifs.end(), std::back_inserter(pool));

      if (g == 1) {
        for (const auto& t : population) mutation.symbols.push_back(t.text.front());
      }
      population = proliferate_and_mutate(population, mutation);
    }
    if (stats) stats->push_back(gen);
  }
  return streamline(std::move(pool));
}

}  // namespace mta
