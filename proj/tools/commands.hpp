#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mta/tracker.hpp"

namespace mta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

struct IngestOptions {
  std::string trace_prefix;  // reads <prefix>.<pid> files
  std::string syscall_map;
  std::optional<std::size_t> tail;
  std::optional<long> parent_pid;  // default: smallest pid found
  bool strict = false;
  std::string output;  // empty: stdout
};

struct DiscoverOptions {
  std::string series_path;
  MtaConfig config{SaxConfig{10, 10}, 0.0, false};
  std::size_t min_length = 40;
  std::optional<std::size_t> tail;
  std::string output;
};

struct SweepOptions {
  std::string series_path;
  std::vector<std::size_t> symbol_lengths{10, 20, 40};
  std::vector<int> alphabets{10};
  double threshold = 0.0;
  std::vector<bool> tme_modes{false, true};
  std::size_t min_length = 40;
  std::optional<std::size_t> tail;
  std::size_t jobs = 1;
  bool with_time = true;
  std::string output;
};

struct OracleOptions {
  std::string series_path;
  std::size_t granularity = 10;
  std::size_t min_separation = 1;
  int alphabet = 10;  // only used to render symbols
  std::size_t min_length = 40;
  std::optional<std::size_t> tail;
  std::string output;
};

struct SweepResult {
  std::size_t symbol_length = 0;
  int alphabet = 0;
  double threshold = 0.0;
  bool tme = false;
  std::size_t motif_count = 0;  // motifs with length >= min_length
  std::uint64_t quality = 0;
  long long wall_time_ms = 0;   // informational
  std::string error;            // non-empty when the cell failed

  bool same_outcome(const SweepResult& other) const;
};

/// Runs every (s, a, tme) cell; rows come back in parameter order whatever
/// the number of worker threads.
std::vector<SweepResult> run_sweep(const TimeSeries& series, const SweepOptions& options);
void write_sweep_table(std::ostream& out, const std::vector<SweepResult>& rows, bool with_time);

int cmd_ingest(const IngestOptions& options, std::ostream& out, std::ostream& err);
int cmd_discover(const DiscoverOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mta::cli
