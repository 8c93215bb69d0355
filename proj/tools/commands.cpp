#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mta/ingest.hpp"
#include "mta/oracle.hpp"
#include "mta/report.hpp"

namespace mta::cli {

namespace fs = std::filesystem;

namespace {

// Writes `text` to the --output file when given, else to `out`.
void emit(const std::string& output, const std::string& text, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw MtaError("cannot write " + output);
  file << text;
}

TimeSeries load(const std::string& path, std::optional<std::size_t> tail) {
  TimeSeries series = load_series_file(path);
  return tail ? series.tail(*tail) : series;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MtaError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// <prefix>.<pid> files in pid order.
std::vector<std::pair<long, fs::path>> find_trace_files(const std::string& prefix) {
  const fs::path base(prefix);
  const fs::path dir = base.has_parent_path() ? base.parent_path() : fs::path(".");
  const std::string stem = base.filename().string() + ".";

  std::vector<std::pair<long, fs::path>> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (!name.starts_with(stem) || name.size() == stem.size()) continue;
    const std::string digits = name.substr(stem.size());
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
    files.emplace_back(std::stol(digits), entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

bool SweepResult::same_outcome(const SweepResult& other) const {
  return symbol_length == other.symbol_length && alphabet == other.alphabet && threshold == other.threshold &&
         tme == other.tme && motif_count == other.motif_count && quality == other.quality && error == other.error;
}

int cmd_ingest(const IngestOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto files = find_trace_files(options.trace_prefix);
    if (files.empty()) {
      err << "error: no trace files matching " << options.trace_prefix << ".<pid>\n";
      return kExitUsage;
    }
    const ingest::SyscallMap map = ingest::load_syscall_map_file(options.syscall_map);

    const long parent_pid = options.parent_pid.value_or(files.front().first);
    std::optional<ingest::PidTrace> parent;
    std::vector<ingest::PidTrace> children;
    std::size_t lines = 0, skipped = 0;
    for (const auto& [pid, path] : files) {
      ingest::ParsedTrace parsed = ingest::parse_strace(read_file(path));
      lines += parsed.lines;
      skipped += parsed.skipped;
      ingest::PidTrace trace{pid, std::move(parsed.calls)};
      if (pid == parent_pid) {
        parent = std::move(trace);
      } else {
        children.push_back(std::move(trace));
      }
    }
    if (!parent) {
      err << "error: no trace file for parent pid " << parent_pid << "\n";
      return kExitUsage;
    }

    const auto calls = ingest::concatenate_pid_traces(*parent, std::move(children));
    const ingest::EncodedCalls encoded = ingest::encode_calls(calls, map, options.strict);
    const TimeSeries series = options.tail ? TimeSeries(encoded.ids).tail(*options.tail) : TimeSeries(encoded.ids);

    std::ostringstream text;
    write_series(text, series.values());
    emit(options.output, text.str(), out);
    err << "files=" << files.size() << " parsed=" << lines << " skipped=" << skipped
        << " dropped=" << encoded.dropped << " encoded=" << encoded.ids.size() << " emitted=" << series.size()
        << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_discover(const DiscoverOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const TimeSeries series = load(options.series_path, options.tail);
    const MotifSet motifs = run_mta(series, options.config);
    emit(options.output, motif_report(motifs, options.min_length), out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

std::vector<SweepResult> run_sweep(const TimeSeries& series, const SweepOptions& options) {
  std::vector<SweepResult> cells;
  for (std::size_t s : options.symbol_lengths) {
    for (int a : options.alphabets) {
      for (bool tme : options.tme_modes) {
        SweepResult cell;
        cell.symbol_length = s;
        cell.alphabet = a;
        cell.threshold = options.threshold;
        cell.tme = tme;
        cells.push_back(cell);
      }
    }
  }

  const auto run_cell = [&](SweepResult& cell) {
    const auto begin = std::chrono::steady_clock::now();
    try {
      const MtaConfig config{SaxConfig{cell.symbol_length, cell.alphabet}, cell.threshold, cell.tme};
      const MotifSet motifs = run_mta(series, config);
      cell.motif_count = count_at_least(motifs, options.min_length);
      cell.quality = quality_measure(motifs, options.min_length);
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
    cell.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - begin)
                            .count();
  };

  const std::size_t workers = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(cells.size(), 1));
  if (workers == 1) {
    for (auto& cell : cells) run_cell(cell);
    return cells;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(cells[i]);
    });
  }
  pool.clear();
  return cells;
}

void write_sweep_table(std::ostream& out, const std::vector<SweepResult>& rows, bool with_time) {
  out << "s\ta\tr\ttme\tmotifs\tquality";
  if (with_time) out << "\ttime_ms";
  out << '\n';
  for (const auto& row : rows) {
    out << row.symbol_length << '\t' << row.alphabet << '\t' << row.threshold << '\t' << (row.tme ? "TME" : "NTME")
        << '\t';
    if (!row.error.empty()) {
      out << "error: " << row.error << '\n';
      continue;
    }
    out << row.motif_count << '\t' << row.quality;
    if (with_time) out << '\t' << row.wall_time_ms;
    out << '\n';
  }
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const TimeSeries series = load(options.series_path, options.tail);
    const auto rows = run_sweep(series, options);
    std::ostringstream text;
    write_sweep_table(text, rows, options.with_time);
    emit(options.output, text.str(), out);
    for (const auto& row : rows) {
      if (!row.error.empty()) err << "warning: cell s=" << row.symbol_length << " a=" << row.alphabet << ": " << row.error << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const TimeSeries series = load(options.series_path, options.tail);
    MotifSet motifs = oracle::brute_force_exact_motifs(series, options.granularity, options.min_separation);
    oracle::label_motifs(motifs, series, SaxConfig{options.granularity, options.alphabet});
    emit(options.output, motif_report(motifs, options.min_length), out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motif tracking: variable-length repeated pattern discovery in time series"};
  app.require_subcommand(1);

  IngestOptions ingest_opts;
  auto* ingest = app.add_subcommand("ingest", "Convert per-PID strace logs into a syscall id series");
  ingest->add_option("prefix", ingest_opts.trace_prefix, "Trace file prefix (reads <prefix>.<pid>)")->required();
  ingest->add_option("--syscall-map", ingest_opts.syscall_map, "Syscall name/id table")->required();
  ingest->add_option("--tail", ingest_opts.tail, "Keep only the last N calls");
  ingest->add_option("--parent-pid", ingest_opts.parent_pid, "Root process (default: smallest pid)");
  ingest->add_flag("--strict", ingest_opts.strict, "Fail on syscalls missing from the map");
  ingest->add_option("--output,-o", ingest_opts.output, "Series file to write (default stdout)");

  const auto add_mta_flags = [](CLI::App* cmd, std::size_t& s, int& a, std::size_t& min_length,
                                std::optional<std::size_t>& tail, std::string& output) {
    cmd->add_option("--symbol-length,-s", s, "Points per symbol (s)")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--alphabet,-a", a, "Alphabet size (a), 2..26")->capture_default_str()->check(CLI::Range(2, 26));
    cmd->add_option("--min-length", min_length, "Report motifs of at least this many points")->capture_default_str();
    cmd->add_option("--tail", tail, "Use only the last N points of the series");
    cmd->add_option("--output,-o", output, "Report file to write (default stdout)");
  };

  DiscoverOptions discover_opts;
  auto* discover = app.add_subcommand("discover", "Run the motif tracking algorithm on a series file");
  discover->add_option("series", discover_opts.series_path, "Series file (one number per line)")->required();
  add_mta_flags(discover, discover_opts.config.sax.symbol_length, discover_opts.config.sax.alphabet_size,
                discover_opts.min_length, discover_opts.tail, discover_opts.output);
  discover->add_option("--threshold,-r", discover_opts.config.match_threshold,
                       "Match threshold r on the z-normalized series")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  discover->add_flag("--tme,!--no-tme", discover_opts.config.tme_enabled, "Trivial-match elimination (default off)");

  SweepOptions sweep_opts;
  std::vector<std::string> tme_modes{"off", "on"};
  auto* sweep = app.add_subcommand("sweep", "Tabulate motif count and quality over a parameter grid");
  sweep->add_option("series", sweep_opts.series_path, "Series file")->required();
  sweep->add_option("--symbol-length,-s", sweep_opts.symbol_lengths, "Symbol lengths, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--alphabet,-a", sweep_opts.alphabets, "Alphabet sizes, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--threshold,-r", sweep_opts.threshold, "Match threshold r")->check(CLI::NonNegativeNumber);
  sweep->add_option("--tme-modes", tme_modes, "Trivial-match elimination modes: off,on")
      ->delimiter(',')
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  sweep->add_option("--min-length", sweep_opts.min_length, "Minimum motif length counted")->capture_default_str();
  sweep->add_option("--tail", sweep_opts.tail, "Use only the last N points of the series");
  sweep->add_option("--jobs,-j", sweep_opts.jobs, "Cells evaluated in parallel")->capture_default_str();
  sweep->add_flag("!--no-time", sweep_opts.with_time, "Omit the wall-time column");
  sweep->add_option("--output,-o", sweep_opts.output, "Table file to write (default stdout)");

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive exact-repeat motif search (validation reference)");
  oracle->add_option("series", oracle_opts.series_path, "Series file")->required();
  add_mta_flags(oracle, oracle_opts.granularity, oracle_opts.alphabet, oracle_opts.min_length, oracle_opts.tail,
                oracle_opts.output);
  oracle->add_option("--min-separation", oracle_opts.min_separation, "Minimum distance between kept starts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*ingest) return cmd_ingest(ingest_opts, out, err);
  if (*discover) return cmd_discover(discover_opts, out, err);
  if (*sweep) {
    sweep_opts.tme_modes.clear();
    for (const auto& mode : tme_modes) sweep_opts.tme_modes.push_back(mode == "on");
    return cmd_sweep(sweep_opts, out, err);
  }
  return cmd_oracle(oracle_opts, out, err);
}

}  // namespace mta::cli
