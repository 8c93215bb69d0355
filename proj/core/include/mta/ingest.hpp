#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mta/series.hpp"

namespace mta::ingest {

/// Syscall name -> numeric id. Names and ids are both unique.
class SyscallMap {
 public:
  void add(const std::string& name, int id);
  std::optional<int> find(std::string_view name) const;
  std::size_t size() const { return ids_.size(); }

 private:
  std::map<std::string, int, std::less<>> ids_;
  std::map<int, std::string> names_;
};

/// Parses `name id` lines; '#' starts a comment. Errors name the line.
SyscallMap load_syscall_map(std::string_view content);
SyscallMap load_syscall_map_file(const std::string& path);

struct PidTrace {
  long pid = 0;
  std::vector<std::string> calls;
};

struct ParsedTrace {
  std::vector<std::string> calls;
  std::size_t lines = 0;    // non-blank lines seen
  std::size_t skipped = 0;  // signals, exits, resumptions, unparseable
};

/// Extracts the syscall name of each strace line. An unfinished call counts at
/// its `<unfinished ...>` line; the matching `<... name resumed>` line is
/// skipped, as are `---` signal and `+++` exit lines.
ParsedTrace parse_strace(std::string_view text);

/// Parent calls, then every child's calls in ascending pid order.
std::vector<std::string> concatenate_pid_traces(const PidTrace& parent, std::vector<PidTrace> children);

struct EncodedCalls {
  std::vector<double> ids;
  std::size_t dropped = 0;  // unknown names skipped when not strict
};

EncodedCalls encode_calls(const std::vector<std::string>& calls, const SyscallMap& map, bool strict);

/// encode_calls wrapped into a TimeSeries; throws "empty input" when nothing
/// was encoded.
TimeSeries encode_series(const std::vector<std::string>& calls, const SyscallMap& map, bool strict,
                         std::size_t* dropped = nullptr);

}  // namespace mta::ingest
