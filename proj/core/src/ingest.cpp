#include "mta/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace mta::ingest {

namespace {

bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Drops a leading "[pid 1234] " as written by strace -f without -ff.
std::string_view strip_pid_prefix(std::string_view line) {
  if (!line.starts_with("[pid")) return line;
  const auto close = line.find(']');
  if (close == std::string_view::npos) return line;
  return trim(line.substr(close + 1));
}

}  // namespace

void SyscallMap::add(const std::string& name, int id) {
  if (id < 0) throw MtaError("negative id for syscall '" + name + "'");
  if (ids_.contains(name)) throw MtaError("duplicate syscall '" + name + "'");
  if (names_.contains(id)) {
    throw MtaError("duplicate id " + std::to_string(id) + " for '" + name + "' (already '" + names_[id] + "')");
  }
  ids_.emplace(name, id);
  names_.emplace(id, name);
}

std::optional<int> SyscallMap::find(std::string_view name) const {
  const auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SyscallMap load_syscall_map(std::string_view content) {
  SyscallMap map;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const auto nl = content.find('\n', pos);
    std::string_view line = content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream fields{std::string(line)};
    std::string name, id_text, extra;
    fields >> name >> id_text;
    const auto where = "syscall map line " + std::to_string(line_no) + ": ";
    if (id_text.empty() || (fields >> extra)) throw MtaError(where + "expected 'name id'");

    int id = 0;
    const auto [end, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc{} || end != id_text.data() + id_text.size()) {
      throw MtaError(where + "non-integer id '" + id_text + "'");
    }
    try {
      map.add(name, id);
    } catch (const MtaError& e) {
      throw MtaError(where + e.what());
    }
  }
  return map;
}

SyscallMap load_syscall_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MtaError("cannot open syscall map: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_syscall_map(buf.str());
}

ParsedTrace parse_strace(std::string_view text) {
  ParsedTrace out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;

    line = trim(line);
    if (line.empty()) continue;
    ++out.lines;

    line = strip_pid_prefix(line);
    std::size_t n = 0;
    if (!line.empty() && is_ident_start(line[0])) {
      n = 1;
      while (n < line.size() && is_ident_char(line[n])) ++n;
    }
    if (n == 0 || n >= line.size() || line[n] != '(') {
      ++out.skipped;
      continue;
    }
    out.calls.emplace_back(line.substr(0, n));
  }
  return out;
}

std::vector<std::string> concatenate_pid_traces(const PidTrace& parent, std::vector<PidTrace> children) {
  std::set<long> seen{parent.pid};
  for (const auto& child : children) {
    if (!seen.insert(child.pid).second) throw MtaError("duplicate pid " + std::to_string(child.pid));
  }
  std::sort(children.begin(), children.end(), [](const PidTrace& a, const PidTrace& b) { return a.pid < b.pid; });

  std::vector<std::string> out = parent.calls;
  for (auto& child : children) {
    std::move(child.calls.begin(), child.calls.end(), std::back_inserter(out));
  }
  return out;
}

EncodedCalls encode_calls(const std::vector<std::string>& calls, const SyscallMap& map, bool strict) {
  EncodedCalls out;
  out.ids.reserve(calls.size());
  for (std::size_t i = 0; i < calls.size(); ++i) {
    if (const auto id = map.find(calls[i])) {
      out.ids.push_back(static_cast<double>(*id));
    } else if (strict) {
      throw MtaError("unknown syscall '" + calls[i] + "' at position " + std::to_string(i));
    } else {
      ++out.dropped;
    }
  }
  return out;
}

TimeSeries encode_series(const std::vector<std::string>& calls, const SyscallMap& map, bool strict,
                         std::size_t* dropped) {
  EncodedCalls encoded = encode_calls(calls, map, strict);
  if (dropped) *dropped = encoded.dropped;
  return TimeSeries(std::move(encoded.ids), "syscalls");
}

}  // namespace mta::ingest
