#include "mta/ingest.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace mta::ingest {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(ParseStrace, NameBeforeParenthesis) {
  const auto parsed = parse_strace("open(\"/etc/passwd\", O_RDONLY) = 3\n");
  EXPECT_EQ(parsed.calls, std::vector<std::string>{"open"});
  EXPECT_EQ(parsed.skipped, 0u);
}

TEST(ParseStrace, SkipsSignalsExitsAndResumptions) {
  const auto parsed = parse_strace(
      "--- SIGCHLD (Child exited) ---\n"
      "read(3, <unfinished ...>\n"
      "<... read resumed> \"abc\", 3) = 3\n"
      "+++ exited with 0 +++\n"
      "garbage line\n");
  EXPECT_EQ(parsed.calls, std::vector<std::string>{"read"});
  EXPECT_EQ(parsed.lines, 5u);
  EXPECT_EQ(parsed.skipped, 4u);
}

TEST(ParseStrace, PreservesOrderAndIgnoresBlankLines) {
  const auto parsed = parse_strace("read(5, \"abc\", 3) = 3\n\n   \nwrite(1, \"abc\", 3) = 3");
  EXPECT_EQ(parsed.calls, (std::vector<std::string>{"read", "write"}));
  EXPECT_EQ(parsed.lines, 2u);
}

TEST(ParseStrace, PidPrefix) {
  EXPECT_EQ(parse_strace("[pid  4242] getpid() = 4242\n").calls, std::vector<std::string>{"getpid"});
}

TEST(SyscallMap, ParsesLinesAndComments) {
  const auto map = load_syscall_map("# comment\nread 3\n  write\t4  # trailing\n\n");
  EXPECT_EQ(map.size(), 2u);
  EXPECT_EQ(map.find("read"), 3);
  EXPECT_EQ(map.find("write"), 4);
  EXPECT_FALSE(map.find("open").has_value());
}

TEST(SyscallMap, DuplicatesAndBadIdsNameTheLine) {
  try {
    load_syscall_map("read 3\nread 4\n");
    FAIL();
  } catch (const MtaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
  EXPECT_THROW(load_syscall_map("read three\n"), MtaError);
  EXPECT_THROW(load_syscall_map("read 3 extra\n"), MtaError);
  EXPECT_THROW(load_syscall_map("read 3\nwrite 3\n"), MtaError);
}

TEST(SyscallMap, ShippedLinux24Table) {
  const auto map = load_syscall_map_file(MTA_SYSCALL_MAP);
  EXPECT_EQ(map.find("exit"), 1);
  EXPECT_EQ(map.find("read"), 3);
  EXPECT_EQ(map.find("write"), 4);
  EXPECT_EQ(map.find("open"), 5);
  EXPECT_EQ(map.find("close"), 6);
  EXPECT_EQ(map.find("execve"), 11);
  EXPECT_EQ(map.find("chmod"), 15);
  EXPECT_EQ(map.find("ioctl"), 54);
  EXPECT_EQ(map.find("mmap2"), 192);
  EXPECT_EQ(map.find("fstat64"), 197);
  EXPECT_EQ(map.find("exit_group"), 252);
}

TEST(Concatenate, ParentThenChildrenByPid) {
  const PidTrace parent{100, {"a"}};
  EXPECT_EQ(concatenate_pid_traces(parent, {{102, {"b"}}, {105, {"c"}}}), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(concatenate_pid_traces(parent, {}), std::vector<std::string>{"a"});
  EXPECT_EQ(concatenate_pid_traces(parent, {{105, {"c"}}, {102, {"b"}}}), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_THROW(concatenate_pid_traces(parent, {{100, {"x"}}}), MtaError);
  EXPECT_THROW(concatenate_pid_traces(parent, {{7, {"x"}}, {7, {"y"}}}), MtaError);
}

TEST(Concatenate, FoldingChildrenMatchesSortedConcatenation) {
  const PidTrace parent{1, {"p"}};
  const std::vector<PidTrace> children{{9, {"i", "j"}}, {3, {"c"}}, {5, {"e", "f"}}};
  PidTrace folded = parent;
  for (long pid : {3L, 5L, 9L}) {
    const auto it = std::find_if(children.begin(), children.end(), [&](const PidTrace& t) { return t.pid == pid; });
    folded.calls = concatenate_pid_traces(folded, {*it});
  }
  EXPECT_EQ(folded.calls, concatenate_pid_traces(parent, children));
}

TEST(Encode, KnownNames) {
  SyscallMap map;
  map.add("open", 5);
  map.add("read", 3);
  map.add("close", 6);
  const auto series = encode_series({"open", "read", "close"}, map, true);
  EXPECT_EQ(std::vector<double>(series.values().begin(), series.values().end()), (std::vector<double>{5, 3, 6}));
}

TEST(Encode, EmptyAndUnknown) {
  SyscallMap map;
  map.add("read", 3);
  try {
    encode_series({}, map, true);
    FAIL();
  } catch (const MtaError& e) {
    EXPECT_STREQ(e.what(), "empty input");
  }

  const auto loose = encode_calls({"read", "bogus", "read"}, map, false);
  EXPECT_EQ(loose.ids, (std::vector<double>{3, 3}));
  EXPECT_EQ(loose.dropped, 1u);

  try {
    encode_calls({"read", "bogus"}, map, true);
    FAIL();
  } catch (const MtaError& e) {
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("position 1"), std::string::npos);
  }
}

TEST(Ingest, CountersReconcileOnFixture) {
  const auto map = load_syscall_map_file(MTA_SYSCALL_MAP);
  std::size_t lines = 0, skipped = 0, calls = 0, dropped = 0, encoded = 0;
  for (const char* pid : {"1200", "1250", "10001"}) {
    const auto parsed = parse_strace(slurp(std::string(MTA_TEST_DATA) + "/strace/trace." + pid));
    const auto enc = encode_calls(parsed.calls, map, false);
    lines += parsed.lines;
    skipped += parsed.skipped;
    calls += parsed.calls.size();
    dropped += enc.dropped;
    encoded += enc.ids.size();
  }
  EXPECT_EQ(lines, 24u);
  EXPECT_EQ(skipped, 4u);
  EXPECT_EQ(dropped, 2u);
  EXPECT_EQ(encoded, 18u);
  EXPECT_EQ(lines, encoded + skipped + dropped);
  EXPECT_EQ(calls, encoded + dropped);
}

}  // namespace
}  // namespace mta::ingest
