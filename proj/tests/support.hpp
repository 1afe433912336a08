#pragma once

// Helpers for driving the command line binary from tests. The binary path
// arrives in the GUCHAR_CLI_BIN environment variable, set by the build.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

inline std::string cli_path() {
  const char* p = std::getenv("GUCHAR_CLI_BIN");
  if (p == nullptr || *p == '\0')
    throw std::runtime_error("GUCHAR_CLI_BIN is not set; run through ctest");
  return p;
}

inline RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Parse the csv table output: header row, then one row per level r with the
// level in the first column. Returns rows of cell strings without the level.
inline std::vector<std::vector<std::string>> parse_csv_table(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  auto ls = lines_of(text);
  for (size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].empty()) continue;
    auto cells = split(ls[i], ',');
    rows.emplace_back(cells.begin() + 1, cells.end());
  }
  return rows;
}

}  // namespace testsupport
