#pragma once

// Shared helpers for tests that shell out to the command-line binary.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded so error-path
// tests stay quiet. Returns -1 as the exit code if the child died abnormally.
inline CmdResult run_command(const std::string& cmd) {
  CmdResult result;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) result.out += buf.data();
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace testsupport
