#pragma once

// Runs the CLI binary and captures stdout and the exit status.

#include <sys/wait.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace proc {

struct Result {
  int status = -1;
  std::string out;
};

inline std::string binary() { return SPINOR_FORGE_BIN; }

/// `args` is appended to the binary path verbatim; stderr is discarded unless redirected by the caller.
inline Result run(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += "'" + binary() + "' " + args;
  if (cmd.find("2>") == std::string::npos) cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + cmd);
  Result r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace proc
