#ifndef KORBIT_TOOLS_CLI_HPP
#define KORBIT_TOOLS_CLI_HPP

/*
  Batch command layer. Every command is a pure function from a RunConfig
  to (exit code, output text), so tests can drive the emitters in
  process; run_cli adds argument parsing and output redirection on top.

  Exit codes: 0 success / all checks pass, 1 usage or size-guard error,
  2 a verification or property suite failed.
*/

#include <stdexcept>
#include <string>

#include "korbit/clan.hpp"

namespace korbit_cli {

struct RunConfig {
  korbit::RealFormSpec spec;
  std::string format = "text";  // text | json | dot
  int field = 3;                // finite field for verify
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

// invalid arguments, unsupported formats, exceeded size guards
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CommandResult cmd_orbits(const RunConfig& cfg);
CommandResult cmd_weak_order(const RunConfig& cfg);
CommandResult cmd_closure_order(const RunConfig& cfg);
CommandResult cmd_jset(const RunConfig& cfg, const std::string& clan_text);
CommandResult cmd_minexpr(const RunConfig& cfg, const std::string& clan_text,
                          const std::string& word_text);
CommandResult cmd_demazure(const RunConfig& cfg, const std::string& clan_text,
                           const std::string& word_text);
CommandResult cmd_theorems(const RunConfig& cfg);
CommandResult cmd_counterexample(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);

int run_cli(int argc, const char* const* argv);

}  // namespace korbit_cli

#endif
