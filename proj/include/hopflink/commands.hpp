#pragma once

// Report builders behind the command-line subcommands.

#include <optional>
#include <string>

#include "hopflink/report.hpp"

namespace hopf {

struct CommandOptions {
  int field_order = 0;            // 0 keeps the order of the input
  std::optional<std::string> dot; // quiver: DOT output path
  std::string corpus_dir = "corpus";
};

/// command is one of check, coradical, quiver, components, verify-dcp,
/// smash, corpus. Library errors propagate to the caller.
AnalysisReport run_command(const std::string& command, const std::string& spec,
                           const CommandOptions& opts = {});

}  // namespace hopf
