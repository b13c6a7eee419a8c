#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/report.hpp"

namespace encov {

struct CommandOptions {
  std::string subcommand;
  std::string file;  // instance path; empty when the command takes none
  std::map<std::string, std::string> selectors;
  int dmax = 6;
  long long cap = 0;  // 0 = per-operation defaults
  std::string generators = "full";
  ReportFormat format = ReportFormat::Text;
};

/// argv-style arguments without the program name. The first positional
/// token is the subcommand, the second (if any) the instance file.
/// Flags: --dmax N, --cap N, --generators full, --format text|machine,
/// --with-t3, and the selector flags --sieve/--presheaf/--coverage/
/// --map/--category/--ring/--multset/--topology/--gradedspec/
/// --element/--at. ENCOV_CAP supplies --cap's default.
CommandOptions parse_command_line(const std::vector<std::string>& args);

Report run_command(const CommandOptions& opts);

/// parse_command_line + run_command.
Report run(const std::vector<std::string>& args);

std::string usage_text();

}  // namespace encov
