#pragma once

#include <string>
#include <vector>

namespace encov {

enum class CheckStatus { Pass, Fail, NotChecked };

enum class ReportFormat { Text, Machine };

const char* check_status_name(CheckStatus s);

/// Ordered, append-only result sheet. Everything the tool asserts or
/// measures goes through here so that rendering is deterministic:
/// no pointers, no timestamps, no floating point, insertion order only.
class Report {
 public:
  void kv(const std::string& key, const std::string& value);
  void note(const std::string& text);
  void check(const std::string& name, CheckStatus status, const std::string& detail = "");
  void check(const std::string& name, bool passed, const std::string& detail = "");

  bool all_passed() const;
  bool any_failed() const;
  /// 0 = every check passed, 1 = some check failed, 6 = nothing failed
  /// but at least one check could not be run (cap exceeded).
  int exit_code() const;

  std::string render(ReportFormat format) const;

 private:
  enum class LineType { KeyValue, Note, Check };
  struct Line {
    LineType type;
    std::string key;
    std::string value;
    CheckStatus status = CheckStatus::Pass;
  };
  std::vector<Line> lines_;
};

}  // namespace encov
