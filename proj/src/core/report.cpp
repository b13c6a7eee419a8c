#include "core/report.hpp"

#include <sstream>

namespace encov {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotChecked: return "not-checked";
  }
  return "unknown";
}

void Report::kv(const std::string& key, const std::string& value) {
  lines_.push_back({LineType::KeyValue, key, value});
}

void Report::note(const std::string& text) {
  lines_.push_back({LineType::Note, "", text});
}

void Report::check(const std::string& name, CheckStatus status, const std::string& detail) {
  lines_.push_back({LineType::Check, name, detail, status});
}

void Report::check(const std::string& name, bool passed, const std::string& detail) {
  check(name, passed ? CheckStatus::Pass : CheckStatus::Fail, detail);
}

bool Report::all_passed() const { return exit_code() == 0; }

bool Report::any_failed() const {
  for (const Line& l : lines_)
    if (l.type == LineType::Check && l.status == CheckStatus::Fail) return true;
  return false;
}

int Report::exit_code() const {
  bool not_checked = false;
  for (const Line& l : lines_) {
    if (l.type != LineType::Check) continue;
    if (l.status == CheckStatus::Fail) return 1;
    if (l.status == CheckStatus::NotChecked) not_checked = true;
  }
  return not_checked ? 6 : 0;
}

namespace {

std::string one_line(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out += (c == '\n') ? ' ' : c;
  return out;
}

}  // namespace

std::string Report::render(ReportFormat format) const {
  std::ostringstream os;
  for (const Line& l : lines_) {
    switch (l.type) {
      case LineType::KeyValue:
        if (format == ReportFormat::Machine)
          os << l.key << '=' << one_line(l.value) << '\n';
        else
          os << l.key << ": " << one_line(l.value) << '\n';
        break;
      case LineType::Note:
        if (format == ReportFormat::Machine)
          os << "note=" << one_line(l.value) << '\n';
        else
          os << "note: " << one_line(l.value) << '\n';
        break;
      case LineType::Check:
        if (format == ReportFormat::Machine) {
          os << "check." << l.key << '=' << check_status_name(l.status);
          if (!l.value.empty()) os << " detail=" << one_line(l.value);
          os << '\n';
        } else {
          os << "check " << l.key << ": " << check_status_name(l.status);
          if (!l.value.empty()) os << "  [" << one_line(l.value) << ']';
          os << '\n';
        }
        break;
    }
  }
  return os.str();
}

}  // namespace encov
