#include "encov/encov.h"

#include <exception>
#include <string>
#include <vector>

#include "core/commands.hpp"
#include "core/error.hpp"
#include "core/report.hpp"

struct encov_report {
  std::string text;
  int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

encov_status status_of(encov::ErrorKind kind) {
  using encov::ErrorKind;
  switch (kind) {
    case ErrorKind::Usage: return ENCOV_USAGE;
    case ErrorKind::Parse: return ENCOV_PARSE;
    case ErrorKind::Unresolved: return ENCOV_UNRESOLVED;
    case ErrorKind::Structure: return ENCOV_STRUCTURE;
    case ErrorKind::CapExceeded: return ENCOV_CAP_EXCEEDED;
    case ErrorKind::Precondition: return ENCOV_PRECONDITION;
    case ErrorKind::Internal: return ENCOV_INTERNAL;
  }
  return ENCOV_INTERNAL;
}

}  // namespace

extern "C" {

encov_status encov_run(int argc, const char* const* argv, encov_report** out) {
  if (out == nullptr) return ENCOV_BAD_ARGUMENT;
  *out = nullptr;
  if (argc < 0 || (argc > 0 && argv == nullptr)) {
    g_last_error = "argc/argv mismatch";
    return ENCOV_BAD_ARGUMENT;
  }
  try {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc));
    for (int i = 0; i < argc; ++i) {
      if (argv[i] == nullptr) {
        g_last_error = "null argument";
        return ENCOV_BAD_ARGUMENT;
      }
      args.emplace_back(argv[i]);
    }
    const encov::CommandOptions opts = encov::parse_command_line(args);
    const encov::Report rep = encov::run_command(opts);
    auto* handle = new encov_report{rep.render(opts.format), rep.exit_code()};
    *out = handle;
    g_last_error.clear();
    switch (handle->exit_code) {
      case 0: return ENCOV_OK;
      case 1: return ENCOV_CHECK_FAILED;
      default: return ENCOV_CAP_EXCEEDED;
    }
  } catch (const encov::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ENCOV_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ENCOV_INTERNAL;
  }
}

const char* encov_report_text(const encov_report* rep) {
  return rep ? rep->text.c_str() : "";
}

int encov_report_exit_code(const encov_report* rep) {
  return rep ? rep->exit_code : ENCOV_BAD_ARGUMENT;
}

void encov_report_free(encov_report* rep) { delete rep; }

const char* encov_last_error(void) { return g_last_error.c_str(); }

const char* encov_status_name(encov_status s) {
  switch (s) {
    case ENCOV_OK: return "ok";
    case ENCOV_CHECK_FAILED: return "check failed";
    case ENCOV_USAGE: return "usage error";
    case ENCOV_PARSE: return "parse error";
    case ENCOV_UNRESOLVED: return "unresolved name";
    case ENCOV_STRUCTURE: return "structure error";
    case ENCOV_CAP_EXCEEDED: return "cap exceeded";
    case ENCOV_PRECONDITION: return "precondition failed";
    case ENCOV_INTERNAL: return "internal error";
    case ENCOV_BAD_ARGUMENT: return "bad argument";
  }
  return "unknown";
}

int encov_abi_version(void) { return 1; }

}  // extern "C"
