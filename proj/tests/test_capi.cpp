#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "encov/encov.h"

namespace {

const char* kFile = INSTANCE_DIR "/builtin.enc";

encov_status run_argv(std::vector<const char*> argv, encov_report** out) {
  return encov_run(static_cast<int>(argv.size()), argv.data(), out);
}

}  // namespace

TEST_CASE("a completed run hands back a report") {
  encov_report* rep = nullptr;
  const encov_status st = run_argv({"validate", kFile}, &rep);
  CHECK(st == ENCOV_OK);
  REQUIRE(rep != nullptr);
  CHECK(encov_report_exit_code(rep) == 0);
  const std::string text = encov_report_text(rep);
  CHECK(text.find("command: validate") != std::string::npos);
  CHECK(std::string(encov_last_error()).empty());
  encov_report_free(rep);
}

TEST_CASE("a failing check still produces a report") {
  encov_report* rep = nullptr;
  const encov_status st =
      run_argv({"gabriel-check", kFile, "--topology", "t_seed"}, &rep);
  CHECK(st == ENCOV_CHECK_FAILED);
  REQUIRE(rep != nullptr);
  CHECK(encov_report_exit_code(rep) == 1);
  CHECK(std::string(encov_report_text(rep)).find("fail") != std::string::npos);
  encov_report_free(rep);
}

TEST_CASE("an aborted run leaves the report null and sets the error text") {
  encov_report* rep = nullptr;
  CHECK(run_argv({"frobnicate"}, &rep) == ENCOV_USAGE);
  CHECK(rep == nullptr);
  CHECK_FALSE(std::string(encov_last_error()).empty());

  CHECK(run_argv({"pullback", kFile, "--sieve", "s_max_x", "--element", "0", "--at", "y"},
                 &rep) == ENCOV_PRECONDITION);
  CHECK(rep == nullptr);

  CHECK(run_argv({"close", kFile, "--coverage", "j_chain", "--cap", "2"}, &rep) ==
        ENCOV_CAP_EXCEEDED);
  CHECK(rep == nullptr);
  CHECK(std::string(encov_last_error()).find("cap") != std::string::npos);

  CHECK(run_argv({"validate", INSTANCE_DIR "/missing.enc"}, &rep) == ENCOV_USAGE);
  CHECK(rep == nullptr);
}

TEST_CASE("a successful run clears the error text") {
  encov_report* rep = nullptr;
  CHECK(run_argv({"frobnicate"}, &rep) == ENCOV_USAGE);
  CHECK_FALSE(std::string(encov_last_error()).empty());
  CHECK(run_argv({"counterexample", "--dmax", "2"}, &rep) == ENCOV_OK);
  REQUIRE(rep != nullptr);
  CHECK(std::string(encov_last_error()).empty());
  encov_report_free(rep);
}

TEST_CASE("argument validation") {
  CHECK(encov_run(0, nullptr, nullptr) == ENCOV_BAD_ARGUMENT);
  encov_report* rep = reinterpret_cast<encov_report*>(&rep);
  CHECK(run_argv({}, &rep) == ENCOV_USAGE);
  CHECK(rep == nullptr);  // cleared even on failure
  CHECK(std::string(encov_report_text(nullptr)).empty());
  CHECK(encov_report_exit_code(nullptr) == ENCOV_BAD_ARGUMENT);
  encov_report_free(nullptr);
}

TEST_CASE("status names and abi version") {
  CHECK(std::strcmp(encov_status_name(ENCOV_OK), "ok") == 0);
  CHECK(std::strcmp(encov_status_name(ENCOV_CHECK_FAILED), "check failed") == 0);
  CHECK(std::strcmp(encov_status_name(ENCOV_CAP_EXCEEDED), "cap exceeded") == 0);
  CHECK(std::strcmp(encov_status_name(ENCOV_PRECONDITION), "precondition failed") == 0);
  CHECK(encov_abi_version() == 1);
}
