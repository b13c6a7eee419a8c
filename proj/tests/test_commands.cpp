#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/commands.hpp"
#include "core/error.hpp"
#include "doctest.h"

using namespace encov;

namespace {

const std::string kFile = INSTANCE_DIR "/builtin.enc";

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

Report go(std::vector<std::string> args) { return run(std::move(args)); }

}  // namespace

TEST_CASE("command line parsing") {
  auto opts = parse_command_line({"pullback", kFile, "--sieve", "s_max_x", "--element", "2",
                                  "--at", "y", "--format", "machine", "--cap", "50"});
  CHECK(opts.subcommand == "pullback");
  CHECK(opts.file == kFile);
  CHECK(opts.selectors.at("sieve") == "s_max_x");
  CHECK(opts.selectors.at("element") == "2");
  CHECK(opts.selectors.at("at") == "y");
  CHECK(opts.format == ReportFormat::Machine);
  CHECK(opts.cap == 50);
  CHECK(opts.dmax == 6);

  CHECK(kind_of([] { parse_command_line({}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_command_line({"frobnicate"}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_command_line({"validate", "a.enc", "b.enc"}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_command_line({"validate", "--nope"}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_command_line({"validate", "--sieve"}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_command_line({"validate", "--format", "xml"}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_command_line({"validate", "--cap", "many"}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_command_line({"close", "--generators", "single"}); }) ==
        ErrorKind::Usage);
  CHECK(kind_of([] { run({"counterexample", "x.enc"}); }) == ErrorKind::Usage);
}

TEST_CASE("ENCOV_CAP supplies the default cap") {
  setenv("ENCOV_CAP", "123", 1);
  CHECK(parse_command_line({"validate", kFile}).cap == 123);
  CHECK(parse_command_line({"validate", kFile, "--cap", "7"}).cap == 7);
  setenv("ENCOV_CAP", "junk", 1);
  CHECK(kind_of([] { parse_command_line({"validate", "x.enc"}); }) == ErrorKind::Usage);
  unsetenv("ENCOV_CAP");
  CHECK(parse_command_line({"validate", kFile}).cap == 0);
}

TEST_CASE("validate walks the whole instance and passes") {
  auto rep = go({"validate", kFile});
  CHECK(rep.exit_code() == 0);
  const std::string text = rep.render(ReportFormat::Text);
  CHECK(text.find("command: validate") != std::string::npos);
  CHECK(text.find("quantale.q2") != std::string::npos);
  CHECK(text.find("ring.zmod12") != std::string::npos);
}

TEST_CASE("machine format emits key=value lines") {
  auto rep = go({"sheaf-check", kFile, "--presheaf", "p_slope", "--coverage", "j_p2",
                 "--format", "machine"});
  CHECK(rep.exit_code() == 0);
  const std::string text = rep.render(ReportFormat::Machine);
  CHECK(text.find("check.sheaf=pass") != std::string::npos);
  CHECK(text.find("command=sheaf-check") != std::string::npos);
}

TEST_CASE("pullback refuses an inadmissible element") {
  CHECK(kind_of([] {
          run({"pullback", kFile, "--sieve", "s_max_x", "--element", "0", "--at", "y"});
        }) == ErrorKind::Precondition);
}

TEST_CASE("category mismatches are preconditions") {
  CHECK(kind_of([] {
          run({"sheaf-check", kFile, "--presheaf", "p_slope", "--coverage", "j_chain"});
        }) == ErrorKind::Precondition);
}

TEST_CASE("localize accepts a topology selector") {
  auto rep = go({"localize", kFile, "--ring", "zmod6", "--topology", "t_s13"});
  CHECK(rep.exit_code() == 0);
  const std::string text = rep.render(ReportFormat::Text);
  CHECK(text.find("zmod2") != std::string::npos);

  CHECK(kind_of([] {
          run({"localize", kFile, "--ring", "zmod4", "--topology", "t_seed"});
        }) == ErrorKind::Precondition);  // t_seed is not a Gabriel topology
}

TEST_CASE("injectivity reports collapse collisions without failing") {
  auto rep = go({"injectivity", kFile, "--map", "collapse", "--category", "p2_t3"});
  CHECK(rep.exit_code() == 0);
  const std::string text = rep.render(ReportFormat::Text);
  CHECK(text.find("reported, not asserted") != std::string::npos);
  CHECK(text.find("collisions") != std::string::npos);
}

TEST_CASE("close trips the cap guard") {
  CHECK(kind_of([] { run({"close", kFile, "--coverage", "j_chain", "--cap", "2"}); }) ==
        ErrorKind::CapExceeded);
}

TEST_CASE("missing selector is a usage error") {
  CHECK(kind_of([] { run({"pullback", kFile, "--sieve", "s_max_x"}); }) == ErrorKind::Usage);
  CHECK(kind_of([] { run({"sheaf-check", kFile, "--presheaf", "p_slope"}); }) ==
        ErrorKind::Usage);
}

TEST_CASE("reports are deterministic across runs") {
  const std::vector<std::vector<std::string>> battery = {
      {"validate", kFile},
      {"coverage-check", kFile, "--coverage", "j_p2", "--with-t3"},
      {"base-change", kFile, "--map", "log"},
      {"counterexample", "--dmax", "3"},
  };
  for (const auto& args : battery) {
    const std::string a = go(args).render(ReportFormat::Machine);
    const std::string b = go(args).render(ReportFormat::Machine);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
  }
}

TEST_CASE("usage text names every subcommand") {
  const std::string u = usage_text();
  for (const char* sub :
       {"validate", "coverage-check", "close", "pullback", "base-change", "injectivity",
        "sheaf-check", "sheafify", "commute-check", "ideals", "gabriel-check", "gabriel-close",
        "localize", "counterexample"})
    CHECK(u.find(sub) != std::string::npos);
}
