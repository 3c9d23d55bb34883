#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "drinfeld/error.hpp"
#include "drinfeld/verifier.hpp"

using namespace drinfeld;

namespace {

int run_cli(const std::string& args, std::string* out = nullptr) {
  const auto tmp = std::filesystem::temp_directory_path() / "drinfeld_cli_test.out";
  const std::string cmd = std::string(DRINFELD_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (out != nullptr) {
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("every check passes for small q") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    const Report r = run_all(q);
    CHECK(r.overall);
    CHECK(r.q == q);
    CHECK(r.version == kVersion);
    REQUIRE(r.checks.size() == check_names().size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      CHECK(r.checks[i].name == check_names()[i]);
      CHECK(r.checks[i].status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("selection and errors") {
  VerifyOptions opts;
  opts.selection = {"structural", "curve-geometry"};
  const Report r = run_all(3, opts);
  CHECK(r.find("structural")->status == CheckStatus::Pass);
  CHECK(r.find("curve-geometry")->status == CheckStatus::Pass);
  CHECK(r.find("canonical-decomposition")->status == CheckStatus::Skipped);
  CHECK(r.find("no-such-check") == nullptr);
  CHECK(r.overall);

  opts.selection = {"bogus"};
  try {
    run_all(3, opts);
    FAIL("expected UnknownCheckName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCheckName);
  }
  for (unsigned q : {0u, 1u, 6u, 13u, 16u}) {
    try {
      run_all(q);
      FAIL("expected UnsupportedQ for " << q);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedQ);
    }
  }
  CHECK(supported_q().count(13) == 0);
  CHECK(supported_q(true).count(13) == 1);
}

TEST_CASE("stable reports are byte-identical and round-trip") {
  const Report a = run_all(4);
  const Report b = run_all(4, VerifyOptions{{}, false, Exec::Serial});
  const std::string ja = report_to_json(a, true).dump(2);
  CHECK(ja == report_to_json(b, true).dump(2));
  const auto parsed = nlohmann::json::parse(ja);
  CHECK(parsed["q"] == 4);
  CHECK(parsed["overall"] == "pass");
  CHECK(parsed["checks"].size() == check_names().size());
  for (const auto& c : parsed["checks"]) CHECK(c["elapsed_ms"] == 0);
  CHECK(report_to_text(a, true) == report_to_text(b, true));

  std::ostringstream out;
  CHECK(emit(a, Format::Json, out, true) == 0);
  CHECK(nlohmann::json::parse(out.str()) == parsed);
  try {
    emit(a, Format::Text, "/nonexistent-dir/report.txt", true);
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("failing report exits with 1") {
  Report r = run_all(2);
  r.checks.front().status = CheckStatus::Fail;
  r.overall = false;
  std::ostringstream out;
  CHECK(emit(r, Format::Text, out, true) == 1);
}

TEST_CASE("tables") {
  const Context ctx(3);
  for (TableKind k : {TableKind::Classes, TableKind::DL, TableKind::Brauer, TableKind::GelfandGraev}) {
    CHECK_FALSE(table_json(ctx, k).empty());
    CHECK_FALSE(table_text(ctx, k).empty());
  }
  CHECK(format_element(ctx.tower, ctx.tower.from_int(2)) == "2");
  CHECK(curve_json(ctx.tower)["genus_degree_formula"] == 3);
  CHECK(curve_json(ctx.tower)["points_Fq4"] == 28);
}

TEST_CASE("command line") {
  std::string out;
  CHECK(run_cli("verify --q 2", &out) == 0);
  CHECK(out.find("overall: pass") != std::string::npos);
  CHECK(run_cli("verify --q 3 --format json --stable", &out) == 0);
  CHECK(nlohmann::json::parse(out)["overall"] == "pass");
  CHECK(run_cli("verify --q 3 --check structural,field-sanity --format json --stable", &out) == 0);
  CHECK(nlohmann::json::parse(out)["checks"].size() == check_names().size());
  CHECK(run_cli("verify --q 6") == 2);
  CHECK(run_cli("verify --q 3 --check bogus") == 2);
  CHECK(run_cli("verify") == 2);
  CHECK(run_cli("verify --q 3 --format xml") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("checks", &out) == 0);
  CHECK(out.find("canonical-decomposition") != std::string::npos);
  CHECK(run_cli("table --q 3 --what dl --format json", &out) == 0);
  CHECK_NOTHROW(nlohmann::json::parse(out));
  CHECK(run_cli("curve --q 3 --serial", &out) == 0);
  CHECK(out.find("smooth") != std::string::npos);

  const auto tmp = std::filesystem::temp_directory_path() / "drinfeld_report.json";
  CHECK(run_cli("verify --q 2 --format json --stable --out " + tmp.string()) == 0);
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["q"] == 2);
  std::filesystem::remove(tmp);
}
