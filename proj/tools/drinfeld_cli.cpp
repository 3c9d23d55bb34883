// Command-line front end: verify, table, curve.

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drinfeld/context.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/verifier.hpp"

namespace {

constexpr int kUsageError = 2;

std::set<std::string> split_checks(const std::vector<std::string>& raw) {
  std::set<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) out.insert(name);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the decomposition of the canonical representation of the Drinfeld curve"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned q = 0;
  std::string format = "text";
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  auto* verify = app.add_subcommand("verify", "Run the checks for one q");
  std::vector<std::string> checks;
  std::string out_path;
  bool stable = false;
  bool extended = false;
  verify->add_option("--q", q, "Prime power q")->required();
  verify->add_option("--check", checks, "Comma-separated check names (default: all)");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "Write the report to a file");
  verify->add_flag("--stable", stable, "Zero the timing fields for byte-stable output");
  verify->add_flag("--allow-large", extended, "Admit q = 13");

  auto* table = app.add_subcommand("table", "Dump classes, DL characters, Brauer matrix or Gelfand-Graev values");
  std::string what = "classes";
  table->add_option("--q", q, "Prime power q")->required();
  table->add_option("--what", what, "classes|dl|brauer|gg")->check(CLI::IsMember({"classes", "dl", "brauer", "gg"}));
  table->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* curve = app.add_subcommand("curve", "Smoothness, genus and point counts");
  curve->add_option("--q", q, "Prime power q")->required();
  curve->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* list = app.add_subcommand("checks", "List check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  const drinfeld::Exec exec = serial ? drinfeld::Exec::Serial : drinfeld::Exec::Parallel;
  try {
    if (*list) {
      for (const auto& name : drinfeld::check_names()) std::cout << name << "\n";
      return 0;
    }
    if (*verify) {
      drinfeld::VerifyOptions options;
      options.selection = split_checks(checks);
      options.extended = extended;
      options.exec = exec;
      const drinfeld::Report report = drinfeld::run_all(q, options);
      const auto fmt = format == "json" ? drinfeld::Format::Json : drinfeld::Format::Text;
      if (!out_path.empty()) return drinfeld::emit(report, fmt, out_path, stable);
      return drinfeld::emit(report, fmt, std::cout, stable);
    }
    if (*table) {
      const drinfeld::Context ctx(q, exec);
      const drinfeld::TableKind kind = what == "dl"       ? drinfeld::TableKind::DL
                                       : what == "brauer" ? drinfeld::TableKind::Brauer
                                       : what == "gg"     ? drinfeld::TableKind::GelfandGraev
                                                          : drinfeld::TableKind::Classes;
      if (format == "json") {
        std::cout << drinfeld::table_json(ctx, kind).dump(2) << "\n";
      } else {
        std::cout << drinfeld::table_text(ctx, kind);
      }
      return 0;
    }
    if (*curve) {
      const auto tower = drinfeld::FieldTower::build(q);
      if (format == "json") {
        std::cout << drinfeld::curve_json(tower, exec).dump(2) << "\n";
      } else {
        std::cout << drinfeld::curve_text(tower, exec);
      }
      return 0;
    }
  } catch (const drinfeld::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
