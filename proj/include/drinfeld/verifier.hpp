#ifndef DRINFELD_VERIFIER_HPP
#define DRINFELD_VERIFIER_HPP

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "drinfeld/context.hpp"

namespace drinfeld {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

struct Report {
  unsigned q = 0;
  unsigned p = 0;
  std::vector<CheckResult> checks;
  bool overall = false;
  std::string version = kVersion;

  const CheckResult* find(const std::string& name) const;
};

/// Check names in execution order.
const std::vector<std::string>& check_names();

/// {2,3,4,5,7,8,9,11}, plus 13 when extended.
std::set<unsigned> supported_q(bool extended = false);

struct VerifyOptions {
  std::set<std::string> selection;  // empty = all
  bool extended = false;            // admit q = 13
  Exec exec = Exec::Parallel;
};

/// Throws UnsupportedQ or UnknownCheckName.
Report run_all(unsigned q, const VerifyOptions& options = {});

enum class Format { Json, Text };

/// With stable = true, elapsed times are written as 0.
nlohmann::json report_to_json(const Report& report, bool stable);
std::string report_to_text(const Report& report, bool stable);
/// Writes the report and returns the exit status (0 pass, 1 fail).
int emit(const Report& report, Format format, std::ostream& out, bool stable);
/// Same, to a file path. Throws IoError.
int emit(const Report& report, Format format, const std::string& path, bool stable);

enum class TableKind { Classes, DL, Brauer, GelfandGraev };

nlohmann::json table_json(const Context& ctx, TableKind kind);
std::string table_text(const Context& ctx, TableKind kind);

nlohmann::json curve_json(const FieldTower& tower, Exec exec = Exec::Parallel);
std::string curve_text(const FieldTower& tower, Exec exec = Exec::Parallel);

/// Element of F_q as text: the integer for prime-field elements, else g^k
/// with g the generator of F_{q^2}.
std::string format_element(const FieldTower& tower, Fq2 x);
std::string format_matrix(const FieldTower& tower, const Mat2& m);

}  // namespace drinfeld

#endif  // DRINFELD_VERIFIER_HPP
