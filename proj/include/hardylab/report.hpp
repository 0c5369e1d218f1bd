#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace hardylab {

enum class Status { pass, fail, inconclusive, hypothesis_not_met };

std::string to_string(Status status);

using ParamValue = std::variant<bool, std::int64_t, double, std::string>;

struct VerificationReport {
  std::string check;
  Status status = Status::inconclusive;
  std::map<std::string, double> residuals;
  std::map<std::string, ParamValue> params;
  std::vector<std::string> notes;

  // Records a residual with its tolerance and downgrades status to fail if
  // value > tol. The tolerance lands in params as "tol.<name>".
  void require_at_most(const std::string& name, double value, double tol);
  void require_at_least(const std::string& name, double value, double bound);
};

// Deterministic JSON array; throws non-finite-report on NaN or inf.
std::string to_json(const std::vector<VerificationReport>& reports);
std::string to_human(const std::vector<VerificationReport>& reports);

// 0 all pass, 1 any fail, 3 only hypothesis-not-met / inconclusive besides pass.
int exit_code(const std::vector<VerificationReport>& reports);

// Writes via a temporary file and rename.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace hardylab
