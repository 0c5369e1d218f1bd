#include "hardylab/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hardylab/error.hpp"

namespace hardylab {

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "inconclusive";
}

void VerificationReport::require_at_most(const std::string& name, double value, double tol) {
  residuals[name] = value;
  params["tol." + name] = tol;
  if (!(value <= tol)) status = Status::fail;
}

void VerificationReport::require_at_least(const std::string& name, double value, double bound) {
  residuals[name] = value;
  params["min." + name] = bound;
  if (!(value >= bound)) status = Status::fail;
}

namespace {

double finite_or_throw(double x, const std::string& where) {
  if (!std::isfinite(x)) throw Error(ErrorKind::non_finite_report, "non-finite value in " + where);
  return x;
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    nlohmann::ordered_json j;
    j["check"] = rep.check;
    j["status"] = to_string(rep.status);
    nlohmann::ordered_json res = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.residuals) res[k] = finite_or_throw(v, rep.check + "." + k);
    j["residuals"] = res;
    nlohmann::ordered_json par = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.params) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) par[k] = finite_or_throw(x, rep.check + "." + k);
            else par[k] = x;
          },
          v);
    }
    j["params"] = par;
    j["notes"] = rep.notes;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string to_human(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  for (const auto& rep : reports) {
    out << "[" << to_string(rep.status) << "] " << rep.check << "\n";
    for (const auto& note : rep.notes) out << "  NOTE: " << note << "\n";
    for (const auto& [k, v] : rep.residuals) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << "  " << k << " = " << buf << "\n";
    }
  }
  return out.str();
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool soft = false;
  for (const auto& rep : reports) {
    if (rep.status == Status::fail) return 1;
    if (rep.status != Status::pass) soft = true;
  }
  return soft ? 3 : 0;
}

void write_file_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::io_error, "cannot write '" + tmp + "'");
    f << content;
    if (!f) throw Error(ErrorKind::io_error, "write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::io_error, "cannot rename to '" + path + "': " + ec.message());
}

}  // namespace hardylab
