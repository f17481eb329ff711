#pragma once

#include <json.hpp>

#include <complex>
#include <string>
#include <vector>

namespace planar {

// One verification record: what was checked, which closed form or oracle
// produced the expected value, and the outcome.
struct CheckRecord {
  std::string id;
  std::string anchor;  // formula/oracle identifier ("oracle" when brute-forced)
  nlohmann::json params;
  std::string expected;
  std::string got;
  double residual = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;
  std::vector<std::string> notes;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void note(std::string s) { notes.push_back(std::move(s)); }
  void merge(const Report& other);

  nlohmann::json to_json() const;
  std::string table() const;
};

std::string format_double(double v);
std::string format_complex(const std::complex<double>& v);

// convenience builders
CheckRecord record_bool(const std::string& id, const std::string& anchor, bool pass,
                        nlohmann::json params = nlohmann::json::object());
CheckRecord record_residual(const std::string& id, const std::string& anchor, double residual,
                            double tol, nlohmann::json params = nlohmann::json::object());
CheckRecord record_value(const std::string& id, const std::string& anchor,
                         const std::string& expected, const std::string& got, bool pass,
                         nlohmann::json params = nlohmann::json::object());

}  // namespace planar
