#include "planar/report.hpp"

#include <cstdio>

namespace planar {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(const std::complex<double>& v) {
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") + format_double(std::abs(v.imag())) +
         "i";
}

int Report::passed() const {
  int c = 0;
  for (const auto& r : records) c += r.pass ? 1 : 0;
  return c;
}

int Report::failed() const { return static_cast<int>(records.size()) - passed(); }

void Report::merge(const Report& other) {
  for (const auto& r : other.records) records.push_back(r);
  for (const auto& n : other.notes) notes.push_back(other.suite.empty() ? n : other.suite + ": " + n);
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["version"] = "planarcalc 1.0.0";
  j["summary"] = {{"checks", records.size()}, {"passed", passed()}, {"failed", failed()}};
  j["notes"] = notes;
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json rec;
    rec["id"] = r.id;
    rec["anchor"] = r.anchor;
    rec["params"] = r.params;
    rec["expected"] = r.expected;
    rec["got"] = r.got;
    rec["residual"] = format_double(r.residual);
    rec["pass"] = r.pass;
    j["records"].push_back(rec);
  }
  return j;
}

std::string Report::table() const {
  std::string out = "suite: " + suite + "\n";
  for (const auto& r : records) {
    out += (r.pass ? "  pass  " : "  FAIL  ") + r.id;
    if (!r.pass) out += "  expected=" + r.expected + " got=" + r.got;
    out += "\n";
  }
  out += "total " + std::to_string(records.size()) + ", failed " + std::to_string(failed()) + "\n";
  return out;
}

CheckRecord record_bool(const std::string& id, const std::string& anchor, bool pass,
                        nlohmann::json params) {
  CheckRecord r;
  r.id = id;
  r.anchor = anchor;
  r.params = std::move(params);
  r.expected = "true";
  r.got = pass ? "true" : "false";
  r.pass = pass;
  return r;
}

CheckRecord record_residual(const std::string& id, const std::string& anchor, double residual,
                            double tol, nlohmann::json params) {
  CheckRecord r;
  r.id = id;
  r.anchor = anchor;
  r.params = std::move(params);
  r.expected = "residual <= " + format_double(tol);
  r.got = format_double(residual);
  r.residual = residual;
  r.pass = residual <= tol;
  return r;
}

CheckRecord record_value(const std::string& id, const std::string& anchor,
                         const std::string& expected, const std::string& got, bool pass,
                         nlohmann::json params) {
  CheckRecord r;
  r.id = id;
  r.anchor = anchor;
  r.params = std::move(params);
  r.expected = expected;
  r.got = got;
  r.pass = pass;
  return r;
}

}  // namespace planar
