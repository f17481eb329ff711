#pragma once

#include <cstdint>

#include "planar/report.hpp"

namespace planar {

struct SuiteOptions {
  uint64_t seed = 12345;
  double tol = 1e-9;
  int jw_max = 8;       // largest Jones-Wenzl strand count exercised
  int master_draws = 20;
  bool exact = true;    // allow exact-backend passes where defined
};

Report run_scalars_suite(const SuiteOptions& o);
Report run_tl_suite(const SuiteOptions& o);
Report run_jw_suite(const SuiteOptions& o, const std::string& which = "all");
Report run_rotjw_suite(const SuiteOptions& o);
Report run_annular_suite(const SuiteOptions& o, const std::string& which = "all");
Report run_master_suite(const SuiteOptions& o);
Report run_mult1_suite(const SuiteOptions& o);
Report run_mult2_suite(const SuiteOptions& o, const std::string& which = "all");
Report run_graph_suite(const SuiteOptions& o);
Report run_full_suite(const SuiteOptions& o);

}  // namespace planar
