#pragma once

// Deterministic plain-text reports with exact literals. Exit status 0 means
// every applicable expectation held, 1 that one was violated.

#include <optional>
#include <string>

#include "scdt/catalog.hpp"
#include "scdt/code.hpp"

namespace scdt {

struct ReportOptions {
  unsigned workers = 1;
  /// Append untrusted 15-digit decimal hints.
  bool approx = false;
  /// Dense |C| x |C| cross-checks for |C| <= 64.
  bool deep = false;
};

struct Report {
  std::string text;
  int exit_code = 0;
};

Report analyze_report(const SphericalCode& code, const ReportOptions& options,
                      const std::optional<ExpectedProfile>& expected = std::nullopt);
Report scheme_report(const SphericalCode& code, const ReportOptions& options);
Report bound_report(const SphericalCode& code, const ReportOptions& options);
Report scan_report(int s, int n_min, int n_max);
Report catalog_list_report(bool extended);

}  // namespace scdt
