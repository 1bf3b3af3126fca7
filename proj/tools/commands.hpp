#pragma once

// Subcommand bodies of the `dedekind` tool, separated from argument parsing
// so tests can drive them with string streams. Each returns the process exit
// code; results go to `out`, diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dedekind/search.hpp"

namespace dedekind::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIncomplete = 2;

int cmd_sum(const std::string& a, const std::string& b, bool direct, std::ostream& out,
            std::ostream& err);

int cmd_classes(const std::string& q, bool count_only, std::ostream& out, std::ostream& err);

struct SearchOptions {
  std::string q;
  std::uint64_t max_sums = SearchConfig{}.max_sums;
  std::uint64_t max_t = SearchConfig{}.max_t;
  unsigned jobs = 1;
  bool deterministic = false;
  std::optional<std::string> out_path;
};

int cmd_search(const SearchOptions& options, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_table7(std::ostream& out, std::ostream& err);

/// "q=<q> found=<f>/<p> sums=<n> complete=<bool>"
std::string summary_line(const CoverageReport& report);

}  // namespace dedekind::cli
