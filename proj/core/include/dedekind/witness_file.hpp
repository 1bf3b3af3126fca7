#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dedekind/search.hpp"

namespace dedekind {

/// Thrown when a witness document cannot be parsed.
class WitnessFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document; big integers and fractions are decimal strings. Output is
/// deterministic for a given report and ends with a newline.
std::string serialize_report(const CoverageReport& report);

CoverageReport parse_report(std::string_view text);

/// Throws std::runtime_error on I/O failure.
void write_report(const std::filesystem::path& path, const CoverageReport& report);
CoverageReport read_report(const std::filesystem::path& path);

std::string_view tool_version();

}  // namespace dedekind
