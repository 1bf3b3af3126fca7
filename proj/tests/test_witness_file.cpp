#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dedekind/witness_file.hpp"

namespace {

dedekind::CoverageReport search(std::uint64_t q, std::uint64_t max_sums = 10'000'000) {
  dedekind::SearchConfig c;
  c.q = q;
  c.max_sums = max_sums;
  return dedekind::run_search(c);
}

}  // namespace

TEST_CASE("round trip") {
  for (std::uint64_t q : {2, 7, 11, 24}) {
    const auto report = search(q);
    const std::string text = dedekind::serialize_report(report);
    CHECK(dedekind::parse_report(text) == report);
    CHECK(dedekind::serialize_report(dedekind::parse_report(text)) == text);
  }
  const auto partial = search(30, 50);
  CHECK(dedekind::parse_report(dedekind::serialize_report(partial)) == partial);
}

TEST_CASE("big integers survive as decimal strings") {
  auto report = search(7);
  auto shifted = dedekind::shift_witness(report.witnesses.at(78), dedekind::Integer("1000000000000000000000"));
  report.witnesses.at(78) = shifted;
  const auto text = dedekind::serialize_report(report);
  CHECK(text.find(shifted.b.get_str()) != std::string::npos);
  CHECK(dedekind::parse_report(text).witnesses.at(78) == shifted);
  CHECK(dedekind::verify_report(report).ok);
}

TEST_CASE("document layout") {
  const auto text = dedekind::serialize_report(search(7));
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find("\"format\": \"dedekind-witnesses\"") != std::string::npos);
  CHECK(text.find("\"tool_version\"") != std::string::npos);
  CHECK(text.find("\"value\": \"318/7\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
  using dedekind::WitnessFormatError;
  const auto good = dedekind::serialize_report(search(7));
  CHECK_THROWS_AS(dedekind::parse_report("not json"), WitnessFormatError);
  CHECK_THROWS_AS(dedekind::parse_report("[]"), WitnessFormatError);
  CHECK_THROWS_AS(dedekind::parse_report("{\"format\": \"other\"}"), WitnessFormatError);

  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    s.replace(pos, from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(dedekind::parse_report(replace("\"found\": 12", "\"found\": 11")), WitnessFormatError);
  CHECK_THROWS_AS(dedekind::parse_report(replace("\"b\": \"7\"", "\"b\": \"7x\"")), WitnessFormatError);
  CHECK_THROWS_AS(dedekind::parse_report(replace("\"b\": \"7\"", "\"b\": 7")), WitnessFormatError);
  CHECK_THROWS_AS(dedekind::parse_report(replace("\"value\": \"6/7\"", "\"value\": \"6/0\"")), WitnessFormatError);
  CHECK_THROWS_AS(dedekind::parse_report(replace("\"sign\": 1", "\"sign\": 2")), WitnessFormatError);
  CHECK_THROWS_AS(dedekind::parse_report(replace("\"class_k\": 18", "\"class_k\": 6")), WitnessFormatError);
}

TEST_CASE("file I/O") {
  const auto dir = std::filesystem::temp_directory_path() / "dedekind_witness_file_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "w7.json";
  const auto report = search(7);
  dedekind::write_report(path, report);
  CHECK(dedekind::read_report(path) == report);
  CHECK_THROWS_AS(dedekind::read_report(dir / "missing.json"), std::runtime_error);
  CHECK_THROWS_AS(dedekind::write_report(dir / "no" / "such" / "dir.json", report), std::runtime_error);
  std::filesystem::remove_all(dir);
}
