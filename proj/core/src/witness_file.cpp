#include "dedekind/witness_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef DEDEKIND_VERSION
#define DEDEKIND_VERSION "0.0.0"
#endif

namespace dedekind {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "dedekind-witnesses";

Integer parse_integer(const Json& node, const char* field) {
  if (!node.is_string()) {
    throw WitnessFormatError(std::string("field '") + field + "' must be a decimal string");
  }
  const auto& text = node.get_ref<const std::string&>();
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw WitnessFormatError(std::string("field '") + field + "' is not an integer: " + text);
  }
  return out;
}

Rational parse_rational(const Json& node, const char* field) {
  if (!node.is_string()) {
    throw WitnessFormatError(std::string("field '") + field + "' must be a fraction string");
  }
  const auto& text = node.get_ref<const std::string&>();
  Rational out;
  if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw WitnessFormatError(std::string("field '") + field + "' is not a fraction: " + text);
  }
  out.canonicalize();
  return out;
}

std::uint64_t parse_u64(const Json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end() || !it->is_number_unsigned()) {
    throw WitnessFormatError(std::string("missing or invalid unsigned field '") + field + "'");
  }
  return it->get<std::uint64_t>();
}

const Json& require(const Json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end()) {
    throw WitnessFormatError(std::string("missing field '") + field + "'");
  }
  return *it;
}

}  // namespace

std::string_view tool_version() { return DEDEKIND_VERSION; }

std::string serialize_report(const CoverageReport& report) {
  Json doc;
  doc["format"] = kFormatTag;
  doc["tool_version"] = std::string(tool_version());
  doc["q"] = report.q;
  doc["modulus"] = report.modulus;
  doc["predicted"] = report.predicted;
  doc["found"] = report.found_count();
  doc["complete"] = report.complete;
  doc["sums_computed"] = report.sums_computed;
  doc["max_t_reached"] = report.max_t_reached;
  Json records = Json::array();
  for (const auto& [k, w] : report.witnesses) {
    Json rec;
    rec["class_k"] = w.class_k;
    rec["sign"] = w.sign;
    rec["t"] = w.t;
    rec["a"] = w.a.get_str();
    rec["b"] = w.b.get_str();
    rec["value"] = to_string(w.value);
    records.push_back(std::move(rec));
  }
  doc["witnesses"] = std::move(records);
  return doc.dump(2) + "\n";
}

CoverageReport parse_report(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw WitnessFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw WitnessFormatError("top level must be an object");
  }
  const Json& tag = require(doc, "format");
  if (!tag.is_string() || tag.get<std::string>() != kFormatTag) {
    throw WitnessFormatError("not a witness document");
  }
  CoverageReport report;
  report.q = parse_u64(doc, "q");
  report.modulus = parse_u64(doc, "modulus");
  report.predicted = parse_u64(doc, "predicted");
  report.sums_computed = parse_u64(doc, "sums_computed");
  report.max_t_reached = parse_u64(doc, "max_t_reached");
  const Json& complete = require(doc, "complete");
  if (!complete.is_boolean()) {
    throw WitnessFormatError("field 'complete' must be a boolean");
  }
  report.complete = complete.get<bool>();
  const std::uint64_t found = parse_u64(doc, "found");

  const Json& records = require(doc, "witnesses");
  if (!records.is_array()) {
    throw WitnessFormatError("field 'witnesses' must be an array");
  }
  for (const Json& rec : records) {
    if (!rec.is_object()) {
      throw WitnessFormatError("witness records must be objects");
    }
    Witness w;
    w.q = report.q;
    w.class_k = parse_u64(rec, "class_k");
    const Json& sign = require(rec, "sign");
    if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) {
      throw WitnessFormatError("field 'sign' must be 1 or -1");
    }
    w.sign = sign.get<int>();
    w.t = parse_u64(rec, "t");
    w.a = parse_integer(require(rec, "a"), "a");
    w.b = parse_integer(require(rec, "b"), "b");
    w.value = parse_rational(require(rec, "value"), "value");
    if (!report.witnesses.emplace(w.class_k, std::move(w)).second) {
      throw WitnessFormatError("duplicate witness for class " + rec.at("class_k").dump());
    }
  }
  if (found != report.witnesses.size()) {
    throw WitnessFormatError("header says found=" + std::to_string(found) + " but " +
                             std::to_string(report.witnesses.size()) + " witnesses are listed");
  }
  return report;
}

void write_report(const std::filesystem::path& path, const CoverageReport& report) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << serialize_report(report);
  out.close();
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

CoverageReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_report(buffer.str());
}

}  // namespace dedekind
