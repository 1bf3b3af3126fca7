#include "commands.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "dedekind/classes.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/sums.hpp"
#include "dedekind/witness_file.hpp"

namespace dedekind::cli {

namespace {

Integer parse_integer(const std::string& text, const char* what) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument(std::string(what) + " is not an integer: '" + text + "'");
  }
  return out;
}

std::uint64_t parse_q(const std::string& text) {
  const Integer q = parse_integer(text, "q");
  if (q < 0 || !q.fits_ulong_p()) {
    throw std::invalid_argument("q must be a natural number, got " + text);
  }
  return q.get_ui();
}

constexpr const char* kIntegerValueNote =
    "q=1: 0 is the only integer value of a normalized Dedekind sum";

}  // namespace

std::string summary_line(const CoverageReport& report) {
  return "q=" + std::to_string(report.q) + " found=" + std::to_string(report.found_count()) + "/" +
         std::to_string(report.predicted) + " sums=" + std::to_string(report.sums_computed) +
         " complete=" + (report.complete ? "true" : "false");
}

int cmd_sum(const std::string& a_text, const std::string& b_text, bool direct, std::ostream& out,
            std::ostream& err) {
  try {
    const Integer a = parse_integer(a_text, "a");
    const Integer b = parse_integer(b_text, "b");
    if (b <= 0) {
      err << "error: b must be positive\n";
      return kExitError;
    }
    const Rational s = direct ? dedekind_sum_direct(a, b) : dedekind_sum(a, b);
    out << to_string(s) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_classes(const std::string& q_text, bool count_only, std::ostream& out, std::ostream& err) {
  try {
    const std::uint64_t q = parse_q(q_text);
    if (q == 0) {
      err << "error: q must be >= 1\n";
      return kExitError;
    }
    if (q == 1) {
      out << kIntegerValueNote << "\n";
      return kExitOk;
    }
    if (count_only) {
      out << class_count(q) << "\n";
      return kExitOk;
    }
    for (const ClassRep& c : admissible_classes(q)) {
      out << c.k << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_search(const SearchOptions& options, std::ostream& out, std::ostream& err) {
  CoverageReport report;
  try {
    const std::uint64_t q = parse_q(options.q);
    if (q == 1) {
      out << kIntegerValueNote << "\n";
      return kExitOk;
    }
    SearchConfig config;
    config.q = q;
    config.max_sums = options.max_sums;
    config.max_t = options.max_t;
    config.jobs = std::max(1u, options.jobs);
    config.deterministic = options.deterministic;
    report = run_search(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (options.out_path) {
    try {
      write_report(*options.out_path, report);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitError;
    }
  }
  out << summary_line(report) << "\n";
  return report.complete ? kExitOk : kExitIncomplete;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  CoverageReport report;
  try {
    report = read_report(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  const VerifyResult result = verify_report(report, /*strict_congruences=*/true);
  if (!result) {
    err << "verify failed: " << result.failure << "\n";
    return kExitError;
  }
  out << "ok: " << report.found_count() << " witnesses verified for q=" << report.q << "\n";
  return kExitOk;
}

int cmd_table7(std::ostream& out, std::ostream& err) {
  try {
    SearchConfig config;
    config.q = 7;
    const CoverageReport report = run_search(config);
    std::vector<const Witness*> rows;
    for (const auto& [k, w] : report.witnesses) rows.push_back(&w);
    std::sort(rows.begin(), rows.end(), [](const Witness* x, const Witness* y) {
      return std::tie(x->t, x->a) < std::tie(y->t, y->a);
    });
    for (const Witness* w : rows) {
      out << w->t << " " << w->a.get_str() << " " << w->b.get_str() << " " << to_string(w->value)
          << " " << (w->sign < 0 ? "-" : "") << w->class_k << "\n";
    }
    return report.complete ? kExitOk : kExitIncomplete;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace dedekind::cli
