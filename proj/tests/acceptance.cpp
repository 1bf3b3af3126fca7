// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            criteria 1-8, 10, 11
//   acceptance --long     also criterion 9 (full search for q = 60)
//   acceptance --only N   just criterion N

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_helpers.hpp"
#include "dedekind/classes.hpp"
#include "dedekind/search.hpp"
#include "dedekind/sums.hpp"
#include "dedekind/witness_file.hpp"

namespace {

using dedekind::Integer;
using dedekind::Rational;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = none
  bool long_running;
  std::function<Outcome()> run;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// Parses "q=<q> found=<f>/<p> sums=<n> complete=<bool>".
struct Summary {
  std::uint64_t found = 0, predicted = 0, sums = 0;
  bool complete = false;
};

bool parse_summary(const std::string& line, Summary& s) {
  std::uint64_t q = 0;
  char complete[8] = {};
  if (std::sscanf(line.c_str(), "q=%lu found=%lu/%lu sums=%lu complete=%5s", &q, &s.found,
                  &s.predicted, &s.sums, complete) != 5) {
    return false;
  }
  s.complete = std::string(complete) == "true";
  return true;
}

bool within_factor(double value, double target, double factor) {
  return value >= target / factor && value <= target * factor;
}

Outcome oracle_equivalence() {
  long pairs = 0;
  for (long b = 1; b <= 200; ++b) {
    for (long a = 0; a < b || (b == 1 && a == 0); ++a) {
      if (std::gcd(a, b) != 1) continue;
      ++pairs;
      if (dedekind::dedekind_sum(a, b) != dedekind::dedekind_sum_direct(a, b)) {
        return fail("mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome reciprocity() {
  std::mt19937_64 rng(20240611);
  int checked = 0;
  while (checked < 10000) {
    const Integer a = static_cast<unsigned long>(rng() % 1'000'000'000 + 1);
    const Integer b = static_cast<unsigned long>(rng() % 1'000'000'000 + 1);
    if (dedekind::gcd(a, b) != 1) continue;
    const Rational lhs = dedekind::dedekind_sum(a, b);
    const Rational rhs = -dedekind::dedekind_sum(b, a) + dedekind::make_rational(a, b) +
                         dedekind::make_rational(b, a) + dedekind::make_rational(1, a * b) - 3;
    if (lhs != rhs) return fail("a=" + a.get_str() + " b=" + b.get_str());
    ++checked;
  }
  return {true, "10000 pairs"};
}

Outcome denominator_law() {
  for (long b = 1; b <= 200; ++b) {
    for (long a = 0; a < b || (b == 1 && a == 0); ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Integer expected = Integer(b) / dedekind::gcd(b, Integer(a) * a + 1);
      if (dedekind::dedekind_sum(a, b).get_den() != expected) {
        return fail("a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }
  return {};
}

Outcome decomposition() {
  std::mt19937_64 rng(4);
  int checked = 0;
  while (checked < 1000) {
    const std::uint64_t q = rng() % 50 + 1;
    const std::uint64_t t = rng() % 50 + 1;
    if (std::gcd(q, t) != 1) continue;
    const auto roots = dedekind::sqrt_minus_one(t);
    if (roots.empty()) continue;
    const long root = static_cast<long>(roots[rng() % roots.size()]);
    const long a = ((rng() & 1) ? root : -root) + static_cast<long>(t) * (static_cast<long>(rng() % 200) - 100);
    if (a == 0 || std::gcd(a, static_cast<long>(q)) != 1) continue;
    const Integer qz = static_cast<unsigned long>(q), tz = static_cast<unsigned long>(t);
    const Integer b = qz * (Integer(a) * a + 1) / tz;
    if (dedekind::dedekind_sum_decomposed(qz, tz, a) != dedekind::dedekind_sum(a, b)) {
      return fail("q=" + std::to_string(q) + " t=" + std::to_string(t) + " a=" + std::to_string(a));
    }
    ++checked;
  }
  return {true, "1000 triples"};
}

Outcome shift_closure() {
  std::vector<dedekind::Witness> pool;
  for (std::uint64_t q : {2, 3, 5, 7, 9, 12, 16, 20, 25}) {
    dedekind::SearchConfig c;
    c.q = q;
    for (const auto& [k, w] : dedekind::run_search(c).witnesses) pool.push_back(w);
  }
  std::mt19937_64 rng(9);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(100);
  for (const auto& w : pool) {
    const Integer modulus = static_cast<unsigned long>(dedekind::class_modulus(w.q));
    for (long m = -2; m <= 2; ++m) {
      const auto shifted = dedekind::shift_witness(w, m);
      if (shifted.value.get_num() - w.value.get_num() != modulus * m) {
        return fail("numerator shift wrong for q=" + std::to_string(w.q) + " k=" + std::to_string(w.class_k));
      }
      if (auto r = dedekind::verify_witness(shifted, true); !r) return fail(r.failure);
    }
  }
  return {true, "100 witnesses x 5 shifts"};
}

Outcome golden_table() {
  const std::string expected =
      "1 1 14 78/7 78\n"
      "1 2 35 102/7 102\n"
      "1 3 70 138/7 138\n"
      "2 1 7 30/7 30\n"
      "2 3 35 66/7 66\n"
      "2 5 91 90/7 90\n"
      "5 2 7 6/7 6\n"
      "5 12 203 162/7 162\n"
      "5 17 406 186/7 -150\n"
      "5 22 679 222/7 -114\n"
      "5 27 1022 282/7 -54\n"
      "5 32 1435 318/7 -18\n";
  const auto r = cli_test::run_cli("table7");
  if (r.exit_code != 0) return fail("exit code " + std::to_string(r.exit_code));
  if (r.out != expected) return fail("output differs:\n" + r.out);
  return {true, "12 rows"};
}

Outcome class_counts() {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {
      {7, 12}, {17, 192}, {24, 2300}, {48, 18424}, {60, 28792}};
  std::ostringstream detail;
  for (const auto& [q, expected] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto got = dedekind::class_count(q);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (got != expected) return fail("q=" + std::to_string(q) + " gave " + std::to_string(got));
    if (secs >= 5.0) return fail("q=" + std::to_string(q) + " took " + std::to_string(secs) + " s");
    detail << q << ":" << got << " ";
  }
  return {true, detail.str()};
}

Outcome small_coverage() {
  std::uint64_t sums24 = 0;
  for (std::uint64_t q = 2; q <= 24; ++q) {
    const auto r = cli_test::run_cli("search " + std::to_string(q) + " --deterministic");
    Summary s;
    if (!parse_summary(r.out, s)) return fail("unparsable summary for q=" + std::to_string(q) + ": " + r.out);
    if (r.exit_code != 0 || !s.complete || s.found != s.predicted) {
      return fail("q=" + std::to_string(q) + " incomplete: " + r.out);
    }
    if (q == 24) sums24 = s.sums;
  }
  if (!within_factor(static_cast<double>(sums24), 65000.0, 4.0)) {
    return fail("q=24 sums=" + std::to_string(sums24) + " not within x4 of 65000");
  }
  return {true, "q=24 sums=" + std::to_string(sums24)};
}

Outcome large_coverage() {
  const auto r = cli_test::run_cli("search 60");
  Summary s;
  if (!parse_summary(r.out, s)) return fail("unparsable summary: " + r.out);
  if (r.exit_code != 0 || !s.complete) return fail("incomplete: " + r.out);
  if (!within_factor(static_cast<double>(s.sums), 2.5e6, 4.0)) {
    return fail("sums=" + std::to_string(s.sums) + " not within x4 of 2.5e6");
  }
  return {true, "sums=" + std::to_string(s.sums)};
}

Outcome necessity() {
  long pairs = 0;
  for (long b = 1; b <= 300; ++b) {
    for (long a = 0; a < b || (b == 1 && a == 0); ++a) {
      if (std::gcd(a, b) != 1) continue;
      ++pairs;
      const Rational s = dedekind::dedekind_sum(a, b);
      const std::uint64_t q = s.get_den().get_ui();
      if (q == 1 ? s != 0 : !dedekind::admissible(s.get_num(), q)) {
        return fail("counterexample a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
      if (b % 2 == 1 && !dedekind::dedekind_congruence_holds(a, b)) {
        return fail("mod-8 congruence fails at a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs, 0 counterexamples"};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / ("dedekind_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto p1 = dir / "run1.json", p2 = dir / "run2.json", p8 = dir / "run8.json";
  Outcome out;
  if (cli_test::run_cli("search 7 --deterministic --jobs 1 --out " + p1.string()).exit_code != 0 ||
      cli_test::run_cli("search 7 --deterministic --jobs 1 --out " + p2.string()).exit_code != 0 ||
      cli_test::run_cli("search 7 --jobs 8 --out " + p8.string()).exit_code != 0) {
    out = fail("search failed");
  } else if (cli_test::slurp(p1) != cli_test::slurp(p2)) {
    out = fail("jobs=1 files differ");
  } else if (dedekind::read_report(p1).found() != dedekind::read_report(p8).found()) {
    out = fail("jobs=8 found set differs");
  } else {
    out.detail = "byte-identical, same found set with 8 jobs";
  }
  std::filesystem::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool include_long = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--long") {
      include_long = true;
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--long] [--only N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence, b <= 200", 10, false, oracle_equivalence},
      {2, "reciprocity, 10^4 random pairs <= 10^9", 10, false, reciprocity},
      {3, "reduced denominator b/gcd(b, a^2+1), b <= 200", 0, false, denominator_law},
      {4, "t/q decomposition equals direct evaluation", 0, false, decomposition},
      {5, "class shifts by (q^2-1)q m re-verify", 0, false, shift_closure},
      {6, "table7 golden output", 0, false, golden_table},
      {7, "class counts 12/192/2300/18424/28792", 0, false, class_counts},
      {8, "full coverage 2 <= q <= 24", 300, false, small_coverage},
      {9, "full coverage q = 60", 0, true, large_coverage},
      {10, "necessity of the congruence conditions, b <= 300", 0, false, necessity},
      {11, "deterministic witness files", 0, false, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    if (only == 0 && c.long_running && !include_long) {
      std::cout << "[SKIP] " << std::setw(2) << c.id << "  " << c.name << "  (long-running; use --long)\n";
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o = fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.id << "  " << c.name << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
