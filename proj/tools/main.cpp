#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace dedekind::cli;

  CLI::App app{"Normalized Dedekind sums S(a,b) = 12 s(a,b): evaluation, admissible "
               "numerator classes and witness search"};
  app.require_subcommand(1);

  std::string sum_a, sum_b;
  bool sum_direct = false;
  auto* sum = app.add_subcommand("sum", "Evaluate S(a,b) exactly");
  sum->add_option("a", sum_a, "integer a")->required();
  sum->add_option("b", sum_b, "natural b, coprime to a")->required();
  sum->add_flag("--direct", sum_direct, "use the O(b) defining sum");

  std::string classes_q;
  bool classes_count = false;
  auto* classes = app.add_subcommand("classes", "List admissible numerator classes k mod (q^2-1)q");
  classes->add_option("q", classes_q, "denominator q")->required();
  classes->add_flag("--count", classes_count, "print only the number of classes");

  SearchOptions search_opts;
  std::string out_path;
  auto* search = app.add_subcommand("search", "Find a witness for every admissible class");
  search->add_option("q", search_opts.q, "denominator q")->required();
  search->add_option("--max-sums", search_opts.max_sums, "budget on evaluated sums")
      ->check(CLI::PositiveNumber);
  search->add_option("--max-t", search_opts.max_t, "largest t to enumerate")
      ->check(CLI::PositiveNumber);
  search->add_option("--jobs", search_opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", out_path, "write the witness file here");
  search->add_flag("--deterministic", search_opts.deterministic,
                   "reproducible first witnesses in (t, a1, j) order");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check every witness in a witness file");
  verify->add_option("path", verify_path, "witness file")->required();

  auto* table7 = app.add_subcommand("table7", "Print the first witness per class for q = 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*sum) return cmd_sum(sum_a, sum_b, sum_direct, std::cout, std::cerr);
  if (*classes) return cmd_classes(classes_q, classes_count, std::cout, std::cerr);
  if (*search) {
    if (!out_path.empty()) search_opts.out_path = out_path;
    return cmd_search(search_opts, std::cout, std::cerr);
  }
  if (*verify) return cmd_verify(verify_path, std::cout, std::cerr);
  if (*table7) return cmd_table7(std::cout, std::cerr);
  return kExitError;
}
