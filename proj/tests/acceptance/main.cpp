// One line per criterion: PASS/FAIL, id, title, summary, wall time.
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "aslab/errors.hpp"
#include "aslab/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<std::string> only;
  bool verbose = false;
  app.add_option("--only", only, "criterion ids, e.g. A5")->delimiter(',');
  app.add_flag("-v,--verbose", verbose, "print notes for skipped instances");
  CLI11_PARSE(app, argc, argv);

  if (only.empty()) only = aslab::criterion_ids();
  int failed = 0;
  for (const auto& id : only) {
    aslab::CriterionResult r;
    try {
      r = aslab::run_criterion(id);
    } catch (const aslab::InvalidArgument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f s", r.seconds);
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << ": " << r.summary << " [" << secs;
    if (r.time_limit > 0) std::cout << ", limit " << r.time_limit << " s";
    std::cout << "]\n";
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    if (verbose || !r.pass)
      for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    std::cout.flush();
    if (!r.pass) ++failed;
  }
  return failed ? 1 : 0;
}
