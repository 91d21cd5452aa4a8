#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aslab/field.hpp"
#include "aslab/lattice.hpp"

namespace aslab {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::string> failures;  // first few offending cases
  std::vector<std::string> notes;     // skipped instances and similar
  double seconds = 0;
  double time_limit = 0;  // 0 when unlimited
};

/// "A1" .. "A12"
std::vector<std::string> criterion_ids();
/// Throws InvalidArgument for an unknown id.
CriterionResult run_criterion(const std::string& id);

// Parameterized suites shared with `aslab verify`.
struct LatticeComparison {
  CriterionResult result;
  Gram oracle, closed;  // empty when the run aborted
  LatticeReport report;
};
LatticeComparison verify_lattice_iso(std::uint64_t q);
LatticeComparison verify_lattice_noniso(std::uint64_t q, Elem b);
CriterionResult verify_lattice_conjecture(std::uint64_t q);

}  // namespace aslab
