#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tcent::accept {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult bulk_formula();                     // 1
CriterionResult multi_component();                  // 2
CriterionResult boundary_formula();                 // 3
CriterionResult invariant_table();                  // 4
CriterionResult engine_triangle(uint64_t seed);     // 5
CriterionResult dense_certification(uint64_t seed); // 6
CriterionResult le_ge_inequality(uint64_t seed);    // 7
CriterionResult excitation_contract();              // 8
CriterionResult ssa_suite(uint64_t seed);           // 9

/// Runs the nine criteria in order. Deterministic for a fixed seed.
std::vector<CriterionResult> run_all(uint64_t seed = 1);

std::string format_line(const CriterionResult& r);

}  // namespace tcent::accept
