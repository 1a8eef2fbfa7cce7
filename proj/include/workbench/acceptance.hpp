#pragma once

#include <string>
#include <vector>

namespace workbench {

struct Criterion {
  std::string label;
  bool pass = false;
  std::string detail;  // pass: short stats; fail: the first broken check
};

struct AcceptanceResult {
  std::vector<Criterion> criteria;
  bool all_pass() const;
};

// The twelve checks behind `verify-paper`. Each criterion runs to its own
// verdict; corpus_dir holds the shipped input files.
AcceptanceResult run_acceptance(const std::string& corpus_dir);

// one PASS/FAIL line per criterion plus a summary line
std::string render(const AcceptanceResult& r);

}  // namespace workbench
