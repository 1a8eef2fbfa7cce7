#pragma once

#include "invariance/invariance.hpp"
#include "workbench/io.hpp"

namespace workbench {

// One classified module. The id doubles as the sort key of search reports;
// witnesses hold re-checkable negative certificates, one per false flag.
struct ClassificationRecord {
  std::string id;
  uint32_t dim = 0, env_dim = 0, cover_dim = 0;
  bool quasi = false, invariant = false;
  bool dual_quasi = false, dual_invariant = false;
  bool pseudo = false, pseudo_ran = false;
  bool indecomposable = false;
  std::vector<std::pair<uint32_t, uint64_t>> end_blocks;  // (n, center size) of End/J
  std::vector<uint32_t> socle_profile;                    // multiplicity per simple
  uint32_t env_summands = 0;
  uint32_t f2_quotients = 0;
  nlohmann::json witnesses;
};

// content id: hash of the action matrices, in basis order, after changing to
// the basis picked by the rref of the stacked action; ties between whole
// modules are broken downstream by a stable sort
std::string canonical_hash(const Module& m);

// oracle additionally sweeps every endomorphism/unit of the hull and cover
// (where the sweep fits the cap) and insists on agreement
ClassificationRecord classify(const Module& m, const std::vector<Module>& simple_list, bool oracle);

struct SearchResult {
  std::vector<Module> reps;                   // pairwise non-isomorphic
  std::vector<ClassificationRecord> records;  // aligned with reps, sorted by id
};

// Candidates: every nonzero submodule of the multiplicity-free injective
// (one copy of each indecomposable injective) and every nonzero cyclic
// quotient of the regular module, up to max_dim; deduplicated by isomorphism.
SearchResult search_modules(const Algebra& a, uint32_t max_dim, bool oracle);

nlohmann::json record_to_json(const ClassificationRecord& r);
// byte-stable rendering: sorted keys, two-space indent, trailing newline
std::string search_report(const SearchResult& s);

// re-verify a record's identity and stored witnesses against the module;
// throws a validation error naming the first mismatch
void audit_record(const Module& m, const ClassificationRecord& r);

}  // namespace workbench
