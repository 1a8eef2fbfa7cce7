#pragma once

#include "algebra/radical.hpp"

namespace modrep {

using algebra::Algebra;
using algebra::Validate;
using ffla::Field;
using ffla::Mat;
using ffla::Row;
using ffla::Subspace;

// Right module over a structure-constant algebra: vectors are rows, the
// action of basis element b_i is v -> v * action(i), and x -> rho(x) is an
// algebra map into row-operator matrices.
class Module {
 public:
  Module(const Algebra& a, uint32_t dim, std::vector<Mat> action, Validate v = Validate::full);

  const Algebra& alg() const { return *a_; }
  const Field& field() const { return a_->field(); }
  uint32_t dim() const { return dim_; }
  const Mat& action(uint32_t i) const { return action_[i]; }

  Mat rho(const Row& x) const;
  Row apply(const Row& v, const Row& x) const;

  uint64_t hash() const;

 private:
  const Algebra* a_;
  uint32_t dim_;
  std::vector<Mat> action_;
};

Module regular_module(const Algebra& a);

bool invariant_subspace(const Module& m, const Subspace& u);
// the induced module on u's basis; u must be invariant
Module submodule_module(const Module& m, const Subspace& u);

struct ModuleQuotient {
  Module mod;
  Mat proj;  // dim(M) x dim(M/U)
  Mat lift;  // dim(M/U) x dim(M)
  Subspace sub;
};
ModuleQuotient quotient_module(const Module& m, const Subspace& u);

Module direct_sum(const Module& a, const Module& b);

// module over op (which must value-equal the opposite algebra) on the dual
// space, all actions transposed
Module dual_module(const Module& m, const Algebra& op);

// annihilator of the radical: the largest semisimple submodule here
Subspace socle(const Module& m, const Subspace* jac = nullptr);
// M * J
Subspace radical_submodule(const Module& m, const Subspace* jac = nullptr);
// M / MJ
ModuleQuotient top(const Module& m, const Subspace* jac = nullptr);

// reinterpret a module over a quotient algebra as one over the source of the
// projection: b_i acts through proj
Module pull_back(const Module& mq, const Algebra& a, const Mat& proj);

}  // namespace modrep
