#pragma once

namespace ffla {

// Kernel selection for F_2 matrices. Bitpacked is the default; Generic forces
// the table-driven path so the two can be compared on identical inputs.
enum class F2Kernel { bitpacked, generic };

F2Kernel f2_kernel();
void set_f2_kernel(F2Kernel k);

struct F2KernelScope {
  explicit F2KernelScope(F2Kernel k) : saved(f2_kernel()) { set_f2_kernel(k); }
  ~F2KernelScope() { set_f2_kernel(saved); }
  F2Kernel saved;
};

}  // namespace ffla
